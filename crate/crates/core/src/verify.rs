//! Colorings and the neighbor-locating check.

use std::collections::{BTreeMap, HashMap};

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, Vertex};

/// Colors are `1..=k`.
pub type Color = u32;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColoringError {
    #[error("vertex {vertex} has color {color}, outside 1..={k}")]
    ColorOutOfRange {
        vertex: Vertex,
        color: Color,
        k: usize,
    },
    #[error("color {0} is not used by any vertex")]
    UnusedColor(Color),
    #[error("coloring has {found} entries but the graph has {expected} vertices")]
    LengthMismatch { expected: usize, found: usize },
    #[error("coloring is not neighbor-locating: {0}")]
    NotNeighborLocating(NLFailure),
}

/// A total assignment of colors `1..=k` in which every color is used.
/// Properness is not part of the invariant.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Coloring {
    k: usize,
    colors: Vec<Color>,
}

impl Coloring {
    pub fn new(k: usize, colors: Vec<Color>) -> Result<Self, ColoringError> {
        let mut used = vec![false; k + 1];
        for (vertex, &color) in colors.iter().enumerate() {
            if color == 0 || color as usize > k {
                return Err(ColoringError::ColorOutOfRange { vertex, color, k });
            }
            used[color as usize] = true;
        }
        if let Some(c) = (1..=k).find(|&c| !used[c]) {
            return Err(ColoringError::UnusedColor(c as Color));
        }
        Ok(Coloring { k, colors })
    }

    /// Takes `k` to be the largest color present.
    pub fn from_colors(colors: Vec<Color>) -> Result<Self, ColoringError> {
        let k = colors.iter().copied().max().unwrap_or(0) as usize;
        Coloring::new(k, colors)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    pub fn color(&self, v: Vertex) -> Color {
        self.colors[v]
    }

    pub fn into_colors(self) -> Vec<Color> {
        self.colors
    }

    /// Vertices colored `c`, ascending.
    pub fn class(&self, c: Color) -> Vec<Vertex> {
        (0..self.colors.len())
            .filter(|&v| self.colors[v] == c)
            .collect()
    }

    /// Applies a permutation of the color names: color `c` becomes `perm[c - 1]`.
    pub fn permute_colors(&self, perm: &[Color]) -> Result<Self, ColoringError> {
        Coloring::new(
            self.k,
            self.colors.iter().map(|&c| perm[c as usize - 1]).collect(),
        )
    }

    pub fn check_length(&self, g: &Graph) -> Result<(), ColoringError> {
        if self.len() == g.n() {
            Ok(())
        } else {
            Err(ColoringError::LengthMismatch {
                expected: g.n(),
                found: self.len(),
            })
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum FailureReason {
    NotProper,
    DuplicateSignature,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct NLFailure {
    pub reason: FailureReason,
    pub witness: (Vertex, Vertex),
}

impl std::fmt::Display for NLFailure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let (u, v) = self.witness;
        match self.reason {
            FailureReason::NotProper => write!(f, "adjacent vertices {u} and {v} share a color"),
            FailureReason::DuplicateSignature => write!(
                f,
                "vertices {u} and {v} share a color and the same neighbor colors"
            ),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NLVerdict {
    pub failure: Option<NLFailure>,
}

impl NLVerdict {
    pub fn ok(&self) -> bool {
        self.failure.is_none()
    }

    pub fn into_result(self) -> Result<(), NLFailure> {
        match self.failure {
            None => Ok(()),
            Some(f) => Err(f),
        }
    }
}

/// Sorted set of colors on the neighbors of `v`.
pub fn neighbor_signature(g: &Graph, c: &Coloring, v: Vertex) -> Vec<Color> {
    let mut sig: Vec<Color> = g.neighbors(v).iter().map(|&w| c.color(w)).collect();
    sig.sort_unstable();
    sig.dedup();
    sig
}

pub fn color_degree(g: &Graph, c: &Coloring, v: Vertex) -> usize {
    neighbor_signature(g, c, v).len()
}

/// Decides whether `c` is a neighbor-locating coloring of `g`. On failure the
/// witness is the lexicographically smallest violating pair `(u, v)`, `u < v`.
///
/// Panics if `c` does not have one entry per vertex.
pub fn is_nl_coloring(g: &Graph, c: &Coloring) -> NLVerdict {
    assert_eq!(c.len(), g.n(), "coloring length must match vertex count");
    let mut best: Option<NLFailure> = None;
    let mut consider = |cand: NLFailure| {
        if best.is_none_or(|b| cand.witness < b.witness) {
            best = Some(cand);
        }
    };
    for &(u, v) in g.edges() {
        if c.color(u) == c.color(v) {
            consider(NLFailure {
                reason: FailureReason::NotProper,
                witness: (u, v),
            });
            break; // edges are sorted, later ones cannot be smaller
        }
    }
    let mut first_seen: HashMap<(Color, Vec<Color>), Vertex> = HashMap::new();
    let mut pair_for_group: HashMap<Vertex, Vertex> = HashMap::new();
    for v in 0..g.n() {
        let key = (c.color(v), neighbor_signature(g, c, v));
        match first_seen.get(&key) {
            Some(&u) => {
                pair_for_group.entry(u).or_insert(v);
            }
            None => {
                first_seen.insert(key, v);
            }
        }
    }
    for (&u, &v) in &pair_for_group {
        let reason = if g.has_edge(u, v) {
            FailureReason::NotProper
        } else {
            FailureReason::DuplicateSignature
        };
        consider(NLFailure {
            reason,
            witness: (u, v),
        });
    }
    NLVerdict { failure: best }
}

/// True iff every color-degree-1 vertex has a neighbor of color-degree 1.
/// Only defined for neighbor-locating colorings.
pub fn is_1_paired(g: &Graph, c: &Coloring) -> Result<bool, ColoringError> {
    if let Some(f) = is_nl_coloring(g, c).failure {
        return Err(ColoringError::NotNeighborLocating(f));
    }
    let cd: Vec<usize> = (0..g.n()).map(|v| color_degree(g, c, v)).collect();
    Ok((0..g.n())
        .filter(|&v| cd[v] == 1)
        .all(|v| g.neighbors(v).iter().any(|&w| cd[w] == 1)))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ClassCensus {
    pub color: Color,
    pub class_size: usize,
    pub count_by_color_degree: BTreeMap<usize, usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassAudit {
    pub classes: Vec<ClassCensus>,
}

impl ClassAudit {
    pub fn class(&self, c: Color) -> &ClassCensus {
        &self.classes[c as usize - 1]
    }

    pub fn count(&self, c: Color, color_degree: usize) -> usize {
        self.class(c)
            .count_by_color_degree
            .get(&color_degree)
            .copied()
            .unwrap_or(0)
    }
}

/// Per-class census of vertices by color-degree.
pub fn extremal_audit(g: &Graph, c: &Coloring) -> Result<ClassAudit, ColoringError> {
    if let Some(f) = is_nl_coloring(g, c).failure {
        return Err(ColoringError::NotNeighborLocating(f));
    }
    let mut classes: Vec<ClassCensus> = (1..=c.k() as Color)
        .map(|color| ClassCensus {
            color,
            class_size: 0,
            count_by_color_degree: BTreeMap::new(),
        })
        .collect();
    for v in 0..g.n() {
        let census = &mut classes[c.color(v) as usize - 1];
        census.class_size += 1;
        *census
            .count_by_color_degree
            .entry(color_degree(g, c, v))
            .or_insert(0) += 1;
    }
    Ok(ClassAudit { classes })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CapacityViolation {
    pub color: Color,
    pub color_degree: usize,
    pub count: usize,
    pub limit: u64,
}

/// Necessary condition for any NL-coloring: a class holds at most
/// `C(k-1, j)` vertices of color-degree `j`. Returns the first class and
/// color-degree that exceed it.
pub fn capacity_violation(g: &Graph, c: &Coloring) -> Option<CapacityViolation> {
    let mut counts: BTreeMap<(Color, usize), usize> = BTreeMap::new();
    for v in 0..g.n() {
        *counts
            .entry((c.color(v), color_degree(g, c, v)))
            .or_insert(0) += 1;
    }
    counts.into_iter().find_map(|((color, j), count)| {
        let limit = crate::bounds::binomial(c.k() as u64 - 1, j as u64);
        (count as u64 > limit).then_some(CapacityViolation {
            color,
            color_degree: j,
            count,
            limit,
        })
    })
}
