//! Complete backtracking search for k-NL-colorings.
//!
//! Vertices are colored in descending-degree order (ties by index). A partial
//! assignment is cut as soon as
//! * two adjacent vertices share a color,
//! * a class holds more vertices of degree `<= d` than there are nonempty
//!   color sets of size `<= d` avoiding the class color,
//! * a vertex whose closed neighborhood is fully colored repeats the neighbor
//!   color set of another such vertex in its class, or
//! * too few vertices remain to use every color.
//!
//! With symmetry breaking on, a vertex may only take an already used color or
//! the smallest unused one.

use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use rayon::prelude::*;

use crate::bounds::binomial;
use crate::graph::Graph;

/// Largest number of colors the search supports (signatures are `u64` masks).
pub const MAX_SEARCH_COLORS: usize = 63;

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Outcome {
    Found(Vec<u32>),
    Infeasible,
    Aborted,
}

pub(crate) struct Limits<'a> {
    pub deadline: Option<Instant>,
    pub stop: &'a AtomicBool,
}

impl Limits<'_> {
    fn expired(&self) -> bool {
        if self.stop.load(Ordering::Relaxed) {
            return true;
        }
        if self.deadline.is_some_and(|d| Instant::now() >= d) {
            self.stop.store(true, Ordering::Relaxed);
            return true;
        }
        false
    }
}

struct Frame {
    completed: Vec<u8>,
    prev_max: u8,
}

#[derive(Clone)]
struct Search<'g> {
    g: &'g Graph,
    k: usize,
    symmetry: bool,
    order: Vec<usize>,
    colors: Vec<u8>,
    uncolored_nbrs: Vec<usize>,
    bucket: Vec<usize>,
    // per color, vertex count per degree bucket min(deg, k - 1)
    bucket_counts: Vec<Vec<usize>>,
    // capacity[d] = number of vertices of color-degree <= d a class can hold
    capacity: Vec<u64>,
    class_sigs: Vec<Vec<u64>>,
    used: Vec<usize>,
    unused_colors: usize,
    max_used: u8,
    nodes: u64,
}

impl<'g> Search<'g> {
    fn new(g: &'g Graph, k: usize, symmetry: bool) -> Self {
        let n = g.n();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
        let top = k.saturating_sub(1);
        let capacity: Vec<u64> = (0..=top)
            .map(|d| {
                if d == 0 {
                    1
                } else {
                    (1..=d as u64).map(|j| binomial(top as u64, j)).sum()
                }
            })
            .collect();
        Search {
            g,
            k,
            symmetry,
            order,
            colors: vec![0; n],
            uncolored_nbrs: (0..n).map(|v| g.degree(v)).collect(),
            bucket: (0..n).map(|v| g.degree(v).min(top)).collect(),
            bucket_counts: vec![vec![0; top + 1]; k + 1],
            capacity,
            class_sigs: vec![Vec::new(); k + 1],
            used: vec![0; k + 1],
            unused_colors: k,
            max_used: 0,
            nodes: 0,
        }
    }

    fn capacity_ok(&self, c: usize, from: usize) -> bool {
        let counts = &self.bucket_counts[c];
        let mut prefix: usize = counts[..from].iter().sum();
        for (d, &count) in counts.iter().enumerate().skip(from) {
            prefix += count;
            if prefix as u64 > self.capacity[d] {
                return false;
            }
        }
        true
    }

    fn complete(&mut self, w: usize, frame: &mut Frame) -> bool {
        let mask = self
            .g
            .neighbors(w)
            .iter()
            .fold(0u64, |m, &x| m | 1u64 << self.colors[x]);
        let cls = self.colors[w] as usize;
        if self.class_sigs[cls].contains(&mask) {
            return false;
        }
        self.class_sigs[cls].push(mask);
        frame.completed.push(cls as u8);
        true
    }

    fn try_assign(&mut self, v: usize, c: u8) -> Option<Frame> {
        if self.g.neighbors(v).iter().any(|&w| self.colors[w] == c) {
            return None;
        }
        let ci = c as usize;
        let b = self.bucket[v];
        self.bucket_counts[ci][b] += 1;
        if !self.capacity_ok(ci, b) {
            self.bucket_counts[ci][b] -= 1;
            return None;
        }
        self.colors[v] = c;
        if self.used[ci] == 0 {
            self.unused_colors -= 1;
        }
        self.used[ci] += 1;
        let mut frame = Frame {
            completed: Vec::new(),
            prev_max: self.max_used,
        };
        self.max_used = self.max_used.max(c);
        for i in 0..self.g.degree(v) {
            let w = self.g.neighbors(v)[i];
            self.uncolored_nbrs[w] -= 1;
        }
        let mut ok = self.uncolored_nbrs[v] != 0 || self.complete(v, &mut frame);
        if ok {
            for i in 0..self.g.degree(v) {
                let w = self.g.neighbors(v)[i];
                if self.colors[w] != 0
                    && self.uncolored_nbrs[w] == 0
                    && !self.complete(w, &mut frame)
                {
                    ok = false;
                    break;
                }
            }
        }
        if !ok {
            self.undo(v, frame);
            return None;
        }
        Some(frame)
    }

    fn undo(&mut self, v: usize, frame: Frame) {
        for &cls in frame.completed.iter().rev() {
            self.class_sigs[cls as usize].pop();
        }
        for i in 0..self.g.degree(v) {
            let w = self.g.neighbors(v)[i];
            self.uncolored_nbrs[w] += 1;
        }
        let ci = self.colors[v] as usize;
        self.used[ci] -= 1;
        if self.used[ci] == 0 {
            self.unused_colors += 1;
        }
        self.bucket_counts[ci][self.bucket[v]] -= 1;
        self.colors[v] = 0;
        self.max_used = frame.prev_max;
    }

    fn choices(&self) -> u8 {
        if self.symmetry {
            (self.max_used as usize + 1).min(self.k) as u8
        } else {
            self.k as u8
        }
    }

    fn enough_left(&self, depth: usize) -> bool {
        self.unused_colors <= self.g.n() - depth
    }

    fn dfs(&mut self, depth: usize, limits: &Limits) -> Outcome {
        self.nodes += 1;
        if self.nodes.is_multiple_of(1024) && limits.expired() {
            return Outcome::Aborted;
        }
        if depth == self.order.len() {
            return Outcome::Found(self.colors.iter().map(|&c| c as u32).collect());
        }
        let v = self.order[depth];
        for c in 1..=self.choices() {
            if let Some(frame) = self.try_assign(v, c) {
                if self.enough_left(depth + 1) {
                    match self.dfs(depth + 1, limits) {
                        Outcome::Infeasible => {}
                        other => return other,
                    }
                }
                self.undo(v, frame);
            }
        }
        Outcome::Infeasible
    }

    /// Feasible color prefixes for the first `depth` vertices of the order.
    fn frontier(&mut self, depth: usize, prefix: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if prefix.len() == depth {
            out.push(prefix.clone());
            return;
        }
        let v = self.order[prefix.len()];
        for c in 1..=self.choices() {
            if let Some(frame) = self.try_assign(v, c) {
                prefix.push(c);
                if self.enough_left(prefix.len()) {
                    self.frontier(depth, prefix, out);
                }
                prefix.pop();
                self.undo(v, frame);
            }
        }
    }
}

pub(crate) struct SearchRun {
    pub outcome: Outcome,
    pub nodes: u64,
}

/// Runs the complete search for a k-NL-coloring of `g` (all k colors used).
pub(crate) fn search(
    g: &Graph,
    k: usize,
    symmetry: bool,
    parallel: bool,
    deadline: Option<Instant>,
) -> SearchRun {
    assert!(k <= MAX_SEARCH_COLORS);
    if k == 0 || k > g.n() {
        return SearchRun {
            outcome: Outcome::Infeasible,
            nodes: 0,
        };
    }
    let stop = AtomicBool::new(false);
    let limits = Limits {
        deadline,
        stop: &stop,
    };
    let mut root = Search::new(g, k, symmetry);
    if !parallel {
        let outcome = root.dfs(0, &limits);
        return SearchRun {
            outcome,
            nodes: root.nodes,
        };
    }

    let target = 8 * rayon::current_num_threads().max(1);
    let mut depth = 1;
    let mut prefixes = Vec::new();
    while depth <= g.n() {
        prefixes.clear();
        root.frontier(depth, &mut Vec::new(), &mut prefixes);
        if prefixes.len() >= target || prefixes.is_empty() || depth == g.n() {
            break;
        }
        depth += 1;
    }

    let found: Mutex<Option<Vec<u32>>> = Mutex::new(None);
    let aborted = AtomicBool::new(false);
    let found_flag = AtomicBool::new(false);
    let nodes: u64 = prefixes
        .par_iter()
        .map(|prefix| {
            if stop.load(Ordering::Relaxed) {
                aborted.store(true, Ordering::Relaxed);
                return 0;
            }
            let mut s = Search::new(g, k, symmetry);
            for (i, &c) in prefix.iter().enumerate() {
                let v = s.order[i];
                s.try_assign(v, c).expect("frontier prefixes are feasible");
            }
            match s.dfs(prefix.len(), &limits) {
                Outcome::Found(colors) => {
                    found_flag.store(true, Ordering::Relaxed);
                    stop.store(true, Ordering::Relaxed);
                    let mut slot = found.lock().expect("witness lock");
                    if slot.is_none() {
                        *slot = Some(colors);
                    }
                }
                Outcome::Aborted => aborted.store(true, Ordering::Relaxed),
                Outcome::Infeasible => {}
            }
            s.nodes
        })
        .sum();

    let outcome = if found_flag.load(Ordering::Relaxed) {
        Outcome::Found(
            found
                .into_inner()
                .expect("witness lock")
                .expect("witness stored"),
        )
    } else if aborted.load(Ordering::Relaxed) {
        Outcome::Aborted
    } else {
        Outcome::Infeasible
    };
    SearchRun {
        outcome,
        nodes: nodes + root.nodes,
    }
}
