//! Cycles and paths: stored small colorings, the two insertion operations,
//! the 1-paired pipeline, and the minimum colorings derived from it.
//!
//! A cycle coloring is handled as the color sequence read along the cycle
//! `0, 1, ..., n-1`; the graph is always the canonical [`FamilySpec::Cycle`]
//! instance. Inserting after position `p` shifts the labels of later vertices.

use super::{ColoredGraph, ConstructError};
use crate::bounds::{a2, bracket, ell};
use crate::graph::{family_graph, FamilySpec, Vertex};
use crate::verify::{Color, Coloring};

const C9_BASE: [Color; 9] = [1, 2, 1, 2, 3, 2, 3, 1, 3];

fn small_cycle(n: usize) -> Option<&'static [Color]> {
    Some(match n {
        3 => &[1, 2, 3],
        4 => &[1, 2, 3, 4],
        5 => &[1, 2, 1, 2, 3],
        6 => &[1, 2, 1, 2, 3, 4],
        7 => &[1, 2, 1, 2, 3, 2, 3],
        8 => &[1, 2, 1, 2, 3, 2, 3, 4],
        9 => &C9_BASE,
        _ => return None,
    })
}

fn small_path(n: usize) -> Option<&'static [Color]> {
    Some(match n {
        2 => &[1, 2],
        3 => &[1, 2, 3],
        4 => &[1, 2, 1, 3],
        5 => &[1, 2, 1, 3, 1],
        6 => &[1, 2, 1, 3, 2, 3],
        7 => &[1, 2, 1, 3, 1, 3, 2],
        8 => &[1, 2, 1, 3, 1, 3, 2, 3],
        9 => &[1, 2, 3, 2, 3, 1, 3, 1, 2],
        _ => return None,
    })
}

fn k_of(colors: &[Color]) -> usize {
    colors.iter().copied().max().unwrap_or(0) as usize
}

fn cycle_graph(
    colors: Vec<Color>,
    provenance: Vec<String>,
) -> Result<ColoredGraph, ConstructError> {
    let graph = family_graph(&FamilySpec::Cycle(colors.len()))?;
    let coloring = Coloring::new(k_of(&colors), colors)?;
    ColoredGraph::verified(graph, coloring, provenance)
}

fn path_graph(colors: Vec<Color>, provenance: Vec<String>) -> Result<ColoredGraph, ConstructError> {
    let graph = family_graph(&FamilySpec::Path(colors.len()))?;
    let coloring = Coloring::new(k_of(&colors), colors)?;
    ColoredGraph::verified(graph, coloring, provenance)
}

/// Stored minimum NL-coloring of `P_2..P_9` or `C_3..C_9`. The `C_9` coloring
/// is 1-paired and contains the run `1,2,1,2,3,2,3`.
pub fn base_small_coloring(spec: &FamilySpec) -> Result<ColoredGraph, ConstructError> {
    spec.validate()?;
    let (colors, build): (_, fn(_, _) -> _) = match *spec {
        FamilySpec::Path(n) => (small_path(n), path_graph),
        FamilySpec::Cycle(n) => (small_cycle(n), cycle_graph),
        _ => (None, cycle_graph),
    };
    let colors =
        colors.ok_or_else(|| ConstructError::Unsupported(format!("no stored base for {spec}")))?;
    build(
        colors.to_vec(),
        vec![format!("stored base coloring of {spec}")],
    )
}

fn neighbor_colors(seq: &[Color], i: usize) -> (Color, Color) {
    let n = seq.len();
    let a = seq[(i + n - 1) % n];
    let b = seq[(i + 1) % n];
    (a.min(b), a.max(b))
}

fn cd(seq: &[Color], i: usize) -> usize {
    let (a, b) = neighbor_colors(seq, i);
    if a == b {
        1
    } else {
        2
    }
}

#[cfg(test)]
fn degree_one_count(seq: &[Color]) -> usize {
    (0..seq.len()).filter(|&i| cd(seq, i) == 1).count()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InsertOp {
    /// One new vertex colored `h` between two color-degree-1 vertices.
    Op1 { h: Color },
    /// Two new vertices colored `j, i` between color-degree-2 vertices
    /// colored `i` and `j`.
    Op2,
}

/// An edge `(p, p + 1 mod n)` of a cycle together with the operation to
/// apply there. The endpoints may be given in either order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct InsertionSite {
    pub edge: (Vertex, Vertex),
    pub op: InsertOp,
}

/// Position `p` such that the edge is `(p, p + 1 mod n)`.
fn edge_position(n: usize, (u, v): (Vertex, Vertex)) -> Option<usize> {
    if u >= n || v >= n {
        None
    } else if (u + 1) % n == v {
        Some(u)
    } else if (v + 1) % n == u {
        Some(v)
    } else {
        None
    }
}

fn precondition(msg: String) -> ConstructError {
    ConstructError::Precondition(msg)
}

/// Applies an insertion to a color sequence, checking the local
/// preconditions. The caller verifies the result.
fn insert(seq: &[Color], p: usize, op: InsertOp) -> Result<(Vec<Color>, String), ConstructError> {
    let n = seq.len();
    let q = (p + 1) % n;
    let (i, j) = (seq[p], seq[q]);
    if i == j {
        return Err(precondition(format!("edge ({p}, {q}) is monochromatic")));
    }
    let (new, what) = match op {
        InsertOp::Op1 { h } => {
            if cd(seq, p) != 1 || cd(seq, q) != 1 {
                return Err(precondition(format!(
                    "OP1 needs color-degree 1 at both ends of ({p}, {q})"
                )));
            }
            if h == i || h == j || h == 0 {
                return Err(precondition(format!(
                    "OP1 color {h} must differ from the endpoint colors {i} and {j}"
                )));
            }
            (vec![h], format!("OP1 h={h} on ({p}, {q}) colored {i},{j}"))
        }
        InsertOp::Op2 => {
            if cd(seq, p) != 2 || cd(seq, q) != 2 {
                return Err(precondition(format!(
                    "OP2 needs color-degree 2 at both ends of ({p}, {q})"
                )));
            }
            let realized = (0..n).any(|v| {
                cd(seq, v) == 1 && {
                    let (a, _) = neighbor_colors(seq, v);
                    (seq[v] == i && a == j) || (seq[v] == j && a == i)
                }
            });
            if realized {
                return Err(precondition(format!(
                    "OP2 pair {{{i},{j}}} is already realized by a color-degree-1 vertex"
                )));
            }
            (vec![j, i], format!("OP2 on ({p}, {q}) colored {i},{j}"))
        }
    };
    let mut out = Vec::with_capacity(n + new.len());
    out.extend_from_slice(&seq[..=p]);
    out.extend(new);
    out.extend_from_slice(&seq[p + 1..]);
    Ok((out, what))
}

fn apply_op(cg: &ColoredGraph, site: InsertionSite) -> Result<ColoredGraph, ConstructError> {
    let n = cg.graph().n();
    if cg.graph() != &family_graph(&FamilySpec::Cycle(n.max(3)))? {
        return Err(precondition(
            "insertions act on canonically labeled cycles".into(),
        ));
    }
    let p = edge_position(n, site.edge)
        .ok_or_else(|| precondition(format!("{:?} is not a cycle edge", site.edge)))?;
    let (seq, what) = insert(cg.coloring().colors(), p, site.op)?;
    let mut provenance = cg.provenance().to_vec();
    provenance.push(what);
    cycle_graph(seq, provenance)
}

/// OP1: subdivides an edge between adjacent color-degree-1 vertices with a
/// vertex colored `h`. The result is re-verified.
pub fn op1_insert(cg: &ColoredGraph, site: InsertionSite) -> Result<ColoredGraph, ConstructError> {
    if !matches!(site.op, InsertOp::Op1 { .. }) {
        return Err(precondition("op1_insert needs an OP1 site".into()));
    }
    apply_op(cg, site)
}

/// OP2: inserts two vertices colored `j, i` between adjacent color-degree-2
/// vertices colored `i, j`. The result is re-verified.
pub fn op2_insert(cg: &ColoredGraph, site: InsertionSite) -> Result<ColoredGraph, ConstructError> {
    if site.op != InsertOp::Op2 {
        return Err(precondition("op2_insert needs an OP2 site".into()));
    }
    apply_op(cg, site)
}

/// One stage of the pipeline: a cycle coloring and the step that made it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Stage {
    pub colors: Vec<Color>,
    pub step: String,
}

/// All 1-paired k-colorings of cycles of order `ℓ(k-1) + 1 ..= ℓ(k)` except
/// `ℓ(k) - 1`, built by OP1 steps followed by two OP2 chains.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclePipeline {
    k: usize,
    base: Vec<Color>,
    op1: Vec<Stage>,
    even: Vec<Stage>,
    odd: Vec<Stage>,
}

fn verify_seq(seq: &[Color], what: &str) -> Result<(), ConstructError> {
    cycle_graph(seq.to_vec(), vec![what.to_string()]).map(|_| ())
}

fn pair_site(seq: &[Color], i: Color, j: Color) -> Option<usize> {
    let n = seq.len();
    (0..n).find(|&p| {
        let q = (p + 1) % n;
        let (a, b) = (seq[p].min(seq[q]), seq[p].max(seq[q]));
        (a, b) == (i, j) && cd(seq, p) == 2 && cd(seq, q) == 2
    })
}

fn op2_chain(
    start: &[Color],
    pairs: impl IntoIterator<Item = (Color, Color, Option<usize>)>,
) -> Result<Vec<Stage>, ConstructError> {
    let mut seq = start.to_vec();
    let mut out = Vec::new();
    for (i, j, forced) in pairs {
        let p = match forced {
            Some(p) => p,
            None => pair_site(&seq, i, j).ok_or_else(|| ConstructError::CrossCheck {
                what: format!("OP2 chain on C_{}", seq.len()),
                detail: format!("no edge colored {{{i},{j}}} between color-degree-2 vertices"),
            })?,
        };
        let (next, step) = insert(&seq, p, InsertOp::Op2)?;
        verify_seq(&next, &step)?;
        seq = next;
        out.push(Stage {
            colors: seq.clone(),
            step,
        });
    }
    Ok(out)
}

impl CyclePipeline {
    pub fn build(k: usize) -> Result<Self, ConstructError> {
        if k < 4 {
            return Err(ConstructError::Unsupported(format!(
                "the cycle pipeline starts at k = 4, got {k}"
            )));
        }
        let base = if k == 4 {
            C9_BASE.to_vec()
        } else {
            CyclePipeline::build(k - 1)?
                .even
                .last()
                .expect("even chain is nonempty")
                .colors
                .clone()
        };
        let h = k as Color;

        let mut op1 = Vec::new();
        let mut seq = base.clone();
        let steps = (k - 1) * (k - 2) / 2;
        for _ in 0..steps {
            let n = seq.len();
            let p = (0..n)
                .find(|&p| cd(&seq, p) == 1 && cd(&seq, (p + 1) % n) == 1)
                .ok_or_else(|| ConstructError::CrossCheck {
                    what: format!("OP1 chain on C_{n}"),
                    detail: "no adjacent color-degree-1 pair left".into(),
                })?;
            let (next, step) = insert(&seq, p, InsertOp::Op1 { h })?;
            verify_seq(&next, &step)?;
            seq = next;
            op1.push(Stage {
                colors: seq.clone(),
                step,
            });
        }

        let full = seq;
        let n = full.len();
        let u = (0..n)
            .find(|&v| full[v] == 2 && neighbor_colors(&full, v) == (1, 3))
            .ok_or_else(|| ConstructError::CrossCheck {
                what: format!("C_{n}"),
                detail: "no vertex colored 2 between colors 1 and 3".into(),
            })?;
        let before = (u + n - 1) % n;
        // p is the position of the first endpoint of edge (p, p+1)
        let (p12, p23) = if full[before] == 1 {
            (before, u)
        } else {
            (u, before)
        };
        // the first insertion shifts positions at or after p12 + 1 by two
        let shift = |p: usize| if p > p12 { p + 2 } else { p };
        let mut pairs = vec![(1, 2, Some(p12)), (2, 3, Some(shift(p23)))];
        for i in 1..=h {
            for j in i + 1..=h {
                if (i, j) != (1, 2) && (i, j) != (2, 3) {
                    pairs.push((i, j, None));
                }
            }
        }
        let even = op2_chain(&full, pairs)?;

        let almost = if steps >= 2 {
            op1[steps - 2].colors.clone()
        } else {
            base.clone()
        };
        let m = almost.len();
        let open = (0..m)
            .find(|&p| cd(&almost, p) == 1 && cd(&almost, (p + 1) % m) == 1)
            .expect("one OP1 step remains");
        let skip = (
            almost[open].min(almost[(open + 1) % m]),
            almost[open].max(almost[(open + 1) % m]),
        );
        let mut odd_pairs = Vec::new();
        for i in 1..=h {
            for j in i + 1..=h {
                if (i, j) != skip {
                    odd_pairs.push((i, j, None));
                }
            }
        }
        let odd = op2_chain(&almost, odd_pairs)?;

        Ok(CyclePipeline {
            k,
            base,
            op1,
            even,
            odd,
        })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// The (k-1)-coloring of `C_{ℓ(k-1)}` the pipeline starts from.
    pub fn base(&self) -> &[Color] {
        &self.base
    }

    pub fn op1_stages(&self) -> &[Stage] {
        &self.op1
    }

    pub fn even_stages(&self) -> &[Stage] {
        &self.even
    }

    pub fn odd_stages(&self) -> &[Stage] {
        &self.odd
    }

    /// The stage of order `n`, with the steps leading to it.
    fn locate(&self, n: usize) -> Option<(&[Color], Vec<String>)> {
        let trace = |chain: &[Stage], upto: usize| -> Vec<String> {
            chain[..=upto].iter().map(|s| s.step.clone()).collect()
        };
        let a2 = self.op1.last()?.colors.len();
        let first = self.base.len() + 1;
        if (first..=a2).contains(&n) {
            let idx = n - first;
            return Some((&self.op1[idx].colors, trace(&self.op1, idx)));
        }
        if n <= a2 {
            return None;
        }
        let (chain, prefix_len, start) = if (n - a2).is_multiple_of(2) {
            (&self.even, self.op1.len(), a2)
        } else {
            (&self.odd, self.op1.len() - 1, a2 - 1)
        };
        let idx = (n - start) / 2 - 1;
        let stage = chain.get(idx)?;
        let mut steps = trace(&self.op1, prefix_len - 1);
        steps.extend(trace(chain, idx));
        Some((&stage.colors, steps))
    }
}

fn check_range(k: usize, n: usize) -> Result<(), ConstructError> {
    if k < 4 {
        return Err(ConstructError::Unsupported(format!(
            "k must be at least 4, got {k}"
        )));
    }
    let (lo, hi) = (ell(k as u64 - 1)? as usize, ell(k as u64)? as usize);
    if n <= lo || n > hi {
        return Err(ConstructError::Unsupported(format!(
            "n = {n} is outside ℓ({}) < n <= ℓ({k}) = {lo}..{hi}",
            k - 1
        )));
    }
    if n + 1 == hi {
        return Err(ConstructError::Unsupported(format!(
            "n = ℓ({k}) - 1 = {n} has no 1-paired {k}-coloring from the pipeline"
        )));
    }
    Ok(())
}

/// A 1-paired k-NL-coloring of `C_n` for `ℓ(k-1) < n <= ℓ(k)`, `n != ℓ(k) - 1`.
pub fn one_paired_cycle_coloring(k: usize, n: usize) -> Result<ColoredGraph, ConstructError> {
    check_range(k, n)?;
    let pipeline = CyclePipeline::build(k)?;
    let (colors, steps) = pipeline
        .locate(n)
        .ok_or_else(|| ConstructError::Unsupported(format!("no pipeline stage of order {n}")))?;
    let mut provenance = vec![format!("1-paired base C_{}", pipeline.base.len())];
    provenance.extend(steps);
    cycle_graph(colors.to_vec(), provenance)
}

/// A minimum NL-coloring of `C_n`, `n >= 3`.
pub fn cycle_coloring(n: usize) -> Result<ColoredGraph, ConstructError> {
    FamilySpec::Cycle(n).validate()?;
    if n <= 9 {
        return base_small_coloring(&FamilySpec::Cycle(n));
    }
    let k = bracket(n as u64) as usize;
    if n + 1 == ell(k as u64)? as usize {
        let smaller = one_paired_cycle_coloring(k, n - 1)?;
        let (_, coloring, mut provenance) = smaller.into_parts();
        let mut colors = coloring.into_colors();
        colors.push(k as Color + 1);
        provenance.push(format!(
            "subdivide edge ({}, 0) with color {}",
            n - 2,
            k + 1
        ));
        return cycle_graph(colors, provenance);
    }
    one_paired_cycle_coloring(k, n)
}

fn find_run(seq: &[Color]) -> Option<usize> {
    const RUN: [Color; 7] = [1, 2, 1, 2, 3, 2, 3];
    let n = seq.len();
    (0..n)
        .find(|&p| {
            (0..7).all(|t| seq[(p + t) % n] == RUN[t])
                || (0..7).all(|t| seq[(p + t) % n] == RUN[6 - t])
        })
        .map(|p| (p + 3) % n)
}

fn rotate_from(seq: &[Color], start: usize, len: usize) -> Vec<Color> {
    (0..len).map(|t| seq[(start + t) % seq.len()]).collect()
}

/// A minimum NL-coloring of `P_n`, `n >= 2`.
pub fn path_coloring(n: usize) -> Result<ColoredGraph, ConstructError> {
    FamilySpec::Path(n).validate()?;
    if n <= 9 {
        return base_small_coloring(&FamilySpec::Path(n));
    }
    let k = bracket(n as u64) as usize;
    let l = ell(k as u64)? as usize;
    if n + 1 == l {
        let (_, coloring, mut provenance) = one_paired_cycle_coloring(k, l)?.into_parts();
        let seq = coloring.into_colors();
        let mid = find_run(&seq).ok_or_else(|| ConstructError::CrossCheck {
            what: format!("C_{l}"),
            detail: "no run 1,2,1,2,3,2,3".into(),
        })?;
        provenance.push(format!(
            "remove vertex {mid} (middle of the run 1,2,1,2,3,2,3)"
        ));
        return path_graph(rotate_from(&seq, mid + 1, n), provenance);
    }
    let (_, coloring, mut provenance) = one_paired_cycle_coloring(k, n)?.into_parts();
    let seq = coloring.into_colors();
    let p = if n == a2(k as u64)? as usize {
        0
    } else {
        (0..n)
            .find(|&p| cd(&seq, p) == 1 && cd(&seq, (p + 1) % n) == 1)
            .ok_or_else(|| ConstructError::CrossCheck {
                what: format!("C_{n}"),
                detail: "no adjacent color-degree-1 pair".into(),
            })?
    };
    provenance.push(format!("delete edge ({p}, {})", (p + 1) % n));
    path_graph(rotate_from(&seq, p + 1, n), provenance)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::chi_closed_form;
    use crate::verify::{extremal_audit, is_1_paired};

    #[test]
    fn bases_have_minimum_colors() {
        for n in 2..=9 {
            let p = base_small_coloring(&FamilySpec::Path(n)).unwrap();
            assert_eq!(p.k(), chi_closed_form(&FamilySpec::Path(n)).unwrap());
        }
        for n in 3..=9 {
            let c = base_small_coloring(&FamilySpec::Cycle(n)).unwrap();
            assert_eq!(c.k(), chi_closed_form(&FamilySpec::Cycle(n)).unwrap());
        }
        let c9 = base_small_coloring(&FamilySpec::Cycle(9)).unwrap();
        assert!(is_1_paired(c9.graph(), c9.coloring()).unwrap());
        assert!(base_small_coloring(&FamilySpec::Cycle(10)).is_err());
        assert!(base_small_coloring(&FamilySpec::Star(4)).is_err());
    }

    #[test]
    fn op1_on_c9() {
        let c9 = base_small_coloring(&FamilySpec::Cycle(9)).unwrap();
        // vertices 1 and 2 are colored 2, 1 with color-degree 1
        let c10 = op1_insert(
            &c9,
            InsertionSite {
                edge: (2, 1),
                op: InsertOp::Op1 { h: 4 },
            },
        )
        .unwrap();
        assert_eq!((c10.graph().n(), c10.k()), (10, 4));
        let bad = op1_insert(
            &c9,
            InsertionSite {
                edge: (1, 2),
                op: InsertOp::Op1 { h: 2 },
            },
        );
        assert!(matches!(bad, Err(ConstructError::Precondition(_))));
        let not_edge = op1_insert(
            &c9,
            InsertionSite {
                edge: (0, 2),
                op: InsertOp::Op1 { h: 4 },
            },
        );
        assert!(not_edge.is_err());
    }

    #[test]
    fn op2_rejects_realized_pair() {
        let mut tried = 0;
        for n in 10..=22 {
            let cg = one_paired_cycle_coloring(4, n).unwrap();
            let seq = cg.coloring().colors().to_vec();
            let realized = |i: Color, j: Color| {
                (0..n).any(|v| {
                    cd(&seq, v) == 1 && {
                        let (a, _) = neighbor_colors(&seq, v);
                        (seq[v], a) == (i, j) || (seq[v], a) == (j, i)
                    }
                })
            };
            for p in 0..n {
                let q = (p + 1) % n;
                if cd(&seq, p) == 2 && cd(&seq, q) == 2 && realized(seq[p], seq[q]) {
                    let r = op2_insert(
                        &cg,
                        InsertionSite {
                            edge: (p, q),
                            op: InsertOp::Op2,
                        },
                    );
                    assert!(matches!(r, Err(ConstructError::Precondition(_))));
                    tried += 1;
                }
            }
        }
        assert!(tried > 0);
    }

    #[test]
    fn pipeline_for_k4() {
        let p = CyclePipeline::build(4).unwrap();
        assert_eq!(p.op1_stages().len(), 3);
        let c12 = &p.op1_stages()[2].colors;
        assert_eq!(c12.len(), 12);
        assert_eq!(degree_one_count(c12), 0);
        assert_eq!(p.even_stages().len(), 6);
        assert_eq!(p.even_stages().last().unwrap().colors.len(), 24);
        let mut prev = degree_one_count(p.base());
        for s in p.op1_stages() {
            assert_eq!(degree_one_count(&s.colors) + 2, prev);
            prev = degree_one_count(&s.colors);
        }
        let mut prev = 0;
        for s in p.even_stages() {
            assert_eq!(degree_one_count(&s.colors), prev + 2);
            prev = degree_one_count(&s.colors);
        }
    }

    #[test]
    fn one_paired_range_k4() {
        for n in 10..=24 {
            let r = one_paired_cycle_coloring(4, n);
            if n == 23 {
                assert!(r.is_err());
                continue;
            }
            let cg = r.unwrap();
            assert_eq!((cg.graph().n(), cg.k()), (n, 4));
            assert!(is_1_paired(cg.graph(), cg.coloring()).unwrap(), "n = {n}");
        }
        let c24 = one_paired_cycle_coloring(4, 24).unwrap();
        let audit = extremal_audit(c24.graph(), c24.coloring()).unwrap();
        for c in 1..=4 {
            assert_eq!(audit.class(c).class_size, 6);
            assert_eq!(audit.count(c, 1), 3);
            assert_eq!(audit.count(c, 2), 3);
        }
        assert!(find_run(c24.coloring().colors()).is_some());
        assert!(one_paired_cycle_coloring(4, 9).is_err());
        assert!(one_paired_cycle_coloring(4, 25).is_err());
    }

    #[test]
    fn cycles_and_paths_match_closed_form() {
        for n in 3..=60 {
            let c = cycle_coloring(n).unwrap();
            assert_eq!(
                c.k(),
                chi_closed_form(&FamilySpec::Cycle(n)).unwrap(),
                "C_{n}"
            );
            assert_eq!(c.graph().n(), n);
        }
        for n in 2..=60 {
            let p = path_coloring(n).unwrap();
            assert_eq!(
                p.k(),
                chi_closed_form(&FamilySpec::Path(n)).unwrap(),
                "P_{n}"
            );
            assert_eq!(p.graph().n(), n);
        }
        assert_eq!(cycle_coloring(23).unwrap().k(), 5);
        assert_eq!(path_coloring(23).unwrap().k(), 4);
    }
}
