//! The k-coloring of the comb `B_{k(k-1)}` and its reference signature table.
//!
//! The spine is split into `k` groups `M_1..M_k` of `k - 1` consecutive
//! vertices; the leaves hanging from `M_r` are colored `r`. `v_l^r` denotes the
//! spine vertex of `M_r` colored `l`.

use super::{ColoredGraph, ConstructError};
use crate::graph::{family_graph, FamilySpec};
use crate::verify::{neighbor_signature, Color, Coloring};

fn wrap(x: i64, k: i64) -> Color {
    ((x - 1).rem_euclid(k) + 1) as Color
}

/// Spine colors of the comb, group by group.
pub fn comb_spine_colors(k: usize) -> Result<Vec<Color>, ConstructError> {
    if k < 5 {
        return Err(ConstructError::Unsupported(format!(
            "the comb coloring needs k >= 5, got {k}"
        )));
    }
    let ki = k as i64;
    let mut spine = Vec::with_capacity(k * (k - 1));
    for r in 1..=ki {
        let start = if r % 2 == 0 { r + 1 } else { r - 2 };
        let mut group = Vec::with_capacity(k - 1);
        let mut c = wrap(start, ki);
        while group.len() < k - 1 {
            if c as i64 != r {
                group.push(c);
            }
            c = wrap(c as i64 - 1, ki);
        }
        if r == ki && r % 2 == 1 {
            group[k - 4..].copy_from_slice(&[k as Color - 1, 1, 2]);
        }
        spine.extend(group);
    }
    Ok(spine)
}

/// Group index `r` (1-based) of spine vertex `i`.
pub(crate) fn group_of(k: usize, i: usize) -> Color {
    (i / (k - 1)) as Color + 1
}

/// A k-NL-coloring of the comb `B_{k(k-1)}`, `k >= 5`. Every spine signature
/// is checked against [`comb_signature_expected`].
pub fn comb_coloring(k: usize) -> Result<ColoredGraph, ConstructError> {
    let spine = comb_spine_colors(k)?;
    let m = spine.len();
    let graph = family_graph(&FamilySpec::Comb(m))?;
    let mut colors = spine.clone();
    colors.extend((0..m).map(|i| group_of(k, i)));
    let coloring = Coloring::new(k, colors)?;
    let cg = ColoredGraph::verified(
        graph,
        coloring,
        vec![format!("comb B_{m} colored from {k} spine groups")],
    )?;
    for (i, &l) in spine.iter().enumerate() {
        let r = group_of(k, i);
        if let Some(expected) = comb_signature_expected(k, l, r) {
            let actual = neighbor_signature(cg.graph(), cg.coloring(), i);
            if actual != expected {
                return Err(ConstructError::CrossCheck {
                    what: format!("comb coloring k={k}"),
                    detail: format!("v_{l}^{r} has {actual:?}, table gives {expected:?}"),
                });
            }
        }
    }
    Ok(cg)
}

struct Block {
    rows: Vec<(i64, Vec<i64>)>,
    default: [i64; 2],
    excluded: Vec<i64>,
}

fn block(rows: Vec<(i64, Vec<i64>)>, default: [i64; 2], excluded: Vec<i64>) -> Block {
    Block {
        rows,
        default,
        excluded,
    }
}

fn reference_block(k: i64, l: i64) -> Option<Block> {
    let even = k % 2 == 0;
    Some(match l {
        1 => block(
            vec![
                (2, vec![2, 3, k]),
                (3, vec![3, 4, k]),
                (
                    k,
                    if even {
                        vec![k - 2, k - 1, k]
                    } else {
                        vec![2, k - 2, k - 1]
                    },
                ),
            ],
            [2, k],
            vec![2, 3, 4],
        ),
        2 => block(
            vec![
                (1, vec![1, 3, k]),
                (3, vec![3, 4, 5]),
                (k, if even { vec![3, k] } else { vec![1, k] }),
            ],
            [1, 3],
            vec![1, 3, k],
        ),
        3 if k < 6 => return None,
        3 => block(
            vec![
                (2, vec![1, 2, k]),
                (4, vec![2, 4, 5]),
                (5, vec![2, 5, 6]),
                (
                    k - 1,
                    if even {
                        vec![2, 4, k - 1]
                    } else {
                        vec![2, k - 1, k]
                    },
                ),
                (
                    k,
                    if even {
                        vec![2, 4, k]
                    } else {
                        vec![4, k - 1, k]
                    },
                ),
            ],
            [2, 4],
            vec![2, 4, 5, k - 1, k],
        ),
        _ if l == k - 1 && even => block(
            vec![
                (1, vec![1, k - 2]),
                (k - 2, vec![k - 4, k - 3, k - 2]),
                (k, vec![1, k - 2, k]),
            ],
            [k - 2, k],
            vec![1, k - 2, k],
        ),
        _ if l == k - 1 => block(
            vec![
                (1, vec![1, k - 2]),
                (k - 3, vec![k - 4, k - 3, k]),
                (k - 2, vec![k - 3, k - 2, k]),
                (k, vec![1, 3, k]),
            ],
            [k - 2, k],
            vec![1, k - 3, k - 2, k],
        ),
        _ if l == k && even => block(
            vec![
                (1, vec![1, 2, 3]),
                (k - 2, vec![1, k - 3, k - 2]),
                (k - 1, vec![1, k - 2, k - 1]),
            ],
            [1, k - 1],
            vec![1, k - 2, k - 1],
        ),
        _ if l == k => block(
            vec![(1, vec![1, 2, 3]), (k - 1, vec![k - 3, k - 2, k - 1])],
            [1, k - 1],
            vec![1, k - 1],
        ),
        _ if l % 2 == 0 => block(
            vec![
                (l - 1, vec![l - 2, l - 1, l + 1]),
                (l + 1, vec![l + 1, l + 2, l + 3]),
                (l - 2, vec![l - 3, l - 2, l + 1]),
            ],
            [l - 1, l + 1],
            vec![l - 2, l - 1, l + 1],
        ),
        _ => block(
            vec![
                (l - 1, vec![l - 3, l - 2, l - 1]),
                (l + 1, vec![l - 1, l + 1, l + 2]),
                (l + 2, vec![l - 1, l + 2, l + 3]),
            ],
            [l - 1, l + 1],
            vec![l - 1, l + 1, l + 2],
        ),
    })
}

fn color_set(k: i64, xs: impl IntoIterator<Item = i64>) -> Vec<Color> {
    let mut s: Vec<Color> = xs.into_iter().map(|x| wrap(x, k)).collect();
    s.sort_unstable();
    s.dedup();
    s
}

/// Neighbor colors of `v_l^r` as originally tabulated, or `None` where the
/// table has no entry (no block for `l`, or an excluded `r` with no row).
/// The first matching row wins.
pub fn comb_signature_table(k: usize, l: Color, r: Color) -> Option<Vec<Color>> {
    if k < 5 || l == 0 || r == 0 || l as usize > k || r as usize > k || l == r {
        return None;
    }
    let (k, l, r) = (k as i64, l as i64, r as i64);
    let b = reference_block(k, l)?;
    for (key, set) in &b.rows {
        if wrap(*key, k) as i64 == r {
            return Some(color_set(k, set.iter().copied()));
        }
    }
    if b.excluded.iter().any(|&x| wrap(x, k) as i64 == r) {
        return None;
    }
    Some(color_set(k, [r, b.default[0], b.default[1]]))
}

/// A cell where the tabulated neighbor colors disagree with the construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CombErratum {
    pub l: Color,
    pub r: Color,
    pub tabulated: Option<Vec<Color>>,
    pub corrected: Vec<Color>,
    pub note: &'static str,
}

/// The known-wrong cells of the tabulated comb signatures for a given `k`.
pub fn comb_signature_errata(k: usize) -> Vec<CombErratum> {
    if k < 5 {
        return Vec::new();
    }
    let kc = k as Color;
    let mut out = Vec::new();
    let mut push = |l: Color, r: Color, corrected: Vec<Color>, note| {
        out.push(CombErratum {
            l,
            r,
            tabulated: comb_signature_table(k, l, r),
            corrected,
            note,
        })
    };
    if k >= 6 {
        push(
            1,
            4,
            vec![2, 4, kc],
            "l=1 default row excludes 4 instead of k",
        );
    }
    if k % 2 == 1 {
        push(
            1,
            kc - 1,
            vec![2, kc - 2, kc - 1],
            "l=1 odd-k row belongs to r=k-1",
        );
        push(
            1,
            kc,
            vec![2, kc - 1, kc],
            "l=1 odd k: r=k follows the default",
        );
        if k >= 7 {
            push(
                3,
                kc - 1,
                vec![2, 4, kc - 1],
                "l=3 odd k: r=k-1 follows the default",
            );
        }
    }
    out
}

/// Tabulated neighbor colors with the errata applied.
pub fn comb_signature_expected(k: usize, l: Color, r: Color) -> Option<Vec<Color>> {
    comb_signature_errata(k)
        .into_iter()
        .find(|e| e.l == l && e.r == r)
        .map(|e| e.corrected)
        .or_else(|| comb_signature_table(k, l, r))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::degree_stats;

    #[test]
    fn spine_sequences() {
        assert_eq!(
            comb_spine_colors(5).unwrap(),
            [4, 3, 2, 5, 3, 1, 5, 4, 1, 5, 4, 2, 5, 3, 2, 1, 3, 4, 1, 2]
        );
        assert_eq!(
            comb_spine_colors(6).unwrap(),
            [
                5, 4, 3, 2, 6, 3, 1, 6, 5, 4, 1, 6, 5, 4, 2, 5, 3, 2, 1, 6, 3, 2, 1, 6, 4, 1, 5, 4,
                3, 2
            ]
        );
        assert!(comb_spine_colors(4).is_err());
    }

    #[test]
    fn comb_orders_and_classes() {
        for k in 5..=11 {
            let cg = comb_coloring(k).unwrap();
            let m = k * (k - 1);
            assert_eq!(cg.graph().n(), 2 * m);
            assert_eq!(degree_stats(cg.graph()).leaves, m);
            let spine = &cg.coloring().colors()[..m];
            for c in 1..=k as Color {
                assert_eq!(spine.iter().filter(|&&x| x == c).count(), k - 1);
            }
        }
    }

    #[test]
    fn k6_group_five_color_one() {
        let cg = comb_coloring(6).unwrap();
        let i = (0..30)
            .find(|&i| group_of(6, i) == 5 && cg.coloring().color(i) == 1)
            .unwrap();
        assert_eq!(neighbor_signature(cg.graph(), cg.coloring(), i), [2, 5, 6]);
    }

    #[test]
    fn table_differs_from_construction_exactly_at_errata() {
        for k in 5..=13 {
            let cg = comb_coloring(k).unwrap();
            let m = k * (k - 1);
            let errata = comb_signature_errata(k);
            for i in 0..m {
                let (l, r) = (cg.coloring().color(i), group_of(k, i));
                let actual = neighbor_signature(cg.graph(), cg.coloring(), i);
                let is_erratum = errata.iter().any(|e| (e.l, e.r) == (l, r));
                let tabulated = comb_signature_table(k, l, r);
                if k == 5 && l == 3 {
                    assert_eq!(tabulated, None);
                    continue;
                }
                assert_eq!(
                    tabulated.as_ref() != Some(&actual),
                    is_erratum,
                    "k={k} l={l} r={r}"
                );
                assert_eq!(comb_signature_expected(k, l, r), Some(actual));
            }
        }
    }
}
