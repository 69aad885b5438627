//! The extremal unicyclic graph `U_k` and the extremal caterpillar `T_k`.

use super::comb::{comb_coloring, group_of};
use super::cycles::one_paired_cycle_coloring;
use super::{ColoredGraph, ConstructError};
use crate::bounds::{a1, a2};
use crate::graph::{family_graph, FamilySpec, Graph, Vertex};
use crate::verify::{neighbor_signature, Color, Coloring};

/// Colors of `U_k` in the numbering of [`FamilySpec::UnicyclicU`]: the
/// opened cycle `0..a2` runs from `y` (color k-1) to `x` (color 2), the comb
/// spine follows, then the leaves.
fn unicyclic_colors(k: usize) -> Result<Vec<Color>, ConstructError> {
    let n = a2(k as u64)? as usize;
    let cycle = one_paired_cycle_coloring(k, n)?;
    let seq = cycle.coloring().colors();
    let (x2, y) = (2, k as Color - 1);
    let p = (0..n)
        .find(|&p| {
            let (a, b) = (seq[p], seq[(p + 1) % n]);
            (a, b) == (x2, y) || (a, b) == (y, x2)
        })
        .ok_or_else(|| ConstructError::CrossCheck {
            what: format!("C_{n}"),
            detail: format!("no edge colored {{2,{y}}}"),
        })?;
    let path: Vec<Color> = if seq[p] == x2 {
        (1..=n).map(|t| seq[(p + t) % n]).collect()
    } else {
        (0..n).map(|t| seq[(p + n - t) % n]).collect()
    };
    let comb = comb_coloring(k)?;
    let m = k * (k - 1);
    let spine = &comb.coloring().colors()[..m];
    let mut colors = path;
    colors.extend_from_slice(spine);
    colors.extend((0..m).map(|i| group_of(k, i)));
    Ok(colors)
}

/// `U_k`, `k >= 5`: a k-NL-colored unicyclic graph of order `2 a1(k) + a2(k)`.
pub fn unicyclic_extremal(k: usize) -> Result<ColoredGraph, ConstructError> {
    if k < 5 {
        return Err(ConstructError::Unsupported(format!(
            "U_k needs k >= 5, got {k}"
        )));
    }
    let graph = family_graph(&FamilySpec::UnicyclicU(k))?;
    let colors = unicyclic_colors(k)?;
    let cg = ColoredGraph::verified(
        graph,
        Coloring::new(k, colors)?,
        vec![format!(
            "U_{k}: all-color-degree-2 C_{} joined to the colored comb B_{}",
            a2(k as u64)?,
            a1(k as u64)?
        )],
    )?;
    let (n2, m) = (a2(k as u64)? as usize, a1(k as u64)? as usize);
    let kc = k as Color;
    let expect = [
        (n2, vec![1, 2, kc - 2]),
        (
            n2 + m - 1,
            if k.is_multiple_of(2) {
                vec![3, kc - 1, kc]
            } else {
                vec![1, kc - 1, kc]
            },
        ),
    ];
    for (v, sig) in expect {
        let actual = neighbor_signature(cg.graph(), cg.coloring(), v);
        if actual != sig {
            return Err(ConstructError::CrossCheck {
                what: format!("U_{k}"),
                detail: format!("junction vertex {v} has {actual:?}, expected {sig:?}"),
            });
        }
    }
    Ok(cg)
}

/// One of the four comb vertices whose neighborhood changes in `T_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpliceCell {
    /// `(l, r)`: the spine vertex of group `r` colored `l`.
    pub vertex: (Color, Color),
    pub tabulated: Vec<Color>,
    pub corrected: Vec<Color>,
}

/// Neighbor colors of the four spliced comb vertices of `T_k`, as tabulated
/// and with known errata applied.
pub fn splice_signature_table(k: usize) -> Vec<SpliceCell> {
    let kc = k as Color;
    let odd = k % 2 == 1;
    let cell = |vertex, tabulated: Vec<Color>, corrected: Vec<Color>| SpliceCell {
        vertex,
        tabulated,
        corrected,
    };
    let near_end = if k >= 7 {
        vec![2, kc - 3, kc]
    } else {
        vec![1, 2, 6]
    };
    vec![
        cell(
            (1, kc - 1),
            vec![3, kc - 1, kc],
            if odd {
                vec![3, kc - 2, kc - 1]
            } else {
                vec![3, kc - 1, kc]
            },
        ),
        cell(
            (3, kc - 1),
            vec![1, 4, kc - 1],
            if k == 6 {
                vec![1, 5, 6]
            } else {
                vec![1, 4, kc - 1]
            },
        ),
        cell((kc - 2, 2), near_end.clone(), near_end),
        cell((kc, 2), vec![1, 2, kc - 2], vec![1, 2, kc - 2]),
    ]
}

fn splice_check(
    k: usize,
    graph: &Graph,
    coloring: &Coloring,
    spine_of: &[Option<usize>],
) -> Result<(), String> {
    for cell in splice_signature_table(k) {
        let (l, r) = cell.vertex;
        let v = (0..graph.n())
            .find(|&v| spine_of[v].is_some_and(|s| group_of(k, s) == r) && coloring.color(v) == l)
            .ok_or_else(|| format!("no spine vertex v_{l}^{r}"))?;
        let actual = neighbor_signature(graph, coloring, v);
        if actual != cell.corrected {
            return Err(format!(
                "v_{l}^{r} has {actual:?}, expected {:?}",
                cell.corrected
            ));
        }
    }
    Ok(())
}

/// `T_k`, `k >= 6`: a k-NL-colored caterpillar of order `2 a1(k) + a2(k) - 2`,
/// obtained from `U_k` by removing two spine vertices with their leaves,
/// opening the cycle, and hanging two new leaves at the cut.
pub fn caterpillar_extremal(k: usize) -> Result<ColoredGraph, ConstructError> {
    if k < 6 {
        return Err(ConstructError::Unsupported(format!(
            "T_k needs k >= 6, got {k}"
        )));
    }
    let u_k = unicyclic_extremal(k)?;
    let (n2, m) = (a2(k as u64)? as usize, a1(k as u64)? as usize);
    let ell = n2 + m;
    let kc = k as Color;
    let colors = u_k.coloring().colors();
    let spine_vertex = |l: Color, r: Color| -> Result<usize, ConstructError> {
        (0..m)
            .find(|&s| group_of(k, s) == r && colors[n2 + s] == l)
            .ok_or_else(|| ConstructError::CrossCheck {
                what: format!("U_{k}"),
                detail: format!("no spine vertex v_{l}^{r}"),
            })
    };
    let xs = spine_vertex(kc - 1, 2)?;
    let ys = spine_vertex(2, kc - 1)?;
    let removed = [n2 + xs, ell + xs, n2 + ys, ell + ys];
    let mut edges: Vec<(Vertex, Vertex)> = u_k
        .graph()
        .edges()
        .iter()
        .copied()
        .filter(|&(a, b)| !removed.contains(&a) && !removed.contains(&b))
        .collect();
    edges.push((n2 + xs - 1, n2 + xs + 1));
    edges.push((n2 + ys - 1, n2 + ys + 1));

    let total = u_k.graph().n();
    let mut degree = vec![0usize; total];
    for &(a, b) in &edges {
        degree[a] += 1;
        degree[b] += 1;
    }
    let mut candidates: Vec<(Vertex, Vertex)> = edges
        .iter()
        .flat_map(|&(a, b)| [(a, b), (b, a)])
        .filter(|&(u, v)| degree[u] == 2 && colors[u] == 2 && degree[v] == 3 && colors[v] == kc - 1)
        .collect();
    candidates.sort_unstable();

    let keep: Vec<Vertex> = (0..total).filter(|v| !removed.contains(v)).collect();
    let mut label = vec![usize::MAX; total];
    for (new, &old) in keep.iter().enumerate() {
        label[old] = new;
    }
    let n = keep.len() + 2;
    let mut spine_of: Vec<Option<usize>> = keep
        .iter()
        .map(|&v| (n2..ell).contains(&v).then(|| v - n2))
        .collect();
    spine_of.extend([None, None]);
    let mut new_colors: Vec<Color> = keep.iter().map(|&v| colors[v]).collect();
    new_colors.extend([kc - 1, 2]);
    let coloring = Coloring::new(k, new_colors)?;

    let mut last_failure =
        String::from("no edge joins a degree-2 vertex colored 2 to a degree-3 vertex colored k-1");
    for (u, v) in candidates {
        let tree_edges = edges
            .iter()
            .copied()
            .filter(|&e| e != (u.min(v), u.max(v)) && e != (u.max(v), u.min(v)))
            .map(|(a, b)| (label[a], label[b]))
            .chain([(label[u], n - 2), (label[v], n - 1)]);
        let graph = Graph::new(n, tree_edges)?;
        let provenance = vec![
            u_k.provenance()[0].clone(),
            format!(
                "T_{k}: remove v_{}^2, v_2^{} with their leaves; cut ({u}, {v}); hang leaves colored {} and 2",
                k - 1,
                k - 1,
                k - 1
            ),
        ];
        match ColoredGraph::verified(graph, coloring.clone(), provenance) {
            Ok(cg) => match splice_check(k, cg.graph(), cg.coloring(), &spine_of) {
                Ok(()) => return Ok(cg),
                Err(detail) => last_failure = detail,
            },
            Err(e) => last_failure = e.to_string(),
        }
    }
    Err(ConstructError::CrossCheck {
        what: format!("T_{k}"),
        detail: last_failure,
    })
}
