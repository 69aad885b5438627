//! NL-colorings of arbitrary trees with at most `n - 2` colors unless the
//! tree is a star.

use super::{ColoredGraph, ConstructError};
use crate::graph::{diameter, Graph, Vertex};
use crate::verify::{Color, Coloring};

fn path_between(t: &Graph, x: Vertex, y: Vertex) -> Vec<Vertex> {
    let dist = t.distances_from(y);
    let mut path = vec![x];
    let mut cur = x;
    while cur != y {
        let d = dist[cur].expect("trees are connected");
        cur = *t
            .neighbors(cur)
            .iter()
            .find(|&&w| dist[w] == Some(d - 1))
            .expect("a neighbor is closer to y");
        path.push(cur);
    }
    path
}

/// An NL-coloring of a tree of order at least 5: `n` colors for a star,
/// `s + 1` for a double star whose larger side has `s` leaves, and `n - 2`
/// when the diameter is at least 4.
pub fn generic_tree_coloring(t: &Graph) -> Result<ColoredGraph, ConstructError> {
    let n = t.n();
    if t.edge_count() + 1 != n {
        return Err(ConstructError::Unsupported("input is not a tree".into()));
    }
    if n < 5 {
        return Err(ConstructError::Unsupported(format!(
            "tree colorings need order >= 5, got {n}"
        )));
    }
    let d = diameter(t);
    let (colors, what): (Vec<Color>, String) = match d {
        2 => (
            (1..=n as Color).collect(),
            "star: all colors distinct".into(),
        ),
        3 => {
            let centers: Vec<Vertex> = (0..n).filter(|&v| t.degree(v) > 1).collect();
            let (mut u, mut v) = (centers[0], centers[1]);
            if t.degree(u) > t.degree(v) {
                std::mem::swap(&mut u, &mut v);
            }
            let s = t.degree(v) - 1;
            let mut colors = vec![0; n];
            colors[v] = s as Color + 1;
            colors[u] = 1;
            for (c, &w) in (1..).zip(t.neighbors(v).iter().filter(|&&w| w != u)) {
                colors[w] = c;
            }
            for (c, &w) in (2..).zip(t.neighbors(u).iter().filter(|&&w| w != v)) {
                colors[w] = c;
            }
            (colors, format!("double star: {} colors", s + 1))
        }
        _ => {
            let (x, y) = (0..n)
                .flat_map(|x| {
                    let dist = t.distances_from(x);
                    (x + 1..n)
                        .filter(move |&y| dist[y] == Some(4))
                        .map(move |y| (x, y))
                })
                .next()
                .expect("diameter at least 4 gives a pair at distance 4");
            let path = path_between(t, x, y);
            let b = path[2];
            let mut colors = vec![0; n];
            for v in [x, b, y] {
                colors[v] = 1;
            }
            for (c, slot) in (2..).zip(colors.iter_mut().filter(|c| **c == 0)) {
                *slot = c;
            }
            (
                colors,
                format!("x={x}, b={b}, y={y} share color 1; others distinct"),
            )
        }
    };
    let k = colors.iter().copied().max().unwrap_or(0) as usize;
    ColoredGraph::verified(t.clone(), Coloring::new(k, colors)?, vec![what])
}
