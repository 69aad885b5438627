//! Non-isomorphic trees and connected graphs of small order.

use std::collections::BTreeMap;

use super::SolverError;
use crate::graph::{Graph, Vertex};

pub const MAX_TREE_ORDER: usize = 12;
pub const MAX_GRAPH_ORDER: usize = 7;

/// Canonical level sequence of a tree: the lexicographically smallest
/// preorder depth sequence over its centroids, with each vertex's subtrees
/// arranged in decreasing order of their own canonical sequences.
pub fn tree_canonical_form(t: &Graph) -> Vec<u8> {
    debug_assert_eq!(t.edge_count() + 1, t.n());
    centroids(t)
        .into_iter()
        .map(|c| rooted_sequence(t, c, usize::MAX, 0))
        .min()
        .expect("a tree has at least one centroid")
}

fn rooted_sequence(t: &Graph, v: Vertex, parent: Vertex, depth: u8) -> Vec<u8> {
    let mut children: Vec<Vec<u8>> = t
        .neighbors(v)
        .iter()
        .filter(|&&w| w != parent)
        .map(|&w| rooted_sequence(t, w, v, depth + 1))
        .collect();
    children.sort_unstable_by(|a, b| b.cmp(a));
    let mut seq = vec![depth];
    for child in children {
        seq.extend(child);
    }
    seq
}

fn centroids(t: &Graph) -> Vec<Vertex> {
    let n = t.n();
    let mut parent = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    let mut stack = vec![0];
    let mut seen = vec![false; n];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        order.push(v);
        for &w in t.neighbors(v) {
            if !seen[w] {
                seen[w] = true;
                parent[w] = v;
                stack.push(w);
            }
        }
    }
    let mut size = vec![1usize; n];
    for &v in order.iter().rev() {
        if parent[v] != usize::MAX {
            size[parent[v]] += size[v];
        }
    }
    let heaviest_part = |v: Vertex| {
        t.neighbors(v)
            .iter()
            .map(|&w| if parent[w] == v { size[w] } else { n - size[v] })
            .max()
            .unwrap_or(0)
    };
    let best = (0..n).map(heaviest_part).min().unwrap_or(0);
    (0..n).filter(|&v| heaviest_part(v) == best).collect()
}

/// Tree whose vertices are numbered in the preorder of a level sequence.
fn tree_from_level_sequence(seq: &[u8]) -> Graph {
    let mut edges = Vec::with_capacity(seq.len().saturating_sub(1));
    let mut last_at_depth: Vec<Vertex> = Vec::new();
    for (v, &d) in seq.iter().enumerate() {
        let d = d as usize;
        last_at_depth.truncate(d);
        if d > 0 {
            edges.push((last_at_depth[d - 1], v));
        }
        last_at_depth.push(v);
    }
    Graph::new(seq.len(), edges).expect("level sequences describe trees")
}

/// Every tree on `n` vertices up to isomorphism, each exactly once, labeled by
/// its canonical level sequence and listed in increasing canonical order.
pub fn enumerate_trees(n: usize) -> Result<Vec<Graph>, SolverError> {
    if n == 0 {
        return Err(SolverError::EmptyOrder);
    }
    if n > MAX_TREE_ORDER {
        return Err(SolverError::OrderTooLarge {
            n,
            cap: MAX_TREE_ORDER,
        });
    }
    let mut level: BTreeMap<Vec<u8>, Graph> = BTreeMap::new();
    level.insert(vec![0], Graph::new(1, []).expect("single vertex"));
    for m in 2..=n {
        let mut next = BTreeMap::new();
        for t in level.values() {
            for v in 0..t.n() {
                let grown = Graph::new(m, t.edges().iter().copied().chain([(v, m - 1)]))
                    .expect("adding a leaf keeps a tree");
                next.entry(tree_canonical_form(&grown)).or_insert(());
            }
        }
        level = next
            .into_keys()
            .map(|seq| {
                let g = tree_from_level_sequence(&seq);
                (seq, g)
            })
            .collect();
    }
    Ok(level.into_values().collect())
}

fn refine(adj: &[u64], n: usize) -> Vec<usize> {
    let mut color: Vec<usize> = (0..n).map(|v| adj[v].count_ones() as usize).collect();
    loop {
        let keys: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = (0..n)
                    .filter(|&w| adj[v] >> w & 1 == 1)
                    .map(|w| color[w])
                    .collect();
                nb.sort_unstable();
                (color[v], nb)
            })
            .collect();
        let mut distinct = keys.clone();
        distinct.sort();
        distinct.dedup();
        let next: Vec<usize> = keys
            .iter()
            .map(|k| distinct.binary_search(k).expect("key present"))
            .collect();
        let before = {
            let mut c = color.clone();
            c.sort_unstable();
            c.dedup();
            c.len()
        };
        color = next;
        if distinct.len() == before {
            return color;
        }
    }
}

fn canonical_bits(adj: &[u64], n: usize) -> u64 {
    let color = refine(adj, n);
    let mut cells: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (v, &c) in color.iter().enumerate() {
        cells.entry(c).or_default().push(v);
    }
    let cells: Vec<Vec<usize>> = cells.into_values().collect();
    let mut best = u64::MAX;
    let mut placement = Vec::with_capacity(n);
    permute_cells(&cells, 0, &mut placement, adj, n, &mut best);
    best
}

fn permute_cells(
    cells: &[Vec<usize>],
    idx: usize,
    placement: &mut Vec<usize>,
    adj: &[u64],
    n: usize,
    best: &mut u64,
) {
    if idx == cells.len() {
        // placement[i] = original vertex placed at position i
        let mut bits = 0u64;
        let mut bit = 0;
        for i in 0..n {
            for j in i + 1..n {
                if adj[placement[i]] >> placement[j] & 1 == 1 {
                    bits |= 1 << bit;
                }
                bit += 1;
            }
        }
        *best = (*best).min(bits);
        return;
    }
    let mut cell = cells[idx].clone();
    let size = cell.len();
    heap_permutations(&mut cell, size, &mut |perm| {
        let base = placement.len();
        placement.extend_from_slice(perm);
        permute_cells(cells, idx + 1, placement, adj, n, best);
        placement.truncate(base);
    });
}

fn heap_permutations(items: &mut [usize], size: usize, visit: &mut dyn FnMut(&[usize])) {
    if size <= 1 {
        visit(items);
        return;
    }
    for i in 0..size {
        heap_permutations(items, size - 1, visit);
        let j = if size.is_multiple_of(2) { i } else { 0 };
        items.swap(j, size - 1);
    }
}

/// Canonical form of a graph of order at most [`MAX_GRAPH_ORDER`]: the
/// smallest upper-triangle adjacency bit string over all vertex orders that
/// respect the color-refinement partition.
pub fn graph_canonical_form(g: &Graph) -> u64 {
    assert!(g.n() <= 11, "canonical form is limited to small graphs");
    let mut adj = vec![0u64; g.n()];
    for &(u, v) in g.edges() {
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
    }
    canonical_bits(&adj, g.n())
}

fn graph_from_bits(n: usize, bits: u64) -> Option<Graph> {
    let mut edges = Vec::new();
    let mut bit = 0;
    for i in 0..n {
        for j in i + 1..n {
            if bits >> bit & 1 == 1 {
                edges.push((i, j));
            }
            bit += 1;
        }
    }
    Graph::new(n, edges).ok()
}

/// Every connected graph on `n` vertices up to isomorphism, in increasing
/// canonical-form order and labeled by that form.
pub fn enumerate_connected_graphs(n: usize) -> Result<Vec<Graph>, SolverError> {
    if n == 0 {
        return Err(SolverError::EmptyOrder);
    }
    if n > MAX_GRAPH_ORDER {
        return Err(SolverError::OrderTooLarge {
            n,
            cap: MAX_GRAPH_ORDER,
        });
    }
    // all graphs (connected or not) on m vertices, as adjacency rows
    let mut level: BTreeMap<u64, Vec<u64>> = BTreeMap::new();
    level.insert(0, vec![0]);
    for m in 2..=n {
        let mut next = BTreeMap::new();
        for rows in level.values() {
            for subset in 0u64..1 << (m - 1) {
                let mut adj = rows.clone();
                adj.push(subset);
                for (v, row) in adj.iter_mut().enumerate().take(m - 1) {
                    if subset >> v & 1 == 1 {
                        *row |= 1 << (m - 1);
                    }
                }
                next.entry(canonical_bits(&adj, m)).or_insert(adj);
            }
        }
        level = next;
    }
    Ok(level
        .into_keys()
        .filter_map(|bits| graph_from_bits(n, bits))
        .collect())
}
