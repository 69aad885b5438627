//! Independent checks of the verifier, the solver and the enumerators
//! against naive reference implementations.

use std::collections::{BTreeSet, HashMap};

use petgraph::algo::is_isomorphic;
use petgraph::graph::UnGraph;

use nlcolor::graph::{family_graph, FamilySpec, Graph};
use nlcolor::solver::{chi_nl_exact, enumerate_connected_graphs, enumerate_trees, SolveOptions};
use nlcolor::verify::{is_nl_coloring, Coloring};

/// Straight from the definition: proper, and same-colored vertices see
/// different color sets.
fn naive_is_nl(g: &Graph, colors: &[u32]) -> bool {
    let sig = |v: usize| -> BTreeSet<u32> { g.neighbors(v).iter().map(|&w| colors[w]).collect() };
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            if colors[u] != colors[v] {
                continue;
            }
            if g.has_edge(u, v) || sig(u) == sig(v) {
                return false;
            }
        }
    }
    true
}

/// Smallest k for which some surjective assignment onto 1..=k is NL.
fn naive_chi(g: &Graph) -> usize {
    let n = g.n();
    for k in 1..=n {
        let mut colors = vec![1u32; n];
        loop {
            let used: BTreeSet<u32> = colors.iter().copied().collect();
            if used.len() == k && naive_is_nl(g, &colors) {
                return k;
            }
            let mut i = 0;
            while i < n && colors[i] == k as u32 {
                colors[i] = 1;
                i += 1;
            }
            if i == n {
                break;
            }
            colors[i] += 1;
        }
    }
    unreachable!("distinct colors always work")
}

fn to_petgraph(g: &Graph) -> UnGraph<(), ()> {
    let mut p = UnGraph::new_undirected();
    let nodes: Vec<_> = (0..g.n()).map(|_| p.add_node(())).collect();
    for &(u, v) in g.edges() {
        p.add_edge(nodes[u], nodes[v], ());
    }
    p
}

fn prufer_tree(n: usize, seq: &[usize]) -> Graph {
    let mut degree = vec![1usize; n];
    for &x in seq {
        degree[x] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &x in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
        edges.push((leaf, x));
        degree[leaf] -= 1;
        degree[x] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    Graph::new(n, edges).unwrap()
}

fn degree_key(p: &UnGraph<(), ()>) -> Vec<usize> {
    let mut d: Vec<usize> = p.node_indices().map(|v| p.neighbors(v).count()).collect();
    d.sort_unstable();
    d
}

/// Isomorphism classes among `graphs`, bucketed by degree sequence.
fn count_classes(graphs: impl Iterator<Item = Graph>) -> usize {
    let mut buckets: HashMap<Vec<usize>, Vec<UnGraph<(), ()>>> = HashMap::new();
    for g in graphs {
        let p = to_petgraph(&g);
        let reps = buckets.entry(degree_key(&p)).or_default();
        if !reps.iter().any(|r| is_isomorphic(r, &p)) {
            reps.push(p);
        }
    }
    buckets.values().map(Vec::len).sum()
}

#[test]
fn verifier_matches_definition() {
    let graphs = enumerate_connected_graphs(5).unwrap();
    for g in &graphs {
        for code in 0..3u32.pow(5) {
            let colors: Vec<u32> = (0..5).map(|i| code / 3u32.pow(i) % 3 + 1).collect();
            let Ok(c) = Coloring::from_colors(colors.clone()) else {
                continue;
            };
            assert_eq!(
                is_nl_coloring(g, &c).ok(),
                naive_is_nl(g, &colors),
                "{g:?} {colors:?}"
            );
        }
    }
}

#[test]
fn solver_matches_brute_force() {
    for n in 2..=6 {
        for g in enumerate_connected_graphs(n).unwrap() {
            let r = chi_nl_exact(&g, &SolveOptions::default());
            assert_eq!(r.chi, Some(naive_chi(&g)), "{g:?}");
        }
    }
    for spec in [
        FamilySpec::Cycle(7),
        FamilySpec::Path(7),
        FamilySpec::Star(7),
    ] {
        let g = family_graph(&spec).unwrap();
        assert_eq!(
            chi_nl_exact(&g, &SolveOptions::default()).chi,
            Some(naive_chi(&g)),
            "{spec}"
        );
    }
}

#[test]
fn tree_enumeration_matches_prufer_classes() {
    for n in 3..=8usize {
        let total = n.pow(n as u32 - 2);
        let trees = (0..total).map(|code| {
            let seq: Vec<usize> = (0..n - 2).map(|i| code / n.pow(i as u32) % n).collect();
            prufer_tree(n, &seq)
        });
        assert_eq!(
            count_classes(trees),
            enumerate_trees(n).unwrap().len(),
            "n = {n}"
        );
    }
}

#[test]
fn enumerated_trees_are_pairwise_non_isomorphic() {
    let trees = enumerate_trees(9).unwrap();
    assert_eq!(count_classes(trees.iter().cloned()), trees.len());
    assert!(trees.iter().all(|t| t.edge_count() + 1 == t.n()));
}

#[test]
fn graph_enumeration_matches_labeled_classes() {
    for n in 2..=6 {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        let labeled = (0u64..1 << pairs.len()).filter_map(|mask| {
            let edges = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e);
            Graph::new(n, edges).ok()
        });
        assert_eq!(
            count_classes(labeled),
            enumerate_connected_graphs(n).unwrap().len(),
            "n = {n}"
        );
    }
}
