//! Simple connected graphs, the named families, and structural classification.
//!
//! Vertices are `0..n`. Every [`Graph`] is simple and connected; the
//! constructor rejects anything else.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use thiserror::Error;

use crate::bounds;

pub type Vertex = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph must have at least one vertex")]
    Empty,
    #[error("edge ({u}, {v}) references a vertex outside 0..{n}")]
    VertexOutOfRange { u: Vertex, v: Vertex, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(Vertex, Vertex),
    #[error("graph is disconnected: vertex {unreached} is not reachable from vertex 0")]
    Disconnected { unreached: Vertex },
    #[error("invalid family parameters: {0}")]
    Parameter(String),
}

/// An undirected, simple, connected graph on vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
    edges: Vec<(Vertex, Vertex)>,
}

impl Graph {
    /// Builds a graph from an edge list. Edge endpoints may come in either
    /// order; the stored list is normalized to `u < v` and sorted.
    pub fn new<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        let mut seen = BTreeSet::new();
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::VertexOutOfRange { u, v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            let e = (u.min(v), u.max(v));
            if !seen.insert(e) {
                return Err(GraphError::DuplicateEdge(e.0, e.1));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        let g = Graph {
            adj,
            edges: seen.into_iter().collect(),
        };
        if let Some(unreached) = g.first_unreachable() {
            return Err(GraphError::Disconnected { unreached });
        }
        Ok(g)
    }

    fn first_unreachable(&self) -> Option<Vertex> {
        let dist = self.distances_from(0);
        dist.iter().position(Option::is_none)
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    /// Sorted neighbor list of `v`.
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Breadth-first distances from `source`; `None` marks unreachable vertices.
    pub fn distances_from(&self, source: Vertex) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n()];
        let mut queue = VecDeque::new();
        dist[source] = Some(0);
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap_or(0);
            for &w in &self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// The graph with one extra vertex (index `n`) adjacent to every vertex.
    pub fn with_universal_vertex(&self) -> Graph {
        let hub = self.n();
        let edges = self.edges.iter().copied().chain((0..hub).map(|v| (v, hub)));
        Graph::new(hub + 1, edges)
            .expect("adding a universal vertex keeps the graph simple and connected")
    }
}

/// A named graph family instance.
///
/// Vertex numbering of [`family_graph`]:
/// * `Path n`, `Cycle n`: traversal order `0..n`.
/// * `Fan n`, `Wheel n`: rim `0..n-1` in traversal order, hub `n-1`.
/// * `Comb m`: spine `0..m` in path order, the leaf of spine vertex `i` is `m + i`.
/// * `Star n`: center `0`, leaves `1..n`.
/// * `DoubleStar r s`: centers `u = 0` (with `r` leaves) and `v = 1` (with `s`
///   leaves); leaves of `u` are `2..2+r`, leaves of `v` follow.
/// * `UnicyclicU k`: the unique cycle is `0..ℓ(k)` in traversal order; the
///   last `a1(k)` cycle vertices `a2(k)..ℓ(k)` carry one pendant leaf each,
///   numbered `ℓ(k) + i` for cycle vertex `a2(k) + i`.
/// * `CaterpillarT k`: the graph produced by
///   [`crate::construct::caterpillar_extremal`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    Fan(usize),
    Wheel(usize),
    Comb(usize),
    Star(usize),
    DoubleStar { r: usize, s: usize },
    UnicyclicU(usize),
    CaterpillarT(usize),
}

impl FamilySpec {
    pub fn validate(&self) -> Result<(), GraphError> {
        let bad = |msg: String| Err(GraphError::Parameter(msg));
        match *self {
            FamilySpec::Path(n) if n < 2 => bad(format!("path needs n >= 2, got {n}")),
            FamilySpec::Cycle(n) if n < 3 => bad(format!("cycle needs n >= 3, got {n}")),
            FamilySpec::Fan(n) if n < 4 => bad(format!("fan needs n >= 4, got {n}")),
            FamilySpec::Wheel(n) if n < 4 => bad(format!("wheel needs n >= 4, got {n}")),
            FamilySpec::Comb(m) if m < 3 => bad(format!("comb needs m >= 3, got {m}")),
            FamilySpec::Star(n) if n < 3 => bad(format!("star needs n >= 3, got {n}")),
            FamilySpec::DoubleStar { r, s } if r < 1 || r > s || r + s + 2 < 5 => bad(format!(
                "double star needs 1 <= r <= s and r + s + 2 >= 5, got r={r}, s={s}"
            )),
            FamilySpec::UnicyclicU(k) if k < 5 => bad(format!("U_k needs k >= 5, got {k}")),
            FamilySpec::CaterpillarT(k) if k < 6 => bad(format!("T_k needs k >= 6, got {k}")),
            _ => Ok(()),
        }
    }

    /// Number of vertices of the instance, without building it.
    pub fn order(&self) -> usize {
        match *self {
            FamilySpec::Path(n)
            | FamilySpec::Cycle(n)
            | FamilySpec::Fan(n)
            | FamilySpec::Wheel(n)
            | FamilySpec::Star(n) => n,
            FamilySpec::Comb(m) => 2 * m,
            FamilySpec::DoubleStar { r, s } => r + s + 2,
            FamilySpec::UnicyclicU(k) => bounds::unicyclic_order(k as u64) as usize,
            FamilySpec::CaterpillarT(k) => bounds::tree_order(k as u64) as usize,
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilySpec::Path(n) => write!(f, "P_{n}"),
            FamilySpec::Cycle(n) => write!(f, "C_{n}"),
            FamilySpec::Fan(n) => write!(f, "F_{n}"),
            FamilySpec::Wheel(n) => write!(f, "W_{n}"),
            FamilySpec::Comb(m) => write!(f, "B_{m}"),
            FamilySpec::Star(n) => write!(f, "K_1,{}", n - 1),
            FamilySpec::DoubleStar { r, s } => write!(f, "S_{r},{s}"),
            FamilySpec::UnicyclicU(k) => write!(f, "U_{k}"),
            FamilySpec::CaterpillarT(k) => write!(f, "T_{k}"),
        }
    }
}

pub(crate) fn path_edges(n: usize) -> impl Iterator<Item = (Vertex, Vertex)> {
    (1..n).map(|i| (i - 1, i))
}

pub(crate) fn cycle_edges(n: usize) -> impl Iterator<Item = (Vertex, Vertex)> {
    path_edges(n).chain(std::iter::once((n - 1, 0)))
}

/// Builds the canonical labeled instance of a family (see [`FamilySpec`]).
pub fn family_graph(spec: &FamilySpec) -> Result<Graph, GraphError> {
    spec.validate()?;
    let g = match *spec {
        FamilySpec::Path(n) => Graph::new(n, path_edges(n))?,
        FamilySpec::Cycle(n) => Graph::new(n, cycle_edges(n))?,
        FamilySpec::Fan(n) => Graph::new(n - 1, path_edges(n - 1))?.with_universal_vertex(),
        FamilySpec::Wheel(n) => Graph::new(n - 1, cycle_edges(n - 1))?.with_universal_vertex(),
        FamilySpec::Comb(m) => Graph::new(2 * m, path_edges(m).chain((0..m).map(|i| (i, m + i))))?,
        FamilySpec::Star(n) => Graph::new(n, (1..n).map(|i| (0, i)))?,
        FamilySpec::DoubleStar { r, s } => {
            let edges = std::iter::once((0, 1))
                .chain((2..2 + r).map(|i| (0, i)))
                .chain((2 + r..2 + r + s).map(|i| (1, i)));
            Graph::new(r + s + 2, edges)?
        }
        FamilySpec::UnicyclicU(k) => {
            let a1 =
                bounds::a1(k as u64).map_err(|e| GraphError::Parameter(e.to_string()))? as usize;
            let a2 =
                bounds::a2(k as u64).map_err(|e| GraphError::Parameter(e.to_string()))? as usize;
            let ell = a1 + a2;
            Graph::new(
                ell + a1,
                cycle_edges(ell).chain((0..a1).map(|i| (a2 + i, ell + i))),
            )?
        }
        FamilySpec::CaterpillarT(k) => {
            crate::construct::caterpillar_extremal(k)
                .map_err(|e| GraphError::Parameter(e.to_string()))?
                .into_parts()
                .0
        }
    };
    Ok(g)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
pub enum ClassKind {
    Path,
    Cycle,
    TreeGeneral,
    Caterpillar,
    Unicyclic,
    Other,
}

/// Structural class of a graph. `cycle_vertices` lists the unique cycle in
/// traversal order (starting at its smallest vertex, towards the smaller of
/// that vertex's two cycle neighbors) for `Cycle` and `Unicyclic`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphClass {
    pub kind: ClassKind,
    pub cycle_vertices: Vec<Vertex>,
}

impl GraphClass {
    pub fn is_tree(&self) -> bool {
        matches!(
            self.kind,
            ClassKind::Path | ClassKind::Caterpillar | ClassKind::TreeGeneral
        )
    }
}

pub fn classify(g: &Graph) -> GraphClass {
    let n = g.n();
    let m = g.edge_count();
    let none = |kind| GraphClass {
        kind,
        cycle_vertices: Vec::new(),
    };
    if m + 1 == n {
        if g.max_degree() <= 2 {
            return none(ClassKind::Path);
        }
        return if is_caterpillar(g) {
            none(ClassKind::Caterpillar)
        } else {
            none(ClassKind::TreeGeneral)
        };
    }
    if m == n {
        let cycle = unique_cycle(g);
        let kind = if cycle.len() == n {
            ClassKind::Cycle
        } else {
            ClassKind::Unicyclic
        };
        return GraphClass {
            kind,
            cycle_vertices: cycle,
        };
    }
    none(ClassKind::Other)
}

/// Tree whose non-leaf vertices induce a path.
fn is_caterpillar(g: &Graph) -> bool {
    (0..g.n())
        .filter(|&v| g.degree(v) >= 2)
        .all(|v| g.neighbors(v).iter().filter(|&&w| g.degree(w) >= 2).count() <= 2)
}

/// Vertices of the unique cycle of a connected unicyclic graph, in order.
fn unique_cycle(g: &Graph) -> Vec<Vertex> {
    let n = g.n();
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut stack: Vec<Vertex> = (0..n).filter(|&v| deg[v] == 1).collect();
    while let Some(v) = stack.pop() {
        if removed[v] {
            continue;
        }
        removed[v] = true;
        for &w in g.neighbors(v) {
            if !removed[w] {
                deg[w] -= 1;
                if deg[w] == 1 {
                    stack.push(w);
                }
            }
        }
    }
    let on_cycle = |v: Vertex| !removed[v];
    let Some(start) = (0..n).find(|&v| on_cycle(v)) else {
        return Vec::new();
    };
    let mut order = vec![start];
    let mut prev = start;
    let mut cur = g
        .neighbors(start)
        .iter()
        .copied()
        .find(|&w| on_cycle(w))
        .expect("cycle vertex has a cycle neighbor");
    while cur != start {
        order.push(cur);
        let next = g
            .neighbors(cur)
            .iter()
            .copied()
            .find(|&w| on_cycle(w) && w != prev)
            .expect("cycle vertex has two cycle neighbors");
        prev = cur;
        cur = next;
    }
    order
}

/// Largest shortest-path distance over all vertex pairs.
pub fn diameter(g: &Graph) -> usize {
    (0..g.n())
        .map(|s| {
            g.distances_from(s)
                .into_iter()
                .map(|d| d.expect("graph is connected"))
                .max()
                .unwrap_or(0)
        })
        .max()
        .unwrap_or(0)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "camelCase")]
pub struct DegreeStats {
    pub leaves: usize,
    pub degree_two: usize,
    pub degree_three_plus: usize,
    pub max_degree: usize,
}

pub fn degree_stats(g: &Graph) -> DegreeStats {
    let mut stats = DegreeStats {
        leaves: 0,
        degree_two: 0,
        degree_three_plus: 0,
        max_degree: g.max_degree(),
    };
    for v in 0..g.n() {
        match g.degree(v) {
            0 => {}
            1 => stats.leaves += 1,
            2 => stats.degree_two += 1,
            _ => stats.degree_three_plus += 1,
        }
    }
    stats
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smallest_path() {
        let g = family_graph(&FamilySpec::Path(2)).unwrap();
        assert_eq!(g.n(), 2);
        assert_eq!(g.edges(), &[(0, 1)]);
    }

    #[test]
    fn wheel_four_is_complete() {
        let g = family_graph(&FamilySpec::Wheel(4)).unwrap();
        for u in 0..4 {
            for v in 0..4 {
                assert_eq!(g.has_edge(u, v), u != v);
            }
        }
    }

    #[test]
    fn comb_twenty() {
        let g = family_graph(&FamilySpec::Comb(20)).unwrap();
        assert_eq!(g.n(), 40);
        let stats = degree_stats(&g);
        assert_eq!(
            stats,
            DegreeStats {
                leaves: 20,
                degree_two: 2,
                degree_three_plus: 18,
                max_degree: 3
            }
        );
        assert_eq!(classify(&g).kind, ClassKind::Caterpillar);
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(Graph::new(0, []), Err(GraphError::Empty));
        assert_eq!(Graph::new(2, [(1, 1)]), Err(GraphError::SelfLoop(1)));
        assert_eq!(
            Graph::new(2, [(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge(0, 1))
        );
        assert_eq!(
            Graph::new(4, [(0, 1)]),
            Err(GraphError::Disconnected { unreached: 2 })
        );
        assert!(matches!(
            Graph::new(2, [(0, 2)]),
            Err(GraphError::VertexOutOfRange { .. })
        ));
    }

    #[test]
    fn parameter_ranges() {
        for bad in [
            FamilySpec::Path(1),
            FamilySpec::Cycle(2),
            FamilySpec::Fan(3),
            FamilySpec::Wheel(3),
            FamilySpec::Comb(2),
            FamilySpec::Star(2),
            FamilySpec::DoubleStar { r: 1, s: 1 },
            FamilySpec::DoubleStar { r: 3, s: 2 },
            FamilySpec::UnicyclicU(4),
            FamilySpec::CaterpillarT(5),
        ] {
            assert!(family_graph(&bad).is_err(), "{bad:?} accepted");
        }
    }

    #[test]
    fn diameters() {
        assert_eq!(diameter(&family_graph(&FamilySpec::Path(9)).unwrap()), 8);
        assert_eq!(diameter(&family_graph(&FamilySpec::Star(7)).unwrap()), 2);
        assert_eq!(diameter(&family_graph(&FamilySpec::Wheel(10)).unwrap()), 2);
        assert_eq!(diameter(&Graph::new(1, []).unwrap()), 0);
    }

    #[test]
    fn cycle_classification() {
        let g = family_graph(&FamilySpec::Cycle(5)).unwrap();
        let class = classify(&g);
        assert_eq!(class.kind, ClassKind::Cycle);
        assert_eq!(class.cycle_vertices, vec![0, 1, 2, 3, 4]);
        assert_eq!(
            degree_stats(&family_graph(&FamilySpec::Cycle(9)).unwrap()),
            DegreeStats {
                leaves: 0,
                degree_two: 9,
                degree_three_plus: 0,
                max_degree: 2
            }
        );
    }

    #[test]
    fn unicyclic_u_structure() {
        let g = family_graph(&FamilySpec::UnicyclicU(5)).unwrap();
        assert_eq!(g.n(), 70);
        let class = classify(&g);
        assert_eq!(class.kind, ClassKind::Unicyclic);
        // the cycle runs through the whole comb spine: a2(5) + a1(5)
        assert_eq!(class.cycle_vertices.len(), 50);

        let g6 = family_graph(&FamilySpec::UnicyclicU(6)).unwrap();
        assert_eq!(g6.n(), 120);
        let s = degree_stats(&g6);
        assert_eq!(
            (s.leaves, s.degree_two, s.degree_three_plus, s.max_degree),
            (30, 60, 30, 3)
        );
    }

    #[test]
    fn general_tree_and_other() {
        // spider with three legs of length 2 is not a caterpillar
        let g = Graph::new(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]).unwrap();
        assert_eq!(classify(&g).kind, ClassKind::TreeGeneral);
        let k4 = family_graph(&FamilySpec::Wheel(4)).unwrap();
        assert_eq!(classify(&k4).kind, ClassKind::Other);
        let single = Graph::new(1, []).unwrap();
        assert_eq!(classify(&single).kind, ClassKind::Path);
    }

    #[test]
    fn universal_vertex() {
        let g = family_graph(&FamilySpec::Path(5))
            .unwrap()
            .with_universal_vertex();
        assert_eq!(g, family_graph(&FamilySpec::Fan(6)).unwrap());
    }
}
