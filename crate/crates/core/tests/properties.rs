use proptest::prelude::*;
use proptest::sample::SizeRange;

use nlcolor::bounds::{bounds_report, bracket, chi_closed_form, chi_lower_bound, ell};
use nlcolor::construct::{
    caterpillar_extremal, comb_coloring, cone_coloring, cycle_coloring, generic_tree_coloring,
    path_coloring, unicyclic_extremal, CyclePipeline,
};
use nlcolor::graph::{
    classify, degree_stats, diameter, family_graph, ClassKind, FamilySpec, Graph,
};
use nlcolor::io::{graph_from_edge_list, graph_from_json, graph_to_edge_list, graph_to_json};
use nlcolor::solver::{chi_nl_exact, SolveOptions};
use nlcolor::verify::{is_1_paired, is_nl_coloring, Coloring};

/// Random connected graph: a random spanning tree plus random extra edges.
fn connected_graph(orders: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = Graph> {
    orders.prop_flat_map(|n| {
        let parents: Vec<_> = (1..n).map(|i| 0..i).collect();
        let extra = proptest::collection::vec((0..n, 0..n), SizeRange::from(0..=n));
        (Just(n), parents, extra).prop_map(|(n, parents, extra)| {
            let mut edges: Vec<(usize, usize)> = parents
                .iter()
                .enumerate()
                .map(|(i, &p)| (p, i + 1))
                .collect();
            for (u, v) in extra {
                let e = (u.min(v), u.max(v));
                if u != v && !edges.iter().any(|&(a, b)| (a.min(b), a.max(b)) == e) {
                    edges.push(e);
                }
            }
            Graph::new(n, edges).expect("spanning tree keeps it connected")
        })
    })
}

fn random_tree(orders: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = Graph> {
    orders.prop_flat_map(|n| {
        let parents: Vec<_> = (1..n).map(|i| 0..i).collect();
        parents.prop_map(move |p| {
            Graph::new(n, p.iter().enumerate().map(|(i, &q)| (q, i + 1))).unwrap()
        })
    })
}

fn relabel(g: &Graph, perm: &[usize]) -> Graph {
    Graph::new(g.n(), g.edges().iter().map(|&(u, v)| (perm[u], perm[v]))).unwrap()
}

/// A graph with a coloring that uses every color in 1..=k.
fn graph_with_coloring() -> impl Strategy<Value = (Graph, Vec<u32>)> {
    connected_graph(2..=9).prop_flat_map(|g| {
        let n = g.n();
        (Just(g), proptest::collection::vec(1..=n as u32, n)).prop_map(|(g, raw)| {
            let mut names: Vec<u32> = raw.clone();
            names.sort_unstable();
            names.dedup();
            let colors = raw
                .iter()
                .map(|c| names.binary_search(c).unwrap() as u32 + 1)
                .collect();
            (g, colors)
        })
    })
}

fn chi(g: &Graph) -> usize {
    chi_nl_exact(g, &SolveOptions::default())
        .chi
        .expect("small graphs are solved exactly")
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn nl_is_invariant_under_color_renaming(
        (g, colors) in graph_with_coloring(),
        seed in any::<u64>(),
    ) {
        let c = Coloring::from_colors(colors).unwrap();
        let mut perm: Vec<u32> = (1..=c.k() as u32).collect();
        let mut s = seed;
        for i in (1..perm.len()).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        let renamed = c.permute_colors(&perm).unwrap();
        prop_assert_eq!(is_nl_coloring(&g, &c).ok(), is_nl_coloring(&g, &renamed).ok());
    }

    #[test]
    fn nl_is_invariant_under_vertex_relabeling(
        (g, colors) in graph_with_coloring(),
        keys in proptest::collection::vec(any::<u32>(), 9),
    ) {
        let n = g.n();
        let mut perm: Vec<usize> = (0..n).collect();
        perm.sort_by_key(|&v| (keys[v], v));
        let h = relabel(&g, &perm);
        let mut moved = vec![0; n];
        for v in 0..n {
            moved[perm[v]] = colors[v];
        }
        let a = Coloring::from_colors(colors).unwrap();
        let b = Coloring::from_colors(moved).unwrap();
        prop_assert_eq!(is_nl_coloring(&g, &a).ok(), is_nl_coloring(&h, &b).ok());
        prop_assert_eq!(classify(&g).kind, classify(&h).kind);
        prop_assert_eq!(diameter(&g), diameter(&h));
    }

    #[test]
    fn handshake_identity(g in connected_graph(2..=30)) {
        let degree_sum: usize = (0..g.n()).map(|v| g.degree(v)).sum();
        prop_assert_eq!(degree_sum, 2 * g.edge_count());
        let s = degree_stats(&g);
        prop_assert_eq!(s.leaves + s.degree_two + s.degree_three_plus, g.n());
        prop_assert_eq!(s.max_degree, g.max_degree());
    }

    #[test]
    fn formats_round_trip(g in connected_graph(2..=25)) {
        let from_json = graph_from_json(&graph_to_json(&g)).unwrap();
        prop_assert_eq!(&from_json, &g);
        let from_edges = graph_from_edge_list(&graph_to_edge_list(&g)).unwrap();
        prop_assert_eq!(&from_edges, &g);
        prop_assert_eq!(classify(&from_edges), classify(&g));
    }

    #[test]
    fn classification_matches_edge_count(g in connected_graph(3..=20)) {
        let class = classify(&g);
        let m = g.edge_count();
        let n = g.n();
        match class.kind {
            ClassKind::Path | ClassKind::TreeGeneral | ClassKind::Caterpillar => prop_assert_eq!(m, n - 1),
            ClassKind::Cycle => {
                prop_assert_eq!(m, n);
                prop_assert_eq!(class.cycle_vertices.len(), n);
            }
            ClassKind::Unicyclic => {
                prop_assert_eq!(m, n);
                let cyc = &class.cycle_vertices;
                prop_assert!(cyc.len() >= 3 && cyc.len() < n);
                for i in 0..cyc.len() {
                    prop_assert!(g.has_edge(cyc[i], cyc[(i + 1) % cyc.len()]));
                }
            }
            ClassKind::Other => prop_assert!(m > n),
        }
    }

    #[test]
    fn lower_bound_is_sound(g in connected_graph(1..=8)) {
        prop_assert!(chi_lower_bound(&g) <= chi(&g));
    }

    #[test]
    fn solver_witness_is_nl(g in connected_graph(2..=8)) {
        let r = chi_nl_exact(&g, &SolveOptions::default());
        let w = r.witness.unwrap();
        prop_assert_eq!(w.k(), r.chi.unwrap());
        prop_assert!(is_nl_coloring(&g, &w).ok());
    }

    #[test]
    fn cone_adds_one_color(g in connected_graph(2..=7)) {
        prop_assert_eq!(chi(&g.with_universal_vertex()), chi(&g) + 1);
    }

    #[test]
    fn parallel_agrees_with_sequential(g in connected_graph(2..=8), symmetry in any::<bool>()) {
        let seq = chi_nl_exact(&g, &SolveOptions { symmetry_breaking: symmetry, ..SolveOptions::default() });
        let par = chi_nl_exact(&g, &SolveOptions { parallel: true, symmetry_breaking: symmetry, ..SolveOptions::default() });
        prop_assert_eq!(seq.chi, par.chi);
        prop_assert_eq!(seq.status, par.status);
        prop_assert!(is_nl_coloring(&g, par.witness.as_ref().unwrap()).ok());
    }

    #[test]
    fn cycles_and_paths_construct_with_closed_form(n in 3usize..=150) {
        let cycle = cycle_coloring(n).unwrap();
        prop_assert_eq!(cycle.k(), chi_closed_form(&FamilySpec::Cycle(n)).unwrap());
        prop_assert_eq!(cycle.graph(), &family_graph(&FamilySpec::Cycle(n)).unwrap());
        let path = path_coloring(n).unwrap();
        prop_assert_eq!(path.k(), chi_closed_form(&FamilySpec::Path(n)).unwrap());
        prop_assert_eq!(path.graph(), &family_graph(&FamilySpec::Path(n)).unwrap());
        prop_assert!(is_nl_coloring(path.graph(), path.coloring()).ok());
    }

    #[test]
    fn fans_and_wheels_construct_with_closed_form(n in 4usize..=150) {
        let fan = cone_coloring(&path_coloring(n - 1).unwrap()).unwrap();
        prop_assert_eq!(fan.k(), chi_closed_form(&FamilySpec::Fan(n)).unwrap());
        prop_assert_eq!(fan.graph(), &family_graph(&FamilySpec::Fan(n)).unwrap());
        let wheel = cone_coloring(&cycle_coloring(n - 1).unwrap()).unwrap();
        prop_assert_eq!(wheel.k(), chi_closed_form(&FamilySpec::Wheel(n)).unwrap());
        prop_assert_eq!(wheel.graph(), &family_graph(&FamilySpec::Wheel(n)).unwrap());
    }

    #[test]
    fn trees_of_diameter_four_take_n_minus_two(t in random_tree(5..=40)) {
        match generic_tree_coloring(&t) {
            Ok(cg) => {
                prop_assert!(is_nl_coloring(cg.graph(), cg.coloring()).ok());
                if diameter(&t) >= 4 {
                    prop_assert_eq!(cg.k(), t.n() - 2);
                }
            }
            Err(_) => prop_assert!(diameter(&t) < 2),
        }
    }

    #[test]
    fn bracket_is_total_and_monotone(n in 10u64..5000) {
        let k = bracket(n);
        prop_assert!(ell(k - 1).unwrap() < n && n <= ell(k).unwrap());
        prop_assert!(bracket(n + 1) >= k);
    }

    #[test]
    fn cycle_and_path_differ_where_expected(n in 3usize..2000) {
        let c = chi_closed_form(&FamilySpec::Cycle(n)).unwrap();
        let p = chi_closed_form(&FamilySpec::Path(n.max(2))).unwrap();
        let plus_one = [4, 6, 8].contains(&n) || (4..20).any(|k| ell(k).unwrap() as usize - 1 == n);
        prop_assert_eq!(c, p + usize::from(plus_one));
    }
}

#[test]
fn bounds_increase_with_k() {
    for k in 3..30 {
        let (a, b) = (
            bounds_report(k, None).unwrap(),
            bounds_report(k + 1, None).unwrap(),
        );
        assert!(a.a1 < b.a1 && a.a2 < b.a2 && a.ell < b.ell);
        assert!(a.general_max_order < b.general_max_order);
        assert!(a.unicyclic_max_order < b.unicyclic_max_order);
        assert!(a.tree_max_order < b.tree_max_order);
        assert!(a.tree_max_degree < b.tree_max_degree);
        assert_eq!(a.tree_max_order + 2, a.unicyclic_max_order);
        assert_eq!(a.a1 + a.a2, a.ell);
    }
}

#[test]
fn formulas_agree_with_solver() {
    let mut specs = Vec::new();
    specs.extend((2..=12).map(FamilySpec::Path));
    specs.extend((3..=12).map(FamilySpec::Cycle));
    specs.extend((4..=10).map(FamilySpec::Fan));
    specs.extend((4..=10).map(FamilySpec::Wheel));
    specs.extend((3..=8).map(FamilySpec::Star));
    for r in 1..=3 {
        for s in r..=7 - r {
            if r + s + 2 >= 5 {
                specs.push(FamilySpec::DoubleStar { r, s });
            }
        }
    }
    for spec in specs {
        let g = family_graph(&spec).unwrap();
        assert_eq!(chi(&g), chi_closed_form(&spec).unwrap(), "{spec}");
    }
}

#[test]
fn every_pipeline_stage_is_one_paired() {
    for k in 4..=6 {
        let p = CyclePipeline::build(k).unwrap();
        let stages = p
            .op1_stages()
            .iter()
            .chain(p.even_stages())
            .chain(p.odd_stages());
        let mut count = 0;
        for stage in stages {
            let g = family_graph(&FamilySpec::Cycle(stage.colors.len())).unwrap();
            let c = Coloring::new(k, stage.colors.clone()).unwrap();
            assert!(is_nl_coloring(&g, &c).ok(), "{}", stage.step);
            assert!(is_1_paired(&g, &c).unwrap(), "{}", stage.step);
            count += 1;
        }
        assert!(count > 0);
    }
}

#[test]
fn extremal_constructions_up_to_seven() {
    for k in 5..=7 {
        let comb = comb_coloring(k).unwrap();
        assert_eq!(comb.k(), k);
        let u = unicyclic_extremal(k).unwrap();
        assert_eq!(u.k(), k);
        assert_eq!(classify(u.graph()).kind, ClassKind::Unicyclic);
    }
    for k in 6..=7 {
        let t = caterpillar_extremal(k).unwrap();
        assert_eq!(t.k(), k);
        assert_eq!(classify(t.graph()).kind, ClassKind::Caterpillar);
    }
}
