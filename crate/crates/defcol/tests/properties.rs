use std::collections::BTreeSet;

use defcol::colouring::{monochromatic_components, product_colouring, respects_lists};
use defcol::constructions::{random_plane_graph, random_triangulation};
use defcol::graph::{bfs_layering, mad_by_subsets, mad_exact};
use defcol::greedy::{
    degeneracy_islands, island_colour, light_edge_colour, lovasz_defective, GreedyError,
};
use defcol::io::{read_graph, write_graph, GraphFormat};
use defcol::oracle::{circumference, min_colours_clustering, min_colours_defect, Caps};
use defcol::planar::{genus_defect, genus_three_colour, poh_three_colour};
use defcol::separator::{fragment, BfsLevelOracle, SeparatorOracle};
use defcol::structural::{
    circumference_colour, circumference_palette, defect2_to_cluster, gomory_hu,
    immersion_tpartition, minimal_connected_subgraph, SegmentLength, StructuralError,
};
use defcol::{audit, Colouring, Graph, ListAssignment};
use num_rational::Ratio;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn graph_strategy(max_n: usize, edge_factor: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(move |n| {
        proptest::collection::vec((0..n, 0..n), 0..=edge_factor * n).prop_map(move |pairs| {
            let mut g = Graph::new(n);
            for (u, v) in pairs {
                if u != v {
                    g.add_edge(u, v).expect("in range");
                }
            }
            g
        })
    })
}

fn connected_strategy(max_n: usize, extra: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n).prop_flat_map(move |n| {
        let tree = proptest::collection::vec(any::<prop::sample::Index>(), n - 1);
        let more = proptest::collection::vec((0..n, 0..n), 0..=extra);
        (tree, more).prop_map(move |(parents, pairs)| {
            let mut g = Graph::new(n);
            for (child, index) in parents.iter().enumerate() {
                g.add_edge(child + 1, index.index(child + 1))
                    .expect("in range");
            }
            for (u, v) in pairs {
                if u != v {
                    g.add_edge(u, v).expect("in range");
                }
            }
            g
        })
    })
}

fn graph_with_colouring(max_n: usize, colours: usize) -> impl Strategy<Value = (Graph, Colouring)> {
    graph_strategy(max_n, 2).prop_flat_map(move |g| {
        let n = g.n();
        (
            Just(g),
            proptest::collection::vec(0..colours, n).prop_map(Colouring),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn bfs_layerings_span_consecutive_layers(g in connected_strategy(30, 30), root in any::<prop::sample::Index>()) {
        let layering = bfs_layering(&g, root.index(g.n())).unwrap();
        prop_assert!(layering.validate(&g).is_ok());
    }

    #[test]
    fn mad_matches_subset_enumeration(g in graph_strategy(10, 2)) {
        let exact = mad_exact(&g);
        prop_assert_eq!(exact, mad_by_subsets(&g));
        prop_assert!(exact * Ratio::from_integer(g.n() as i64) >= Ratio::from_integer(2 * g.m() as i64));
    }

    #[test]
    fn contraction_counts_vertices(g in connected_strategy(20, 15), size in 1usize..6) {
        let mut ball: Vec<usize> = g.bfs(0).iter().enumerate().filter(|(_, d)| d.is_some()).map(|(v, _)| v).collect();
        ball.sort_by_key(|&v| (g.bfs(0)[v], v));
        ball.truncate(size.min(g.n()));
        let contraction = g.contract_set(&ball).unwrap();
        prop_assert_eq!(contraction.graph.n(), g.n() - ball.len() + 1);
        prop_assert!(contraction.graph.vertices().all(|v| !contraction.graph.has_edge(v, v)));
    }

    #[test]
    fn audit_ignores_colour_names((g, c) in graph_with_colouring(25, 4), shift in 1usize..7) {
        let renamed = Colouring(c.0.iter().map(|&x| (3 - x) * 10 + shift).collect());
        let (a, b) = (audit(&g, &c).unwrap(), audit(&g, &renamed).unwrap());
        prop_assert_eq!(audit(&g, &c).unwrap(), a.clone());
        prop_assert_eq!((a.k, a.defect, a.clustering, a.all_paths), (b.k, b.defect, b.clustering, b.all_paths));
        prop_assert_eq!(a.components, b.components);
    }

    #[test]
    fn defect_is_below_clustering_and_components_partition((g, c) in graph_with_colouring(25, 3)) {
        let cert = audit(&g, &c).unwrap();
        prop_assert!(g.n() == 0 || cert.defect < cert.clustering);
        let mut seen: Vec<usize> = cert.components.concat();
        seen.sort_unstable();
        prop_assert_eq!(seen, g.vertices().collect::<Vec<_>>());
    }

    #[test]
    fn products_cluster_no_worse_than_their_classes((g, outer) in graph_with_colouring(20, 3), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut inner = Vec::new();
        let mut worst = 0;
        for members in outer.classes().values() {
            let sub = g.induced_subgraph(members);
            let c = Colouring((0..members.len()).map(|_| rand::Rng::gen_range(&mut rng, 0..2)).collect());
            worst = worst.max(audit(&sub.graph, &c).unwrap().clustering);
            inner.push(c);
        }
        let product = product_colouring(&outer, &inner).unwrap();
        prop_assert!(audit(&g, &product).unwrap().clustering <= worst);
    }

    #[test]
    fn lovasz_search_strictly_improves(g in graph_strategy(40, 4), d in 0usize..4) {
        let run = lovasz_defective(&g, d);
        prop_assert!(run.bichromatic.windows(2).all(|w| w[1] > w[0]));
        prop_assert!(run.iterations <= g.m());
        let cert = audit(&g, &run.colouring).unwrap();
        prop_assert!(cert.defect <= d && cert.k <= run.palette);
    }

    #[test]
    fn light_edges_colour_or_explain(g in graph_strategy(30, 3), k in 1usize..4, slack in 0usize..4) {
        let ell = k + slack;
        let lists = ListAssignment::uniform(g.n(), k + 1);
        match light_edge_colour(&g, &lists, k, ell) {
            Ok(c) => {
                prop_assert!(respects_lists(&c, &lists));
                prop_assert!(audit(&g, &c).unwrap().defect <= ell - k);
            }
            Err(GreedyError::NoLightEdge { vertices, edges, .. }) => {
                let mut rest = Graph::new(g.n());
                for &(u, v) in &edges {
                    prop_assert!(g.has_edge(u, v));
                    rest.add_edge(u, v).unwrap();
                }
                prop_assert!(vertices.iter().all(|&v| rest.degree(v) > k));
                prop_assert!(rest.edges().all(|(u, v)| rest.degree(u) > ell || rest.degree(v) > ell));
            }
            Err(other) => prop_assert!(false, "unexpected error {other}"),
        }
    }

    #[test]
    fn islands_contain_their_monochromatic_components(g in graph_strategy(30, 2)) {
        let (degeneracy, _) = g.degeneracy_order();
        let lists = ListAssignment::uniform(g.n(), degeneracy + 1);
        let run = island_colour(&g, &lists, degeneracy, degeneracy_islands).unwrap();
        let owner = run.island_of();
        for component in monochromatic_components(&g, &run.colouring) {
            prop_assert!(component.iter().all(|&v| owner[v] == owner[component[0]]));
        }
    }

    #[test]
    fn oracle_answers_are_antitone(g in graph_strategy(8, 2)) {
        let caps = Caps::default();
        let defect: Vec<usize> = (0..3).map(|d| min_colours_defect(&g, d, &caps).unwrap()).collect();
        let cluster: Vec<usize> = (1..4).map(|c| min_colours_clustering(&g, c, &caps).unwrap()).collect();
        prop_assert!(defect.windows(2).all(|w| w[1] <= w[0]));
        prop_assert!(cluster.windows(2).all(|w| w[1] <= w[0]));
        prop_assert_eq!(defect[0], cluster[0]);
    }

    #[test]
    fn formats_round_trip(g in graph_strategy(70, 3)) {
        for format in GraphFormat::ALL {
            let parsed = read_graph(&write_graph(&g, format), format).unwrap();
            prop_assert_eq!(&parsed.graph, &g);
            prop_assert_eq!(parsed.duplicates, 0);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn cut_tree_matches_pairwise_flows(g in connected_strategy(12, 20)) {
        let tree = gomory_hu(&g).unwrap();
        for u in 0..g.n() {
            for v in u + 1..g.n() {
                let mut net = defcol::flow::FlowNetwork::new(g.n());
                for (a, b) in g.edges() {
                    net.add_edge(a, b, 1);
                }
                prop_assert_eq!(tree.min_cut(u, v) as i64, net.max_flow(u, v));
            }
        }
    }

    #[test]
    fn immersion_partitions_or_certificates(g in graph_strategy(16, 3), t in 3usize..5) {
        match immersion_tpartition(&g, t) {
            Ok(partition) => {
                prop_assert!(partition.bags.iter().all(|b| b.len() < t));
                prop_assert!(partition.adhesion(&g) < (t - 1) * (t - 1));
            }
            Err(StructuralError::Immersion(cert)) => prop_assert!(cert.verify(&g)),
            Err(other) => prop_assert!(false, "unexpected error {other}"),
        }
    }

    #[test]
    fn transversals_are_independent(seed in any::<u64>(), n in 30usize..200) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = defcol::constructions::random_bounded_degree(n, 4, 4 * n, &mut rng);
        let split = lovasz_defective(&g, 2);
        let out = defect2_to_cluster(&g, &split.colouring, SegmentLength::Short, seed).unwrap();
        let chosen: BTreeSet<usize> = out.transversal.iter().copied().collect();
        prop_assert!(g.edges().all(|(u, v)| !(chosen.contains(&u) && chosen.contains(&v))));
        prop_assert!(out.segments.iter().zip(&out.transversal).all(|(s, v)| s.contains(v)));
        prop_assert!(audit(&g, &out.colouring).unwrap().clustering <= SegmentLength::Short.clustering_bound(g.max_degree()));
    }

    #[test]
    fn circumference_bounds(g in graph_strategy(14, 2)) {
        let k = circumference(&g, &Caps::default()).unwrap().max(2);
        let colouring = circumference_colour(&g, k, &Caps::default()).unwrap();
        let cert = audit(&g, &colouring).unwrap();
        prop_assert!(cert.k <= circumference_palette(k) && cert.clustering <= k);
    }

    #[test]
    fn minimal_subgraphs_have_bounded_degree(g in connected_strategy(30, 30), picks in proptest::collection::vec(any::<prop::sample::Index>(), 1..7)) {
        let terminals: BTreeSet<usize> = picks.iter().map(|i| i.index(g.n())).collect();
        let terminals: Vec<usize> = terminals.into_iter().collect();
        let out = minimal_connected_subgraph(&g, &terminals).unwrap();
        let sub = g.induced_subgraph(&out.vertices).graph;
        prop_assert!(sub.is_connected() && sub.max_degree() <= terminals.len());
        prop_assert!(audit(&sub, &out.colouring).unwrap().clustering <= terminals.len().div_ceil(2));
    }

    #[test]
    fn triangulations_split_into_paths(seed in any::<u64>(), n in 4usize..120) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let t = random_triangulation(n, n, &mut rng);
        let cert = audit(t.graph(), &poh_three_colour(&t).unwrap()).unwrap();
        prop_assert!(cert.k <= 3 && cert.all_paths);
    }

    #[test]
    fn planar_three_colouring_defect(seed in any::<u64>(), n in 4usize..150) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (g, _) = random_plane_graph(n, 0.8, &mut rng);
        let cert = audit(&g, &genus_three_colour(&g, 0).unwrap()).unwrap();
        prop_assert!(cert.k <= 3 && cert.defect <= genus_defect(0));
    }

    #[test]
    fn fragmentation_respects_declared_bounds(seed in any::<u64>(), n in 10usize..150, target in 2usize..20) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (g, _) = random_plane_graph(n, 0.7, &mut rng);
        let oracle = BfsLevelOracle::planar();
        let out = fragment(&g, &oracle, target).unwrap();
        prop_assert!(out.largest <= target);
        prop_assert!(out.separator.len() as f64 <= oracle.bound().fragment_limit(g.n(), target) + 1e-9);
    }
}
