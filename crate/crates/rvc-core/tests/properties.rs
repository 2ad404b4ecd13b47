//! Property tests for the repo-wide invariants: serialization round-trips,
//! graph power monotonicity, path alternation, and coloring optimality on
//! small random inputs.

use proptest::prelude::*;

use rvc_core::graph::Graph;
use rvc_core::io::{
    parse_coloring, parse_graph, parse_model, parse_treepow, serialize_coloring, serialize_graph,
    serialize_model, serialize_treepow,
};
use rvc_core::oracle::{check_rainbow, VertexColoring};
use rvc_core::perm::{build_x_path, build_y_path, PermutationModel};
use rvc_core::treepow::{color_tree_power, rvc_value, Tree};

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
            .collect();
        proptest::sample::subsequence(pairs.clone(), 0..=pairs.len())
            .prop_map(move |edges| Graph::from_edges(n, &edges).unwrap())
    })
}

fn arb_model(max_n: usize) -> impl Strategy<Value = PermutationModel> {
    (1..=max_n).prop_flat_map(|n| {
        Just((1..=n).collect::<Vec<usize>>())
            .prop_shuffle()
            .prop_map(|bottom| PermutationModel::from_bottom_ranks(bottom).unwrap())
    })
}

fn arb_tree(max_n: usize) -> impl Strategy<Value = Tree> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(0..usize::MAX, n.saturating_sub(1))
            .prop_map(move |raw| {
                let edges: Vec<(usize, usize)> = raw
                    .iter()
                    .enumerate()
                    .map(|(i, &r)| (r % (i + 1), i + 1))
                    .collect();
                Tree::from_edges(n, &edges).unwrap()
            })
    })
}

proptest! {
    #[test]
    fn graph_serialization_round_trips(g in arb_graph(14)) {
        let text = serialize_graph(&g);
        prop_assert_eq!(parse_graph(&text).unwrap(), g);
    }

    #[test]
    fn model_serialization_round_trips(m in arb_model(20)) {
        let text = serialize_model(&m);
        prop_assert_eq!(parse_model(&text).unwrap(), m);
    }

    #[test]
    fn coloring_serialization_round_trips(
        colors in proptest::collection::vec(1..5usize, 1..20)
    ) {
        let k = *colors.iter().max().unwrap();
        let c = VertexColoring::new(k, colors).unwrap();
        let text = serialize_coloring(&c);
        prop_assert_eq!(parse_coloring(&text).unwrap(), c);
    }

    #[test]
    fn treepow_serialization_round_trips(t in arb_tree(16), k in 1..5usize) {
        let text = serialize_treepow(&t, k);
        let (t2, k2) = parse_treepow(&text).unwrap();
        prop_assert_eq!(t2, t);
        prop_assert_eq!(k2, k);
    }

    #[test]
    fn graph_powers_are_monotone(g in arb_graph(10), k in 1..6usize) {
        let a = g.power(k).unwrap();
        let b = g.power(k + 1).unwrap();
        for (u, v) in a.edges() {
            prop_assert!(b.has_edge(u, v));
        }
    }

    #[test]
    fn greedy_paths_alternate_and_are_simple(m in arb_model(16), u in 0..16usize, v in 0..16usize) {
        prop_assume!(u < m.n() && v < m.n() && u != v);
        let g = m.to_graph();
        // The greedy constructions are defined on connected models.
        prop_assume!(g.is_connected());
        if let Some(x) = build_x_path(&m, u, v).unwrap() {
            prop_assert!(x.alternates(&m));
            prop_assert!(x.is_path_in(&g));
        }
        if let Some(y) = build_y_path(&m, u, v).unwrap() {
            prop_assert!(y.alternates(&m));
            prop_assert!(y.is_path_in(&g));
        }
    }

    #[test]
    fn tree_power_colorings_verify(t in arb_tree(18), k in 2..5usize) {
        let c = color_tree_power(&t, k).unwrap();
        prop_assert_eq!(c.distinct_color_count(), rvc_value(&t, k).unwrap());
        let gk = t.power(k).unwrap();
        prop_assert!(check_rainbow(&gk, &c).unwrap().is_rainbow());
    }
}
