//! Invariants checked over randomized inputs.

use proptest::prelude::*;

use homog3_core::analysis::quotient_keeping_signature;
use homog3_core::constructions::wreath;
use homog3_core::graph::Color;
use homog3_core::io::{from_json, to_json};
use homog3_core::stability::{find_half_graph, verify_half_graph};
use homog3_core::{are_isomorphic, canonical_form, canonical_key, enumerate_age, Budgets, NGraph};

const RST: [&str; 3] = ["R", "S", "T"];

fn ngraph(max_size: usize, colors: usize) -> impl Strategy<Value = NGraph> {
    (0..=max_size).prop_flat_map(move |size| {
        let pairs = size * size.saturating_sub(1) / 2;
        proptest::collection::vec(0..colors as Color, pairs)
            .prop_map(move |matrix| NGraph::from_matrix(&RST[..colors], size, matrix).unwrap())
    })
}

fn ngraph_with_perm(max_size: usize, colors: usize) -> impl Strategy<Value = (NGraph, Vec<usize>)> {
    ngraph(max_size, colors).prop_flat_map(|g| {
        let n = g.size();
        let perm = Just((0..n).collect::<Vec<usize>>()).prop_shuffle();
        (Just(g), perm)
    })
}

proptest! {
    #[test]
    fn canonical_form_is_relabeling_invariant((g, perm) in ngraph_with_perm(7, 3)) {
        let relabeled = g.relabel(&perm).unwrap();
        prop_assert_eq!(canonical_key(&g), canonical_key(&relabeled));
        let (cg, cr) = (canonical_form(&g), canonical_form(&relabeled));
        prop_assert_eq!(cg.matrix(), cr.matrix());
    }

    #[test]
    fn isomorphism_maps_are_embeddings((g, perm) in ngraph_with_perm(7, 3)) {
        let relabeled = g.relabel(&perm).unwrap();
        let map = are_isomorphic(&g, &relabeled).unwrap().expect("relabeling is an isomorphism");
        prop_assert!(map.is_embedding(&g, &relabeled));
    }

    #[test]
    fn json_round_trip_is_exact(g in ngraph(8, 3)) {
        let text = to_json(&g);
        let back = from_json(&text).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(to_json(&back), text);
    }

    #[test]
    fn age_triangle_bucket_matches_spectrum(g in ngraph(8, 3)) {
        prop_assume!(g.size() >= 3);
        let age = enumerate_age(&g, 3, &Budgets::default()).unwrap();
        prop_assert_eq!(age.counts()[2], g.triangle_spectrum().len());
    }

    #[test]
    fn age_representatives_occur_in_their_graph(g in ngraph(6, 2)) {
        prop_assume!(g.size() >= 2);
        let age = enumerate_age(&g, 3, &Budgets::default()).unwrap();
        for s in 1..=3.min(g.size()) {
            for rep in age.representatives(s) {
                prop_assert!(age.contains(rep));
            }
        }
    }

    #[test]
    fn wreath_quotient_recovers_the_outer_graph(
        outer in ngraph(5, 3).prop_filter("needs cross colors", |g| g.size() >= 2),
        inner_size in 2usize..4,
    ) {
        // Inner cliques carry R; the outer graph must avoid it so the
        // R-classes are exactly the copies of the inner clique.
        let shifted = NGraph::from_fn(&RST, outer.size(), |i, j| {
            1 + outer.color(i, j) % 2
        }).unwrap();
        let inner = NGraph::monochromatic(&RST, inner_size, 0).unwrap();
        let w = wreath(&shifted, &inner).unwrap();
        let (q, classes) = quotient_keeping_signature(&w, &[0]).unwrap();
        prop_assert_eq!(classes.len(), w.size());
        prop_assert!(are_isomorphic(&q, &shifted).unwrap().is_some());
    }

    #[test]
    fn half_graph_witnesses_verify(g in ngraph(8, 2), p in 0u8..2, m in 1usize..3) {
        if let Some(w) = find_half_graph(&g, p, m, None, &Budgets::default()).unwrap() {
            prop_assert!(verify_half_graph(&g, &w).is_ok());
            prop_assert_eq!(w.order, m);
            prop_assert_eq!(w.color, p);
        }
    }

    #[test]
    fn triangle_spectrum_counts_every_triple(g in ngraph(8, 3)) {
        let total: u64 = g.triangle_spectrum().values().sum();
        let n = g.size() as u64;
        let expected = if n >= 3 { n * (n - 1) * (n - 2) / 6 } else { 0 };
        prop_assert_eq!(total, expected);
    }
}
