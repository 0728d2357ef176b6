//! Fast-path results checked against independent brute-force enumeration.

mod common;

use std::collections::BTreeSet;

use homog3_core::amalgamation::{member, solve, AmalgamationProblem, FillStrategy, ForbiddenSet};
use homog3_core::analysis::equivalences;
use homog3_core::constructions::random_ngraph;
use homog3_core::graph::VertexMap;
use homog3_core::homogeneity::check_homogeneity;
use homog3_core::stability::find_half_graph;
use homog3_core::{are_isomorphic, canonical_key, Budgets, NGraph, SplitMix64};

use common::{all_two_colored, half_graph_exists, iso_by_permutation, naive_homogeneous};

fn class_count(graphs: &[NGraph]) -> usize {
    graphs
        .iter()
        .map(canonical_key)
        .collect::<BTreeSet<_>>()
        .len()
}

#[test]
fn two_colored_graphs_on_four_vertices_have_eleven_classes() {
    let graphs = all_two_colored(4);
    assert_eq!(graphs.len(), 64);
    assert_eq!(class_count(&graphs), 11);
}

#[test]
fn three_colored_triangles_have_ten_classes() {
    let mut graphs = Vec::new();
    for a in 0..3u8 {
        for b in 0..3u8 {
            for c in 0..3u8 {
                graphs.push(NGraph::from_matrix(&["R", "S", "T"], 3, vec![a, b, c]).unwrap());
            }
        }
    }
    assert_eq!(graphs.len(), 27);
    assert_eq!(class_count(&graphs), 10);
}

#[test]
fn isomorphism_agrees_with_permutation_scan_on_four_vertices() {
    let graphs = all_two_colored(4);
    for (a, g) in graphs.iter().enumerate() {
        for h in &graphs[a..] {
            let fast = are_isomorphic(g, h).unwrap();
            let slow = iso_by_permutation(g, h);
            assert_eq!(fast.is_some(), slow.is_some());
            if let Some(map) = fast {
                assert!(map.is_embedding(g, h));
            }
        }
    }
}

#[test]
fn isomorphism_agrees_with_permutation_scan_on_random_graphs() {
    let mut rng = SplitMix64::new(0x5eed);
    for round in 0..30 {
        let size = 5 + (round % 3);
        let g = random_ngraph(size, 3, rng.next_u64()).unwrap();
        let h = if round % 2 == 0 {
            let mut perm: Vec<usize> = (0..size).collect();
            for i in (1..size).rev() {
                perm.swap(i, rng.below(i as u64 + 1) as usize);
            }
            g.relabel(&perm).unwrap()
        } else {
            random_ngraph(size, 3, rng.next_u64()).unwrap()
        };
        let fast = are_isomorphic(&g, &h).unwrap();
        let slow = iso_by_permutation(&g, &h);
        assert_eq!(fast.is_some(), slow.is_some());
        if let Some(map) = fast {
            assert!(map.is_embedding(&g, &h));
        }
    }
}

#[test]
fn homogeneity_agrees_with_naive_oracle_on_four_vertices() {
    let mut homogeneous = 0;
    for g in all_two_colored(4) {
        let fast = check_homogeneity(&g, 4).unwrap();
        let slow = naive_homogeneous(&g, 4);
        assert_eq!(fast.holds, slow, "disagree on matrix {:?}", g.matrix());
        if fast.holds {
            homogeneous += 1;
        } else {
            let f = fast.failure.unwrap();
            assert_eq!(f.domain.len(), f.images.len());
        }
    }
    assert!(homogeneous > 0);
}

#[test]
fn half_graph_search_agrees_with_tuple_scan() {
    let mut rng = SplitMix64::new(0x5a1f);
    let budgets = Budgets::default();
    for _ in 0..6 {
        let g = random_ngraph(8, 2, rng.next_u64()).unwrap();
        for p in 0..2u8 {
            for m in 1..=3usize {
                let fast = find_half_graph(&g, p, m, None, &budgets).unwrap();
                let slow = half_graph_exists(&g, p, m);
                assert_eq!(fast.is_some(), slow, "p={p} m={m}");
            }
        }
    }
}

#[test]
fn equivalence_detection_matches_direct_relation_check() {
    let mut rng = SplitMix64::new(991);
    for _ in 0..10 {
        let g = random_ngraph(9, 3, rng.next_u64()).unwrap();
        for report in equivalences(&g) {
            let related = |u: usize, v: usize| u == v || report.colors.contains(&g.color(u, v));
            let transitive = (0..9).all(|a| {
                (0..9).all(|b| (0..9).all(|c| !(related(a, b) && related(b, c)) || related(a, c)))
            });
            assert_eq!(report.is_equivalence, transitive);
            if report.is_equivalence {
                let covered: usize = report.classes.iter().map(Vec::len).sum();
                assert_eq!(covered, 9);
                for class in &report.classes {
                    for &u in class {
                        for &v in class {
                            assert!(related(u, v));
                        }
                    }
                }
            }
        }
    }
}

/// Random amalgamation problems drawn inside the class, solved and
/// re-verified. The base embeds into both sides as a common prefix.
#[test]
fn amalgamation_certificates_verify_on_random_problems() {
    let budgets = Budgets::default();
    let forb = ForbiddenSet::triangles(&["R", "S"], &["RRR"], &budgets).unwrap();
    let mut rng = SplitMix64::new(4242);
    let mut solved = 0;
    let mut produced = 0;
    while produced < 8 {
        let g = random_ngraph(6, 2, rng.next_u64()).unwrap();
        if !member(&g, &forb).unwrap().member {
            continue;
        }
        let base = g.induced(&[0, 1]).unwrap();
        let left = g.induced(&[0, 1, 2, 3]).unwrap();
        let right = g.induced(&[0, 1, 4, 5]).unwrap();
        let problem = AmalgamationProblem::new(
            base,
            left,
            right,
            VertexMap::identity(2),
            VertexMap::identity(2),
        )
        .unwrap();
        produced += 1;
        let cert = solve(&problem, &forb, FillStrategy::Lexicographic, &budgets).unwrap();
        cert.verify(&problem, &forb).unwrap();
        if cert.solution.is_some() {
            solved += 1;
        }
    }
    // The original graph is itself a solution, so every instance solves.
    assert_eq!(solved, produced);
}
