//! Homogeneity and extension-axiom diagnostics.
//!
//! A graph is `k`-homogeneous when every color-preserving bijection between
//! induced substructures of at most `k` vertices extends to an automorphism
//! of the whole graph. The check here is exact: subset pairs are scanned in
//! lexicographic order, partial isomorphisms are enumerated by backtracking,
//! and each is tested by an exhaustive extension search, so the first
//! reported failure is the lexicographically least one.

use itertools::Itertools;

use crate::age::enumerate_age;
use crate::budget::Budgets;
use crate::canon::{canonical_key, embeddings, find_extending_automorphism};
use crate::error::Error;
use crate::graph::{Color, NGraph};
use crate::rng::SplitMix64;
use crate::Result;

#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct HomogeneityFailure {
    /// Source vertices, ascending.
    pub domain: Vec<usize>,
    /// Image of each domain vertex under the non-extending isomorphism.
    pub images: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct HomogeneityReport {
    pub k: usize,
    pub holds: bool,
    /// Partial isomorphisms tested.
    pub checked: u64,
    /// First partial isomorphism with no automorphism extension.
    pub failure: Option<HomogeneityFailure>,
}

/// Exact `k`-homogeneity check. Every pair of vertex subsets of equal size
/// up to `k` contributes all its induced isomorphisms; each must extend.
/// Work grows with `binomial(size, k)^2 * k!`, so keep `k` small on large
/// graphs (the conventional probe is `min(4, size)`).
pub fn check_homogeneity(g: &NGraph, k: usize) -> Result<HomogeneityReport> {
    if k == 0 || k > g.size() {
        return Err(Error::invalid(format!(
            "homogeneity bound must be within 1..={}",
            g.size()
        )));
    }
    let mut checked = 0u64;
    for s in 1..=k {
        for a in (0..g.size()).combinations(s) {
            let ga = g.induced(&a)?;
            for b in (0..g.size()).combinations(s) {
                let gb = g.induced(&b)?;
                for iso in embeddings(&ga, &gb, true) {
                    checked += 1;
                    let pairs: Vec<(usize, usize)> = a
                        .iter()
                        .zip(iso.images.iter())
                        .map(|(&src, &img)| (src, b[img]))
                        .collect();
                    if find_extending_automorphism(g, &pairs).is_none() {
                        return Ok(HomogeneityReport {
                            k,
                            holds: false,
                            checked,
                            failure: Some(HomogeneityFailure {
                                domain: a.clone(),
                                images: pairs.iter().map(|&(_, d)| d).collect(),
                            }),
                        });
                    }
                }
            }
        }
    }
    Ok(HomogeneityReport {
        k,
        holds: true,
        checked,
        failure: None,
    })
}

/// One placement: the chosen set for each color, in color order.
pub type Placement = Vec<Vec<usize>>;

#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct ExtensionReport {
    pub demand: Vec<usize>,
    /// Placements scanned.
    pub placements: u64,
    pub satisfied: u64,
    pub fraction: f64,
    /// False when the placement count exceeded the budget and a seeded
    /// sample was scanned instead.
    pub exhaustive: bool,
    pub sample_seed: Option<u64>,
    /// First placement no fresh vertex satisfies.
    pub failure: Option<Placement>,
}

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u64 = 1;
    for i in 0..k {
        acc = acc.saturating_mul(n - i) / (i + 1);
    }
    acc
}

fn placement_satisfied(g: &NGraph, placement: &[Vec<usize>]) -> bool {
    let members: Vec<usize> = placement.iter().flatten().copied().collect();
    'candidate: for v in 0..g.size() {
        if members.contains(&v) {
            continue;
        }
        for (c, set) in placement.iter().enumerate() {
            for &a in set {
                if g.color(v, a) != c as Color {
                    continue 'candidate;
                }
            }
        }
        return true;
    }
    false
}

/// Tests the extension axiom for one demand vector: for every placement of
/// disjoint sets `A_c` with `|A_c| = demand[c]`, some fresh vertex must be
/// joined to all of `A_c` in color `c`, for every color simultaneously.
///
/// All placements are scanned when their count fits the placement budget;
/// otherwise that many placements are drawn from the stream seeded with
/// `sample_seed` and the report says so.
pub fn check_extension_axioms(
    g: &NGraph,
    demand: &[usize],
    budgets: &Budgets,
    sample_seed: u64,
) -> Result<ExtensionReport> {
    if demand.len() != g.color_count() {
        return Err(Error::invalid(format!(
            "demand has {} entries for {} colors",
            demand.len(),
            g.color_count()
        )));
    }
    let total: usize = demand.iter().sum();
    if total > g.size() {
        return Err(Error::invalid("demand larger than the graph"));
    }

    let mut count: u64 = 1;
    let mut left = g.size() as u64;
    for &k in demand {
        count = count.saturating_mul(binomial(left, k as u64));
        left -= k as u64;
    }

    #[derive(Default)]
    struct Tally {
        scanned: u64,
        satisfied: u64,
        failure: Option<Placement>,
    }
    let mut tally = Tally::default();

    if count <= budgets.extension_placements {
        // Exhaustive: nested combinations over the not-yet-chosen vertices.
        fn rec(
            g: &NGraph,
            demand: &[usize],
            c: usize,
            pool: &[usize],
            placement: &mut Placement,
            tally: &mut Tally,
        ) {
            if c == demand.len() {
                tally.scanned += 1;
                if placement_satisfied(g, placement) {
                    tally.satisfied += 1;
                } else if tally.failure.is_none() {
                    tally.failure = Some(placement.clone());
                }
                return;
            }
            for set in pool.iter().copied().combinations(demand[c]) {
                let rest: Vec<usize> = pool.iter().copied().filter(|v| !set.contains(v)).collect();
                placement.push(set);
                rec(g, demand, c + 1, &rest, placement, tally);
                placement.pop();
            }
        }
        let pool: Vec<usize> = (0..g.size()).collect();
        rec(g, demand, 0, &pool, &mut Vec::new(), &mut tally);
        debug_assert_eq!(tally.scanned, count);
        Ok(ExtensionReport {
            demand: demand.to_vec(),
            placements: tally.scanned,
            satisfied: tally.satisfied,
            fraction: if tally.scanned == 0 {
                1.0
            } else {
                tally.satisfied as f64 / tally.scanned as f64
            },
            exhaustive: true,
            sample_seed: None,
            failure: tally.failure,
        })
    } else {
        let mut rng = SplitMix64::new(sample_seed);
        for _ in 0..budgets.extension_placements {
            // Draw each set without replacement from the remaining pool.
            let mut pool: Vec<usize> = (0..g.size()).collect();
            let mut placement: Placement = Vec::with_capacity(demand.len());
            for &k in demand {
                let mut set = Vec::with_capacity(k);
                for _ in 0..k {
                    let pick = rng.below(pool.len() as u64) as usize;
                    set.push(pool.swap_remove(pick));
                }
                set.sort_unstable();
                placement.push(set);
            }
            tally.scanned += 1;
            if placement_satisfied(g, &placement) {
                tally.satisfied += 1;
            } else if tally.failure.is_none() {
                tally.failure = Some(placement);
            }
        }
        Ok(ExtensionReport {
            demand: demand.to_vec(),
            placements: tally.scanned,
            satisfied: tally.satisfied,
            fraction: tally.satisfied as f64 / tally.scanned as f64,
            exhaustive: false,
            sample_seed: Some(sample_seed),
            failure: tally.failure,
        })
    }
}

/// Number of isomorphism types of induced substructures per size `1..=k`.
pub fn count_subtypes(g: &NGraph, k: usize, budgets: &Budgets) -> Result<Vec<usize>> {
    Ok(enumerate_age(g, k, budgets)?.counts())
}

#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct UnionTypeReport {
    /// Isomorphism types among unions of two classes.
    pub pair_types: usize,
    /// Same for three classes; skipped when over the triple budget.
    pub triple_types: Option<usize>,
}

/// Counts isomorphism types of unions of two (and, within budget, three)
/// classes of an equivalence. A transitive action on the quotient forces a
/// single pair type; the counts measure how far a sample is from that.
pub fn check_quotient_transitivity(
    g: &NGraph,
    classes: &[Vec<usize>],
    budgets: &Budgets,
) -> Result<UnionTypeReport> {
    if classes.len() < 2 {
        return Err(Error::invalid("need at least two classes"));
    }
    let mut pair_keys = std::collections::BTreeSet::new();
    for pair in (0..classes.len()).combinations(2) {
        let mut verts: Vec<usize> = Vec::new();
        for &ci in &pair {
            verts.extend_from_slice(&classes[ci]);
        }
        verts.sort_unstable();
        pair_keys.insert(canonical_key(&g.induced(&verts)?));
    }
    let triples = binomial(classes.len() as u64, 3);
    let triple_types = if triples > 0 && triples <= budgets.union_triples {
        let mut keys = std::collections::BTreeSet::new();
        for triple in (0..classes.len()).combinations(3) {
            let mut verts: Vec<usize> = Vec::new();
            for &ci in &triple {
                verts.extend_from_slice(&classes[ci]);
            }
            verts.sort_unstable();
            keys.insert(canonical_key(&g.induced(&verts)?));
        }
        Some(keys.len())
    } else {
        None
    };
    Ok(UnionTypeReport {
        pair_types: pair_keys.len(),
        triple_types,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{pentagon_p, quotient_random, RST};

    #[test]
    fn monochromatic_clique_is_homogeneous() {
        let g = NGraph::monochromatic(&RST, 6, 0).unwrap();
        let report = check_homogeneity(&g, 4).unwrap();
        assert!(report.holds);
    }

    #[test]
    fn pentagon_is_homogeneous_at_full_order() {
        let report = check_homogeneity(&pentagon_p(0).unwrap(), 5).unwrap();
        assert!(report.holds);
    }

    #[test]
    fn path_fails_at_order_one() {
        // R-path on 3 vertices: ends and middle are distinguishable, but all
        // single vertices are isomorphic, so already k=1 fails.
        let g = NGraph::from_matrix(&["R", "S"], 3, vec![0, 1, 0]).unwrap();
        let report = check_homogeneity(&g, 1).unwrap();
        assert!(!report.holds);
        let failure = report.failure.unwrap();
        assert_eq!(failure.domain, vec![0]);
        assert_eq!(failure.images, vec![1]);
    }

    #[test]
    fn extension_axiom_on_monochromatic_clique() {
        let g = NGraph::monochromatic(&RST, 10, 1).unwrap();
        let b = Budgets::default();
        let all_s = check_extension_axioms(&g, &[0, 3, 0], &b, 0).unwrap();
        assert!(all_s.exhaustive);
        assert_eq!(all_s.fraction, 1.0);
        let needs_r = check_extension_axioms(&g, &[1, 0, 0], &b, 0).unwrap();
        assert_eq!(needs_r.satisfied, 0);
        assert!(needs_r.failure.is_some());
    }

    #[test]
    fn extension_sampling_kicks_in_over_budget() {
        let g = NGraph::monochromatic(&RST, 30, 0).unwrap();
        let b = Budgets {
            extension_placements: 50,
            ..Budgets::default()
        };
        let report = check_extension_axioms(&g, &[2, 1, 0], &b, 9).unwrap();
        assert!(!report.exhaustive);
        assert_eq!(report.placements, 50);
        assert_eq!(report.sample_seed, Some(9));
    }

    #[test]
    fn subtype_counts_match_age() {
        let g = pentagon_p(0).unwrap();
        assert_eq!(
            count_subtypes(&g, 3, &Budgets::default()).unwrap(),
            vec![1, 2, 2]
        );
    }

    #[test]
    fn union_types_on_uniform_blocks() {
        let g = quotient_random(5, 2, 3).unwrap();
        let classes: Vec<Vec<usize>> = (0..5).map(|c| vec![2 * c, 2 * c + 1]).collect();
        let report = check_quotient_transitivity(&g, &classes, &Budgets::default()).unwrap();
        // Pairs join completely in S or in T: at most two types, and with
        // seed 3 both appear.
        assert_eq!(report.pair_types, 2);
        assert!(report.triple_types.is_some());
    }
}
