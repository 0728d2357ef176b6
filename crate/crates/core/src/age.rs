//! Age enumeration: induced substructures up to isomorphism.

use std::collections::BTreeMap;

use itertools::Itertools;

use crate::budget::Budgets;
use crate::canon::{canonical_form, canonical_key};
use crate::error::Error;
use crate::graph::{Color, NGraph};
use crate::Result;

/// Canonical representatives of the induced substructures of a graph, one
/// bucket per size from 1 to `max_size`, each bucket sorted by canonical
/// matrix.
#[derive(Debug, Clone)]
pub struct AgeCatalog {
    max_size: usize,
    buckets: Vec<Vec<NGraph>>,
}

impl AgeCatalog {
    pub fn max_size(&self) -> usize {
        self.max_size
    }

    /// Representatives of size `s` (1-based), ascending canonical matrix.
    pub fn representatives(&self, s: usize) -> &[NGraph] {
        &self.buckets[s - 1]
    }

    /// Number of isomorphism types per size, index 0 holding size 1.
    pub fn counts(&self) -> Vec<usize> {
        self.buckets.iter().map(|b| b.len()).collect()
    }

    /// Whether `h` is isomorphic to a catalogued substructure.
    pub fn contains(&self, h: &NGraph) -> bool {
        if h.size() == 0 || h.size() > self.max_size {
            return false;
        }
        let key = canonical_key(h);
        self.buckets[h.size() - 1]
            .binary_search_by(|g| g.matrix().cmp(key.as_slice()))
            .is_ok()
    }
}

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc = 1u64;
    for i in 0..k {
        acc = acc.saturating_mul(n - i) / (i + 1);
    }
    acc
}

/// Enumerates the age of `g` up to size `k`: every subset of at most `k`
/// vertices is scanned and canonicalized. The subset count is charged
/// against the age budget before scanning starts.
pub fn enumerate_age(g: &NGraph, k: usize, budgets: &Budgets) -> Result<AgeCatalog> {
    if k == 0 {
        return Err(Error::invalid("age size bound must be at least 1"));
    }
    let k = k.min(g.size());
    let total: u64 = (1..=k).map(|s| binomial(g.size() as u64, s as u64)).sum();
    Budgets::check(
        "age subset count",
        "AGE_SUBSETS",
        total,
        budgets.age_subsets,
    )?;

    let mut buckets = Vec::with_capacity(k);
    for s in 1..=k {
        let mut seen: BTreeMap<Vec<Color>, NGraph> = BTreeMap::new();
        for subset in (0..g.size()).combinations(s) {
            let form = canonical_form(&g.induced(&subset)?);
            seen.entry(form.matrix().to_vec()).or_insert(form);
        }
        buckets.push(seen.into_values().collect());
    }
    Ok(AgeCatalog {
        max_size: k,
        buckets,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn monochromatic_age_has_one_type_per_size() {
        let g = NGraph::monochromatic(&["R", "S", "T"], 6, 0).unwrap();
        let age = enumerate_age(&g, 4, &Budgets::default()).unwrap();
        assert_eq!(age.counts(), vec![1, 1, 1, 1]);
    }

    #[test]
    fn pentagon_age_counts() {
        let g = NGraph::from_fn(
            &["R", "S"],
            5,
            |i, j| {
                if j - i == 1 || j - i == 4 {
                    0
                } else {
                    1
                }
            },
        )
        .unwrap();
        let age = enumerate_age(&g, 3, &Budgets::default()).unwrap();
        // Size 2: both colors appear. Size 3: RSS and SSR triangles only
        // (no monochromatic triangle in a pentagon).
        assert_eq!(age.counts(), vec![1, 2, 2]);
    }

    #[test]
    fn age_is_hereditary() {
        let g =
            NGraph::from_fn(&["R", "S", "T"], 7, |i, j| ((i * 5 + j * 3) % 3) as Color).unwrap();
        let age = enumerate_age(&g, 4, &Budgets::default()).unwrap();
        for s in 2..=4 {
            for rep in age.representatives(s) {
                for drop in 0..s {
                    let verts: Vec<usize> = (0..s).filter(|&v| v != drop).collect();
                    let sub = rep.induced(&verts).unwrap();
                    assert!(age.contains(&sub), "substructure of a member escaped");
                }
            }
        }
    }

    #[test]
    fn age_budget_is_enforced() {
        let g = NGraph::monochromatic(&["R", "S"], 40, 0).unwrap();
        let tight = Budgets {
            age_subsets: 100,
            ..Budgets::default()
        };
        assert!(matches!(
            enumerate_age(&g, 5, &tight),
            Err(Error::Budget { .. })
        ));
    }

    #[test]
    fn contains_respects_isomorphism() {
        let g = NGraph::from_matrix(&["R", "S"], 3, vec![0, 1, 0]).unwrap();
        let age = enumerate_age(&g, 3, &Budgets::default()).unwrap();
        let relabeled = g.relabel(&[2, 0, 1]).unwrap();
        assert!(age.contains(&relabeled));
        let missing = NGraph::monochromatic(&["R", "S"], 3, 1).unwrap();
        assert!(!age.contains(&missing));
    }
}
