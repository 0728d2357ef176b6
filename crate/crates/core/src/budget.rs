//! Resource bounds for the search-shaped operations.
//!
//! Every bound can be overridden through `HOMOG3_BUDGET_<KEY>` so a caller
//! can deliberately pay for a larger computation. Exceeding a bound is the
//! `Error::Budget` case, reported before the computation starts.

use crate::error::Error;
use crate::Result;

#[derive(Debug, Clone)]
pub struct Budgets {
    /// Largest graph whose automorphism group is enumerated (`AUTOMORPHISM_SIZE`).
    pub automorphism_size: u64,
    /// Total subsets an age enumeration may scan (`AGE_SUBSETS`).
    pub age_subsets: u64,
    /// Largest region for exact clique search (`CLIQUE_REGION`).
    pub clique_region: u64,
    /// Largest half-graph order searched (`HALFGRAPH_ORDER`).
    pub halfgraph_order: u64,
    /// Largest side size in amalgamation problems (`AP_MAX_SIZE`).
    pub ap_max_size: u64,
    /// Most colorings a single amalgamation failure record may enumerate
    /// (`AP_COLORINGS`).
    pub ap_colorings: u64,
    /// Largest forbidden configuration (`FORBIDDEN_SIZE`).
    pub forbidden_size: u64,
    /// Placements scanned per extension demand before sampling kicks in
    /// (`EXTENSION_PLACEMENTS`).
    pub extension_placements: u64,
    /// Class-triple unions scanned by the quotient transitivity check
    /// (`UNION_TRIPLES`).
    pub union_triples: u64,
}

impl Default for Budgets {
    fn default() -> Self {
        Budgets {
            automorphism_size: 12,
            age_subsets: 5_000_000,
            clique_region: 64,
            halfgraph_order: 6,
            ap_max_size: 6,
            ap_colorings: 1_000_000,
            forbidden_size: 4,
            extension_placements: 5_000_000,
            union_triples: 2_000,
        }
    }
}

impl Budgets {
    /// Defaults with any `HOMOG3_BUDGET_<KEY>` environment overrides applied.
    pub fn from_env() -> Self {
        let mut b = Budgets::default();
        let read = |key: &str| -> Option<u64> {
            std::env::var(format!("HOMOG3_BUDGET_{key}"))
                .ok()
                .and_then(|v| v.parse().ok())
        };
        if let Some(v) = read("AUTOMORPHISM_SIZE") {
            b.automorphism_size = v;
        }
        if let Some(v) = read("AGE_SUBSETS") {
            b.age_subsets = v;
        }
        if let Some(v) = read("CLIQUE_REGION") {
            b.clique_region = v;
        }
        if let Some(v) = read("HALFGRAPH_ORDER") {
            b.halfgraph_order = v;
        }
        if let Some(v) = read("AP_MAX_SIZE") {
            b.ap_max_size = v;
        }
        if let Some(v) = read("AP_COLORINGS") {
            b.ap_colorings = v;
        }
        if let Some(v) = read("FORBIDDEN_SIZE") {
            b.forbidden_size = v;
        }
        if let Some(v) = read("EXTENSION_PLACEMENTS") {
            b.extension_placements = v;
        }
        if let Some(v) = read("UNION_TRIPLES") {
            b.union_triples = v;
        }
        b
    }

    pub fn check(what: &'static str, key: &'static str, requested: u64, limit: u64) -> Result<()> {
        if requested > limit {
            Err(Error::Budget {
                what,
                key,
                requested,
                limit,
            })
        } else {
            Ok(())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn check_reports_key_and_sizes() {
        let err = Budgets::check("graph size", "AUTOMORPHISM_SIZE", 20, 12).unwrap_err();
        match err {
            Error::Budget {
                requested, limit, ..
            } => {
                assert_eq!((requested, limit), (20, 12));
            }
            other => panic!("unexpected error {other:?}"),
        }
    }
}
