//! Workbench for finite edge-colored complete graphs ("n-graphs").
//!
//! Every unordered pair of vertices carries exactly one color from a fixed
//! signature of `n >= 2` named colors. The library provides:
//!
//! - exact isomorphism, automorphisms, canonical forms, and age enumeration
//!   ([`graph`], [`canon`], [`age`]);
//! - generators for structured families: wreath compositions, clique
//!   products, covers of random graphs, blown-up random quotients
//!   ([`constructions`]);
//! - combinatorial diagnostics: per-color distances, equivalence detection
//!   and quotients, class-pair decomposition, homogeneity and extension-axiom
//!   checks, amalgamation over forbidden configurations, half-graph search,
//!   line geometry ([`analysis`], [`homogeneity`], [`amalgamation`],
//!   [`stability`], [`geometry`]);
//! - a structural classifier mapping samples back to the family that
//!   plausibly generated them ([`classify`]).
//!
//! All operations are deterministic: randomized generators draw from an
//! explicit 64-bit seeded stream, searches scan in fixed vertex order, and
//! reports sort their contents.

pub mod age;
pub mod amalgamation;
pub mod analysis;
pub mod budget;
pub mod canon;
pub mod classify;
pub mod constructions;
pub mod error;
pub mod geometry;
pub mod graph;
pub mod homogeneity;
pub mod io;
pub mod rng;
pub mod stability;

pub use age::{enumerate_age, AgeCatalog};
pub use budget::Budgets;
pub use canon::{are_isomorphic, automorphisms, canonical_form, canonical_key, canonical_order};
pub use error::Error;
pub use graph::{Color, NGraph, VertexMap};
pub use rng::SplitMix64;

/// Crate-wide result type.
pub type Result<T> = std::result::Result<T, Error>;
