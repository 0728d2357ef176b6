//! Error taxonomy shared by every module.
//!
//! Failures carry enough structure to be re-verified: a non-transitive color
//! set names the offending triple, a non-quotientable class pair names the
//! classes and the colors seen between them, a failed line extraction names
//! the edge and two distinct maximal cliques through it.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Two graphs cannot be compared color-preservingly.
    #[error("color signatures differ: [{left}] vs [{right}]")]
    SignatureMismatch { left: String, right: String },

    /// A configurable resource bound was exceeded before the computation ran.
    #[error("{what} = {requested} exceeds budget {limit} (override with HOMOG3_BUDGET_{key})")]
    Budget {
        what: &'static str,
        key: &'static str,
        requested: u64,
        limit: u64,
    },

    /// Malformed argument (out-of-range vertex, duplicate color name, ...).
    #[error("invalid argument: {0}")]
    Invalid(String),

    /// The union of the given colors is not transitive; the triple satisfies
    /// rel(a,b) and rel(b,c) but not rel(a,c).
    #[error("colors {colors:?} are not an equivalence: witness triple {witness:?}")]
    NotAnEquivalence {
        colors: Vec<u8>,
        witness: (usize, usize, usize),
    },

    /// Some pair of classes realizes more than one color across, so the
    /// quotient has no well-defined edge color there.
    #[error("classes {classes:?} realize colors {seen:?} across; quotient undefined")]
    NotQuotientable {
        colors: Vec<u8>,
        classes: (usize, usize),
        seen: Vec<u8>,
    },

    /// An edge lies in two distinct maximal monochromatic cliques, so lines
    /// are not well defined in this color.
    #[error("edge {edge:?} lies in two maximal color-{color} cliques: {cliques:?}")]
    NotSemilinear {
        color: u8,
        edge: (usize, usize),
        cliques: (Vec<usize>, Vec<usize>),
    },

    /// Serialized input could not be decoded.
    #[error("format error: {0}")]
    Format(String),
}

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::Invalid(msg.into())
    }
}
