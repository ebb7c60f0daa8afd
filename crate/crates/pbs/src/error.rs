//! Error type shared by every module of the crate.
//!
//! All fallible operations return [`Result`]. Preconditions that a caller can
//! violate (an out-of-range subdivision level, a malformed permutation word, a
//! chain that breaks one of the chain-face conditions) map to dedicated
//! variants so callers can match on the failure mode; internal consistency
//! violations that should be impossible map to [`Error::Internal`] and always
//! indicate a bug in this crate.

use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A vertex label was `0` or exceeded the ground set size.
    ///
    /// Vertex labels are the positive integers `1..=n`; `0` is never a valid
    /// label.
    #[error("invalid vertex label {label} (ground set is 1..={ground})")]
    InvalidVertex {
        /// The offending label.
        label: u32,
        /// Size of the ground set against which it was checked.
        ground: u32,
    },

    /// A simplicial complex was given an empty *list* of facets.
    ///
    /// The empty complex is not representable here; the void complex `{∅}` is,
    /// via a single empty facet.
    #[error("a simplicial complex needs at least one facet (use a single empty facet for {{∅}})")]
    EmptyFacetList,

    /// A subdivision level outside the range a routine supports.
    #[error("level {level} out of range (expected {requirement})")]
    InvalidLevel {
        /// The offending level.
        level: usize,
        /// The accepted range, e.g. `"1..=4"` or `"at least 1"`.
        requirement: String,
    },

    /// A word that is not a permutation of `1..=d`, or a permutation outside
    /// the class a routine requires (for instance one whose first `l` entries
    /// are not decreasing).
    #[error("invalid permutation: {reason}")]
    InvalidPermutation {
        /// Human-readable description of the violation.
        reason: String,
    },

    /// A chain of vertex sets that violates one of the four chain-face
    /// conditions.
    #[error("invalid chain face: {reason}")]
    InvalidChain {
        /// Which condition failed and how.
        reason: String,
    },

    /// Matrix/vector dimensions do not line up.
    #[error("dimension mismatch: {context}")]
    DimensionMismatch {
        /// What was being combined with what.
        context: String,
    },

    /// Division by an exact zero.
    #[error("division by zero")]
    DivisionByZero,

    /// A string that does not parse as the requested object.
    #[error("parse error: {reason}")]
    Parse {
        /// What failed to parse and why.
        reason: String,
    },

    /// Root counting was asked about the zero polynomial, whose root set is
    /// not finite.
    #[error("the zero polynomial has no finite root count")]
    ZeroPolynomial,

    /// A root-counting interval with its lower bound above its upper bound.
    #[error("invalid interval: lower bound exceeds upper bound")]
    InvalidInterval,

    /// Eigenspace dimensions did not sum to the matrix size: the predicted
    /// spectrum failed to certify diagonalizability. This aborts the
    /// decomposition loudly instead of returning a partial answer.
    #[error("spectrum mismatch for {context}: eigenspace dimensions sum to {found}, expected {expected}")]
    SpectrumMismatch {
        /// Which matrix was being decomposed.
        context: String,
        /// Sum of computed eigenspace dimensions.
        found: usize,
        /// The matrix size the dimensions must reach.
        expected: usize,
    },

    /// Malformed JSON, or JSON whose shape does not match the schema of the
    /// object being read.
    #[error("json error: {reason}")]
    Json {
        /// What was wrong with the document.
        reason: String,
    },

    /// An internal invariant failed. Always a bug in this crate.
    #[error("internal invariant violated: {reason}")]
    Internal {
        /// Which invariant broke.
        reason: String,
    },
}

impl Error {
    /// Shorthand for [`Error::Internal`].
    pub(crate) fn internal(reason: impl Into<String>) -> Self {
        Error::Internal { reason: reason.into() }
    }

    /// Shorthand for [`Error::DimensionMismatch`].
    pub(crate) fn dims(context: impl Into<String>) -> Self {
        Error::DimensionMismatch { context: context.into() }
    }

    /// Shorthand for the ubiquitous `min ≤ l ≤ max` level check.
    pub(crate) fn level_in(level: usize, min: usize, max: usize) -> Self {
        Error::InvalidLevel { level, requirement: format!("{min}..={max}") }
    }

    /// Shorthand for the one-sided `l ≥ 1` level check.
    pub(crate) fn level_at_least_one(level: usize) -> Self {
        Error::InvalidLevel { level, requirement: "at least 1".into() }
    }
}
