//! A single error type shared by every module, with stable machine-readable
//! codes for the CLI surface.

use thiserror::Error;

/// Every fallible operation in this crate returns one of these variants.
///
/// [`Error::code`] yields the stable identifier that the CLI prints in its
/// `{"error": ..., "message": ...}` envelope; messages carry the
/// human-readable detail and are not part of the stability contract.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Point labels are inconsistent with each other or with the curve type
    /// they are interpreted over.
    #[error("{0}")]
    MixedCurves(String),

    /// A bundle decomposition was given with no summands.
    #[error("the summand list must be nonempty")]
    EmptyF,

    /// The (genus, real component count, dividing type) triple is not a valid
    /// topological type of a real curve.
    #[error("{0}")]
    InvalidCurveType(String),

    /// The presentation violates a structural invariant.
    #[error("{0}")]
    InvalidPresentation(String),

    /// A real-point transformation was requested over a component carrying no
    /// real point of the manifold.
    #[error("no real point of the manifold lies over component {component}")]
    RealLocusOutsideRealPart { component: u32 },

    /// A record rank lies outside `1..=n-1`.
    #[error("rank {rank} is outside 1..={max}")]
    RankOutOfRange { rank: u32, max: u32 },

    /// A rewrite move's precondition fails on the given presentation.
    #[error("{0}")]
    NotApplicable(String),

    /// Orientability bookkeeping is only defined for rank-1 real records.
    #[error("real records of rank > 1 carry no orientability bookkeeping")]
    UnsupportedRank,

    /// The operation is defined only for even fiber dimension.
    #[error("operation requires an even value of n")]
    OddDimension,

    /// The operation is defined only for odd fiber dimension.
    #[error("operation requires an odd value of n")]
    EvenDimension,

    /// The operation is defined only over a base with empty real locus.
    #[error("base curve has a nonempty real locus")]
    NotEmptyBase,

    /// A deformation-class key fails its own invariants.
    #[error("{0}")]
    InvalidKey(String),
}

impl Error {
    /// Stable machine-readable code, used verbatim by the CLI.
    pub fn code(&self) -> &'static str {
        match self {
            Error::MixedCurves(_) => "MixedCurves",
            Error::EmptyF => "EmptyF",
            Error::InvalidCurveType(_) => "InvalidCurveType",
            Error::InvalidPresentation(_) => "InvalidPresentation",
            Error::RealLocusOutsideRealPart { .. } => "RealLocusOutsideRealPart",
            Error::RankOutOfRange { .. } => "RankOutOfRange",
            Error::NotApplicable(_) => "NotApplicable",
            Error::UnsupportedRank => "UnsupportedRank",
            Error::OddDimension => "OddDimension",
            Error::EvenDimension => "EvenDimension",
            Error::NotEmptyBase => "NotEmptyBase",
            Error::InvalidKey(_) => "InvalidKey",
        }
    }
}
