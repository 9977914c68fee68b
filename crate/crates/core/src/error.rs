use thiserror::Error;

/// Failures of the exact pipeline.
///
/// Apart from [`Error::RankMismatch`] and [`Error::ZeroComponent`], every
/// variant signals an upstream bug: the mathematics guarantees the operation
/// succeeds on the inputs this crate generates.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),
    #[error("division by zero polynomial")]
    DivisionByZero,
    #[error("exact division left a nonzero remainder (leading exponent {0})")]
    NonDivisible(String),
    #[error("evaluation point has a zero component at index {0}")]
    ZeroComponent(usize),
    #[error("input is not invariant under generator w{0}")]
    NotInvariant(usize),
    #[error("maximal term at exponent {0} is not dominant")]
    NonDominantLeader(String),
    #[error("reduction exceeded its step bound of {0}")]
    ReductionDiverged(usize),
    #[error("generating-function numerator has nonzero coefficient at ({0}, {1})")]
    ConvolutionNotTerminating(usize, usize),
    #[error("every sample point was within the singular threshold")]
    AllPointsSingular,
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
