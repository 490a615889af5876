use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("polynomial division left a non-cancelling remainder")]
    NotDivisible,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("exponent vectors have mismatched lengths ({0} vs {1})")]
    LengthMismatch(usize, usize),
    #[error("denominator vanishes at the sample point")]
    DenominatorVanishes,
    #[error("matrix is not skew-symmetrizable: {0}")]
    NotSkewSymmetrizable(String),
    #[error("direction index {0} out of range for rank {1}")]
    IndexOutOfRange(usize, usize),
    #[error("c-vector {0:?} has entries of both signs")]
    SignCoherenceViolation(Vec<i64>),
    #[error("zero c-vector has no tropical sign")]
    ZeroVector,
    #[error("inner product {0} is not an integer")]
    IntegralityViolation(String),
    #[error("cross-check mismatch: {0}")]
    CrossCheckMismatch(String),
    #[error("automorphism image has residual x-content in term {0}")]
    ResidualX(String),
}

pub type Result<T> = std::result::Result<T, Error>;
