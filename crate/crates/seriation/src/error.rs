use thiserror::Error;

/// Errors surfaced by the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("eigensolver failed to converge: {0}")]
    ConvergenceFailure(String),

    #[error("degenerate degree at index {index}: |d| = {value:e} below {threshold:e}")]
    DegenerateDegree {
        index: usize,
        value: f64,
        threshold: f64,
    },

    #[error("infeasible parameters: {0}")]
    InfeasibleParameters(String),

    #[error("invalid dimension: {0}")]
    InvalidDimension(String),

    #[error("unknown setting {0} (expected 1..=6)")]
    UnknownSetting(u8),

    #[error("pair scan over {pairs} pairs exceeds the {limit} budget")]
    TooManyPairs { pairs: u128, limit: u128 },

    #[error("work budget exceeded: {cost} elementary operations over the {limit} limit")]
    BudgetExceeded { cost: u128, limit: u128 },

    #[error("matrix is not symmetric: |A[{i}][{j}] - A[{j}][{i}]| = {diff:e} exceeds tolerance")]
    Asymmetric { i: usize, j: usize, diff: f64 },

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
