//! Error types shared across the crate.

use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch in {op}: expected {expected}, found {found}")]
    DimensionMismatch {
        op: &'static str,
        expected: String,
        found: String,
    },

    #[error("matrix is not symmetric positive definite (pivot {pivot:.3e} below floor {floor:.3e} at index {index})")]
    NotSpd {
        pivot: f64,
        floor: f64,
        index: usize,
    },

    #[error("matrix is not symmetric within tolerance (|a[{i},{j}] - a[{j},{i}]| = {diff:.3e})")]
    NotSymmetric { i: usize, j: usize, diff: f64 },

    #[error("rank-deficient factor: {0}")]
    RankDeficient(String),

    #[error("non-finite value at ({row}, {col})")]
    NonFinite { row: usize, col: usize },

    #[error("empty input: {0}")]
    EmptyInput(&'static str),

    #[error("invalid parameter: {0}")]
    InvalidParam(String),

    #[error("numeric failure: {0}")]
    NumericFailure(String),

    #[error("calibration target unreachable: {0}")]
    CalibrationFailed(String),

    #[error("partition failure: {0}")]
    PartitionFailed(String),
}
