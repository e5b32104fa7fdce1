//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("input out of bounds at dimension {dim}: {value} not in [{lower}, {upper}]")]
    OutOfBounds {
        dim: usize,
        value: f64,
        lower: f64,
        upper: f64,
    },

    #[error("objective returned a non-finite value ({value}) at an in-bounds point {position:?}")]
    NonFiniteObjective { value: f64, position: Vec<f64> },

    #[error("neighbor set is empty; caller must take the random-walk branch")]
    EmptyNeighborhood,

    #[error("archive is empty")]
    EmptyArchive,

    #[error("unknown benchmark function id: {0}")]
    UnknownFunction(String),

    #[error("unknown suite name: {0}")]
    UnknownSuite(String),

    #[error("malformed transform file: {0}")]
    MalformedTransform(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
