use thiserror::Error;

/// Errors surfaced by the solver library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("malformed numeral: {token:?}")]
    ParseNumeral { token: String },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("matrix entry a[{i}][{j}] = {value} is outside [0, 1]")]
    EntryOutOfRange { i: usize, j: usize, value: String },

    #[error("right-hand side b[{i}] = {value} must be positive")]
    NonpositiveRhs { i: usize, value: String },

    #[error("matrix must have at least one row and one column")]
    EmptyInstance,

    #[error("matrix rows must all have the same length")]
    RaggedMatrix,

    #[error("x[{j}] = {value} is outside [0, 1]")]
    PointOutOfRange { j: usize, value: String },

    #[error("point is not a solution of the system")]
    NotASolution,

    #[error("index space has {total} tuples, exceeding the cap of {cap}")]
    CapExceeded { total: String, cap: u64 },

    #[error("threshold grid requires lower bound <= upper bound at column {j}")]
    GridPrecondition { j: usize },

    #[error("internal inconsistency: {0}")]
    Internal(String),

    #[error("invalid grid step {step}: reciprocal must be a positive integer")]
    InvalidStep { step: String },

    #[error("invalid instance document: {0}")]
    Document(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
