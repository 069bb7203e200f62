use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid grid: {0}")]
    InvalidSpec(String),

    #[error("integer overflow in checked arithmetic")]
    Overflow,

    #[error("arithmetic error: {0}")]
    Arithmetic(String),

    #[error("unsupported grid: {0}")]
    Unsupported(String),

    #[error("formula not applicable: {0}")]
    NotApplicable(String),

    #[error("malformed path: {0}")]
    Structural(String),

    #[error("construction failed: {0}")]
    Construction(String),

    #[error("grid has {points} points; the exact solver is capped at {cap}")]
    Oversized { points: i64, cap: i64 },

    #[error("no covering path with at most {max_segments} segments")]
    BudgetExceeded { max_segments: usize },

    #[error("cannot render: {0}")]
    Render(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
