use thiserror::Error;

/// Errors raised by constructors and checked operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("chart dimension mismatch: {left} vs {right}")]
    ChartMismatch { left: usize, right: usize },

    #[error("rank mismatch: expected {expected}, found {found}")]
    RankMismatch { expected: usize, found: usize },

    #[error("expected a form of degree {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: String },

    #[error("parse error at column {column}: {message}")]
    Parse { column: usize, message: String },

    #[error("splitting image {index} does not lift the coordinate field")]
    NotASection { index: usize },

    #[error("invalid structure: {0}")]
    InvalidStructure(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("hypothesis failed: {0}")]
    Hypothesis(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
