use thiserror::Error;

/// Errors reported by the library.
///
/// `Parse` and the two condition violations carry enough position data for a
/// CLI to point at the offending line or cell.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("row condition violated at cell ({row},{col}): {msg}")]
    RowCondition { row: usize, col: usize, msg: String },

    #[error("column condition violated at cell ({row},{col}): {msg}")]
    ColumnCondition { row: usize, col: usize, msg: String },

    #[error("invalid shape: {0}")]
    Shape(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("resource budget exceeded: {0}")]
    Resource(String),

    /// A mathematically guaranteed invariant failed at runtime. Signals an
    /// implementation bug, never bad user input.
    #[error("invariant violation: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
