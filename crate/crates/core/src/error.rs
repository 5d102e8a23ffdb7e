use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix has a zero column at index {0}")]
    ZeroColumn(usize),
    #[error("matrix is not pointed: its kernel contains a nonzero nonnegative vector")]
    NotPointed,
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("z is not the sum u + v")]
    SumMismatch,
    #[error("enumeration bound too large: {0}")]
    BoundTooLarge(String),
    #[error("search budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("integer overflow in {0}")]
    Overflow(&'static str),
    #[error("entries must be pairwise distinct")]
    NonDistinctEntries,
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("move set is not distance reducing; unreduced element {0:?}")]
    NotReducing(Vec<i64>),
    #[error("greedy connection got stuck at distance {0}")]
    Stuck(i64),
    #[error("closure did not converge after {0} additions")]
    NonConvergence(usize),
    #[error("size guard exceeded: {0}")]
    GuardExceeded(String),
    #[error("dimension guard exceeded: {0}")]
    DimensionGuard(String),
    #[error("unsupported input: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
