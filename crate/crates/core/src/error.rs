use thiserror::Error;

/// Errors raised by the exact linear-algebra routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch in {op}: {detail}")]
    DimensionMismatch { op: &'static str, detail: String },

    #[error("{op} requires a square matrix, got {rows}x{cols}")]
    NotSquare {
        op: &'static str,
        rows: usize,
        cols: usize,
    },

    #[error("matrix dimensions must be positive, got {rows}x{cols}")]
    EmptyMatrix { rows: usize, cols: usize },

    #[error("expected {expected} entries for a {rows}x{cols} matrix, got {actual}")]
    EntryCount {
        rows: usize,
        cols: usize,
        expected: usize,
        actual: usize,
    },

    #[error("index {index} out of range 1..={bound}")]
    IndexOutOfRange { index: usize, bound: usize },

    #[error("invalid subset size {k} for universe of size {n}")]
    InvalidSubsetSize { k: usize, n: usize },

    #[error("replaced minor sums are undefined for order 0")]
    ZeroOrderReplacedSum,

    #[error("matrix is singular")]
    Singular,

    #[error("weight matrix {which} is not Hermitian positive definite")]
    NotPositiveDefinite { which: &'static str },

    #[error("group inverse does not exist: index is {index}, must be at most 1")]
    GroupInverseMissing { index: usize },

    #[error("the weighted Moore-Penrose inverse has no row-form representation")]
    RowFormUnsupported,

    #[error("estimated work {estimated} exceeds budget {budget}")]
    BudgetExceeded { estimated: u128, budget: u64 },

    #[error("internal verification failed: {0}")]
    VerificationFailed(String),
}

pub type Result<T> = std::result::Result<T, Error>;
