use thiserror::Error;

/// Errors raised by matrix construction, parsing and the solvers.
///
/// Outcomes such as a singular or inconsistent system are reported through
/// [`Status`](crate::Status) on a [`Solution`](crate::Solution), not here.
/// The exception is [`Error::Singular`], which Cramer's rule raises because it
/// has nothing to return without a usable determinant.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("empty input: no matrix entries")]
    EmptyInput,

    #[error("ragged rows: row {row} has {found} entries, expected {expected}")]
    RaggedRows {
        row: usize,
        expected: usize,
        found: usize,
    },

    #[error("bad number {token:?} at row {row}, column {col}")]
    BadNumber {
        row: usize,
        col: usize,
        token: String,
    },

    #[error("non-finite entry at row {row}, column {col}")]
    NonFiniteEntry { row: usize, col: usize },

    #[error("invalid dimensions {rows}x{cols}: {reason}")]
    InvalidDimensions {
        rows: usize,
        cols: usize,
        reason: &'static str,
    },

    #[error("matrix is {rows}x{cols}, expected a square matrix")]
    NotSquare { rows: usize, cols: usize },

    #[error("index {index} out of range for length {len}")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("row scale factor must be nonzero")]
    ZeroScaleFactor,

    #[error("singular system: |det| = {det:e} is at or below tolerance {tolerance:e}")]
    Singular { det: f64, tolerance: f64 },

    #[error("zero diagonal entries at rows {rows:?}; no solution without pivoting")]
    ZeroDiagonal { rows: Vec<usize> },

    #[error("non-finite iterate at component {component}")]
    NonFiniteIterate { component: usize },

    #[error("non-finite result: {0}")]
    NonFiniteResult(&'static str),

    #[error("invalid solver config: {0}")]
    InvalidConfig(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;
