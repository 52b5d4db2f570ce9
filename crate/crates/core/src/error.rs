//! Error type shared by all modules.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid space parameters q = {q}, n = {n} (need q >= 2 and n >= 1)")]
    BadSpaceParams { q: u32, n: usize },
    #[error("no points")]
    EmptyPointSet,
    #[error("row {row} has {len} symbols, expected {n}")]
    RowLength { row: usize, len: usize, n: usize },
    #[error("row {row}: symbol {symbol} out of range for alphabet size {q}")]
    SymbolOutOfRange { row: usize, symbol: u32, q: u32 },
    #[error("rows {first} and {second} are identical")]
    DuplicateRow { first: usize, second: usize },
    #[error("words have different lengths ({left} vs {right})")]
    LengthMismatch { left: usize, right: usize },
    #[error("column {index} out of range for word length {n}")]
    ColumnOutOfRange { index: usize, n: usize },
    #[error("need at least {required} points, got {m}")]
    TooFewPoints { m: usize, required: usize },
    #[error("face dimension {k} out of range for word length {n}")]
    FaceDimension { k: usize, n: usize },
    #[error("alphabet size must be at least 2, got {q}")]
    AlphabetTooSmall { q: u64 },
    #[error("{0} is not a prime power")]
    NotPrimePower(u32),
    #[error("division by zero in GF({q})")]
    DivisionByZero { q: u32 },
    #[error("generator rows are linearly dependent")]
    DependentRows,
    #[error("subspace dimension {k} out of range for word length {n}")]
    SubspaceDimension { k: usize, n: usize },
    #[error("failed to sample {k} independent generator rows after {attempts} attempts")]
    SamplingExhausted { k: usize, attempts: usize },
    #[error("invalid distance matrix: {reason}")]
    InvalidMatrix { reason: String },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}
