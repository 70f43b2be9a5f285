use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("modulus must be at least 2, got {0}")]
    InvalidModulus(String),

    #[error("unknown ring specification {0:?} (expected \"Z\" or \"Z/<m>\")")]
    UnknownRing(String),

    #[error("matrix order must be at least 1")]
    EmptyRow,

    #[error("index {p} out of range 1..={m}")]
    IndexOutOfRange { p: i64, m: usize },

    #[error("composition sums to {actual}, expected {expected}")]
    CompositionSum { expected: u64, actual: u64 },

    #[error("length mismatch: {0}")]
    LengthMismatch(String),

    #[error("shift {shift} is invalid for a row of order {order}")]
    InvalidShift { shift: usize, order: usize },

    #[error("row entry {index} must be zero to shift by {shift}")]
    NonZeroLeading { index: usize, shift: usize },

    #[error("strip positions must satisfy p < q < n, got p={p}, q={q}, n={n}")]
    StripOrdering { p: usize, q: usize, n: usize },

    #[error("size overflow: {0}")]
    Overflow(String),
}
