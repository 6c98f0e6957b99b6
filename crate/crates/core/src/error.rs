use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("variable count mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("variable count {0} outside 1..=16")]
    BadVariableCount(usize),

    #[error("exponent {exponent} exceeds cap {cap}")]
    ExponentOverflow { exponent: u32, cap: u8 },

    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid code parameters m={m}, l={l}")]
    BadParams { m: usize, l: usize },

    #[error("message degree {degree} exceeds code order {max}")]
    NotInCode { degree: u32, max: usize },

    #[error("polynomial is not reduced modulo H (exponent >= 2)")]
    NotReduced,

    #[error("word length {got}, expected {expected}")]
    WordLength { got: usize, expected: usize },

    #[error("{0}")]
    Capability(String),

    #[error("Buchberger completion exceeded {0} basis insertions")]
    CompletionLimit(usize),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
