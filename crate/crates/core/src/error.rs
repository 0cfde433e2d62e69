use std::fmt;

/// Crate-wide error type.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A word is not a reduced word for any permutation.
    NotReduced,
    /// A sequence is not a permutation of 1..n.
    NotPermutation,
    /// A filling violates the semistandard conditions.
    NotSsyt,
    /// A biword is not in the required order class.
    BadBiwordOrder,
    /// An argument fails a pattern-class precondition (vexillary, 321-avoiding, ...).
    PatternClass(&'static str),
    /// Structured input that cannot be realized (bad cut set, failed line routing, ...).
    Inconsistent(&'static str),
    /// Internal invariant violated; indicates a bug, not bad input.
    Internal(&'static str),
    /// Text that could not be parsed.
    Parse(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotReduced => write!(f, "word is not reduced"),
            Error::NotPermutation => write!(f, "sequence is not a permutation of 1..n"),
            Error::NotSsyt => write!(f, "filling is not semistandard"),
            Error::BadBiwordOrder => write!(f, "biword is not in the required order class"),
            Error::PatternClass(msg) => write!(f, "pattern-class precondition failed: {msg}"),
            Error::Inconsistent(msg) => write!(f, "inconsistent input: {msg}"),
            Error::Internal(msg) => write!(f, "internal invariant violated: {msg}"),
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
