use thiserror::Error;

/// Errors raised by the library.
///
/// `Internal` marks a broken invariant inside the library (an inexact
/// division in a closed form, a reconstruction that does not land on the
/// expected arrangement). It never signals bad user input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid card: {0}")]
    InvalidCard(String),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("ball count mismatch: expected b={expected}, found b={found}")]
    BallCountMismatch { expected: usize, found: usize },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("{what} = {value} is outside the admissible range [{lo}, {hi}]")]
    OutOfRange {
        what: &'static str,
        value: usize,
        lo: usize,
        hi: usize,
    },

    #[error("unsupported operation: {0}")]
    Unsupported(String),

    #[error("not a member of the family: {0}")]
    NotInFamily(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("internal consistency error: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
