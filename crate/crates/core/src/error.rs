use alloc::string::String;

/// Errors produced by the numeral, poset and tiling routines.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("index {index} is beyond the explicit sequence of length {len}")]
    IndexBeyondExplicitList { index: usize, len: usize },
    #[error("invalid sequence: {0}")]
    InvalidSequence(String),
    #[error("invalid range: k = {k} exceeds n = {n}")]
    InvalidRange { n: usize, k: usize },
    #[error("origin must be at least 1, got {0}")]
    InvalidOrigin(usize),
    #[error("digit at position {position} is not below its radix")]
    DigitOutOfRange { position: usize },
    #[error("value is not representable: the radices stop growing")]
    NonRepresentable,
    #[error("numerals have different origins")]
    OriginMismatch,
    #[error("numerals are over different sequences")]
    SequenceMismatch,
    #[error("parse error at byte {position}: {reason}")]
    Parse { position: usize, reason: &'static str },
    #[error("not a permutation of 1..={0}")]
    InvalidPermutation(usize),
    #[error("operands do not live in the same hyper-box")]
    AmbientMismatch,
    #[error("{0} is too large to materialize")]
    TooLarge(&'static str),
    #[error("box has {points} points, search limit is {limit}")]
    SearchLimitExceeded { points: usize, limit: usize },
    #[error("box cardinality is not divisible by the tile size")]
    NonDivisible,
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
