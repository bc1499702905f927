use thiserror::Error;

/// Errors raised anywhere in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("index {index} is out of range for {n} strands")]
    IndexOutOfRange { index: i64, n: usize },

    #[error("cycle {0:?} is not a descending cycle")]
    NotDescending(Vec<i64>),

    #[error("index {0} appears in more than one block")]
    OverlappingBlocks(usize),

    #[error("blocks {0:?} and {1:?} cross")]
    CrossingBlocks(Vec<usize>, Vec<usize>),

    #[error("strand counts differ: {0} vs {1}")]
    StrandMismatch(usize, usize),

    #[error("exponent arithmetic overflowed")]
    ExponentOverflow,

    #[error("partial cycling element is not a prefix of the first factor")]
    NotAPrefix,

    #[error("element is not periodic")]
    NotPeriodic,

    #[error("element is not in the expected super summit set: {0}")]
    NotInSss(String),

    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),

    #[error("{p}/{q} is not a reduced fraction")]
    NotReduced { p: i64, q: i64 },

    #[error("n = {n} exceeds the brute-force limit {limit}")]
    TooLarge { n: usize, limit: usize },

    #[error("bad parameters: {0}")]
    BadParameters(String),

    #[error("syntax error at offset {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("bad power: {0}")]
    BadPower(String),
}

pub type Result<T> = std::result::Result<T, Error>;
