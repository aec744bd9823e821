use thiserror::Error;

/// Errors raised by the weight, semigroup and counting routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("weight needs at least 2 entries, got {0}")]
    TooShort(usize),

    #[error("entry {value} at position {position} is not positive")]
    NonPositive { position: usize, value: i64 },

    #[error("weights are not strictly increasing at position {position} ({prev} >= {next})")]
    NotStrictlyIncreasing {
        position: usize,
        prev: i64,
        next: i64,
    },

    #[error("gcd of the weights is {0}, expected 1")]
    GcdNotOne(u64),

    #[error("index {index} out of range 1..={len}")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("multi-index has length {got}, expected {expected}")]
    MultiIndexLength { expected: usize, got: usize },

    #[error("indices must differ (i = j = {0})")]
    EqualIndices(usize),

    #[error("window index must be at least 1")]
    InvalidWindow,

    #[error("generator list is empty")]
    EmptyGenerators,

    #[error("generator must be positive, got 0")]
    ZeroGenerator,

    #[error("query {query} exceeds table bound {bound}")]
    OutOfBound { query: u64, bound: u64 },

    #[error("table generators {table:?} do not match prefix {prefix:?}")]
    GeneratorMismatch { table: Vec<u64>, prefix: Vec<u64> },

    #[error("prefix {0:?} is not in the weight class")]
    PrefixNotInClass(Vec<u64>),

    #[error("expected a weight of length {expected}, got {got}")]
    WrongArity { expected: usize, got: usize },

    #[error("require 2 <= m1 < m2, got ({m1}, {m2})")]
    PairOrder { m1: u64, m2: u64 },

    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("({m1}, {m2}) is outside the closed-form hypotheses")]
    HypothesisViolation { m1: u64, m2: u64 },

    #[error("unknown table `{0}` (expected d-table or f-table)")]
    UnknownTable(String),

    #[error("invalid scan: {0}")]
    InvalidScan(String),

    #[error("integer overflow while computing {0}")]
    Overflow(&'static str),

    #[error("internal mismatch: {0}")]
    OracleMismatch(String),
}

pub type Result<T> = std::result::Result<T, Error>;
