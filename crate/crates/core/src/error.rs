use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("graph order {0} is outside 1..=16")]
    Order(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("label list has length {got}, expected {expected}")]
    LabelCount { got: usize, expected: usize },
    #[error("duplicate vertex label {0}")]
    DuplicateLabel(u64),
    #[error("vertex label {0} is not prime")]
    NonPrimeLabel(u64),
    #[error("combined order {0} exceeds 16 vertices")]
    SizeOverflow(usize),
    #[error("K_t-freeness needs t >= 3, got {0}")]
    CliqueSize(usize),
    #[error("{0}")]
    Domain(String),
    #[error("arithmetic overflow: {0}")]
    Overflow(String),
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("duplicate group name `{0}`")]
    DuplicateGroup(String),
    #[error("unknown group `{0}`")]
    UnknownGroup(String),
    #[error("{count} primes in the degree set, at most 16 fit in a graph")]
    TooManyPrimes { count: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
