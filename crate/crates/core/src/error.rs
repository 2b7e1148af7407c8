use thiserror::Error;

/// Errors raised while parsing a diagram string.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiagramParseError {
    #[error("malformed edge token `{0}` (expected INT-INT or INT-INT*)")]
    MalformedToken(String),
    #[error("vertex {vertex} out of range 1..={max}")]
    VertexOutOfRange { vertex: usize, max: usize },
    #[error("edge {0}-{0} is a self-loop")]
    SelfLoop(usize),
    #[error("vertex {0} appears in more than one edge")]
    DuplicateVertex(usize),
    #[error("edges cover {covered} of {expected} vertices; not a perfect matching")]
    IncompleteCover { covered: usize, expected: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    DiagramParse(#[from] DiagramParseError),
    #[error("cannot parse `{text}` as {what}")]
    Parse { what: &'static str, text: String },
    #[error("mismatched tensor power: {left} vs {right}")]
    MismatchedRank { left: usize, right: usize },
    #[error("index {index} out of range (allowed {min}..={max})")]
    IndexOutOfRange { index: usize, min: usize, max: usize },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("bound exceeded: {0}")]
    BoundExceeded(String),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("denominator vanishes modulo {0}")]
    UnluckyPrime(u64),
    #[error("wrong trace component kind: expected {expected}")]
    ComponentKind { expected: &'static str },
}

pub type Result<T> = std::result::Result<T, Error>;
