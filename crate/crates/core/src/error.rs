use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid degree {degree} at position {index}: must lie in [0, {max}]")]
    InvalidDegree {
        index: usize,
        degree: i64,
        max: usize,
    },

    #[error("empty degree sequence")]
    Empty,

    #[error("need at least {min} vertices, got {n}")]
    TooSmall { n: usize, min: usize },

    #[error("at most {max} vertices are supported, got {n}")]
    TooLarge { n: usize, max: usize },

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("sequence does not have the Nash-Williams shape for k = {k}")]
    ShapeMismatch { k: usize },

    #[error("invalid edge ({u}, {v}) for a graph on {n} vertices")]
    InvalidEdge { u: usize, v: usize, n: usize },

    #[error("invalid pi-prime: {0}")]
    InvalidPiPrime(String),

    #[error("malformed edge list: {0}")]
    Parse(String),
}
