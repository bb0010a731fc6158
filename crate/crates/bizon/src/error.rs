use thiserror::Error;

/// Errors shared across the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("edge index {0} out of range")]
    InvalidEdge(usize),
    #[error("edge {0} is a loop")]
    LoopEdge(usize),
    #[error("vertex {0} out of range")]
    InvalidVertex(usize),
    #[error("vertex {0} is not in the given subset")]
    VertexNotInSubset(usize),
    #[error("sequence is not a permutation of the vertex set")]
    NotAPermutation,
    #[error("ordered subset contains a repeated or out-of-range vertex")]
    InvalidOrderedSubset,
    #[error("r = {r} is below -delta = {min_r} for this graph")]
    RBelowMinusDelta { r: i64, min_r: i64 },
    #[error("the algebra is zero (some generating monomial has degree 0)")]
    ZeroAlgebra,
    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("unknown graph family `{0}`")]
    UnknownFamily(String),
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
}

pub type Result<T> = std::result::Result<T, Error>;
