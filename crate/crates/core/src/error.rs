use thiserror::Error;

use crate::codec::CodecError;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("graphs with {0} vertices are not supported (at most 62)")]
    TooManyVertices(usize),
    #[error("vertex {vertex} out of range for order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("self loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex count mismatch: expected {expected}, found {found}")]
    OrderMismatch { expected: usize, found: usize },
    #[error("not an orientation: {0}")]
    NotAnOrientation(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("graph of order {order} and size {size} is below the threshold size {required}")]
    BelowThreshold { order: usize, size: usize, required: usize },
    #[error("no construction applies: {0}")]
    NoConstruction(String),
    #[error("internal verification failed: {0}")]
    Verification(String),
    #[error("search budget exhausted")]
    BudgetExhausted,
    #[error(transparent)]
    Codec(#[from] CodecError),
}
