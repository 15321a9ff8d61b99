use thiserror::Error;

/// Errors raised by constructors and operations on complexes, matroids and families.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("vertex index {0} is outside the ambient vertex set")]
    VertexOutOfRange(usize),
    #[error("duplicate vertex `{0}`")]
    DuplicateVertex(String),
    #[error("ambient vertex sets overlap at `{0}`")]
    OverlappingAmbients(String),
    #[error("ambient vertex sets differ")]
    AmbientMismatch,
    #[error("{0} vertices requested, at most 64 are supported")]
    TooManyVertices(usize),
    #[error("operand is the void complex")]
    VoidOperand,
    #[error("family member has {found} elements, expected {expected}")]
    CardinalityMismatch { expected: usize, found: usize },
    #[error("invalid matroid: {0}")]
    InvalidMatroid(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;
