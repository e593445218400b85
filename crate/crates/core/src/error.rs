use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid rank {rank} for family {family}")]
    InvalidRank { family: char, rank: usize },

    #[error("unknown simple type {0:?}")]
    UnknownType(String),

    #[error("invalid Cartan matrix: {0}")]
    InvalidCartan(String),

    #[error("Cartan matrix is not of finite type: {0}")]
    NotFiniteType(String),

    #[error("singular matrix")]
    SingularMatrix,

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("invalid parabolic designation: {0}")]
    InvalidDesignation(String),

    #[error("node {node} out of range 1..={rank}")]
    InvalidNode { node: usize, rank: usize },

    #[error("irreducibility violation: {0}")]
    IrreducibilityViolation(String),

    #[error("invalid t-root pair: {0}")]
    InvalidPair(String),

    #[error("central series mismatch: {0}")]
    SeriesMismatch(String),

    #[error("simple system certificate failed: {0}")]
    SimpleSystemFailure(String),

    #[error("invalid composition: {0}")]
    InvalidComposition(String),
}
