use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),

    #[error("zero vector where a nonzero vector is required")]
    ZeroVector,

    #[error("invalid point indices: {0}")]
    InvalidIndices(String),

    #[error("point count {n} outside supported range {min}..={max}")]
    OutOfRange { n: usize, min: usize, max: usize },

    #[error("cone is not pointed: the line spanned by [{witness}] lies in it")]
    NotPointed { witness: String },

    #[error("generators are not full-dimensional: rank {rank} < {dim}")]
    NotFullDimensional { rank: usize, dim: usize },

    #[error("{vector} violates {constraint} (index {index})")]
    Violated {
        vector: String,
        constraint: String,
        index: usize,
    },

    #[error("expected an H-representation (inequalities); none present")]
    MissingHrep,

    #[error("expected a V-representation (rays); none present")]
    MissingVrep,

    #[error("seed is not a facet of the cone")]
    SeedNotFacet,

    #[error("no second facet through the ridge")]
    NoSecondFacet,

    #[error("graph is disconnected; diameter undefined")]
    Disconnected,

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("integer overflow in exact kernel; coordinates too large for the fast path")]
    Overflow,

    #[error("{0}")]
    Unsupported(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
