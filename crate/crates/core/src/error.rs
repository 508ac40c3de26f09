use thiserror::Error;

use crate::multigraph::{EdgeId, VertexId};

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown vertex {0}")]
    UnknownVertex(VertexId),

    #[error("unknown edge {0}")]
    UnknownEdge(EdgeId),

    #[error("vertex {0} already exists")]
    DuplicateVertex(VertexId),

    #[error("edge id {0} already in use")]
    DuplicateEdge(EdgeId),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("vertex set must be a proper nonempty subset of the vertices")]
    TrivialSet,

    #[error("bi-set is trivial")]
    TrivialBiSet,

    #[error("ground sets differ")]
    GroundMismatch,

    #[error("invalid bi-set: inner set is not contained in outer set, or outer set not in ground")]
    InvalidBiSet,

    #[error("{what} has {size} vertices, exhaustive search is limited to {limit}")]
    TooLarge {
        what: &'static str,
        size: usize,
        limit: usize,
    },

    /// Construction and decomposition are only available for even `k`.
    #[error("k = {k} is odd; the construction by pinching is only known for even k (K4 plus a vertex joined three times to each corner is a (6,3)-connected graph that cannot be decomposed)")]
    OddK { k: u32 },

    #[error("precondition violated: {0}")]
    Precondition(String),

    /// An outcome that the underlying theorems rule out. Seeing one means a
    /// bug in this crate, not bad input.
    #[error("internal defect: {0}")]
    Defect(String),
}

impl Error {
    pub(crate) fn pre(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    pub(crate) fn defect(msg: impl Into<String>) -> Self {
        Error::Defect(msg.into())
    }
}
