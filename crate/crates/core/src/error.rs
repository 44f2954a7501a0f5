use thiserror::Error;

use crate::graph::VertexId;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed input at line {line}: {message}")]
    MalformedInput { line: usize, message: String },

    #[error("diagonal entry ({vertex},{vertex}) must be 0")]
    DiagonalNonZero { vertex: usize },

    #[error("off-diagonal entry ({row},{col}) must be INF or strictly positive")]
    NegativeOrZeroWeight { row: usize, col: usize },

    #[error("vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("edge {from}->{to} listed more than once")]
    DuplicateEdge { from: usize, to: usize },

    #[error("self loop on vertex {vertex}")]
    SelfLoop { vertex: usize },

    #[error("graph must have at least one vertex")]
    EmptyGraph,

    #[error("frontier vertex {0} is not permanently labeled")]
    FrontierNotPermanent(VertexId),

    #[error("vertex {0} was never settled")]
    UnsettledVertex(VertexId),

    #[error("graph has {n} vertices, enumeration is limited to {max}")]
    GraphTooLarge { n: usize, max: usize },

    #[error("invalid graph spec: {0}")]
    InvalidSpec(String),

    #[error("report output failed: {0}")]
    Report(String),
}

impl Error {
    pub(crate) fn malformed(line: usize, message: impl Into<String>) -> Self {
        Error::MalformedInput {
            line,
            message: message.into(),
        }
    }
}
