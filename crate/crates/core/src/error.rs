use thiserror::Error;

use crate::graph::VertexId;

/// Domain and validation failures shared by every module.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} is out of range for a digraph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("loop at vertex {0}")]
    Loop(VertexId),

    #[error("duplicate arc {0} -> {1}")]
    DuplicateArc(VertexId, VertexId),

    #[error("duplicate vertex label `{0}`")]
    DuplicateLabel(String),

    #[error("invalid vertex label `{0}`")]
    InvalidLabel(String),

    #[error("label table has {labels} entries but the digraph has order {order}")]
    LabelCount { labels: usize, order: usize },

    #[error("vertex {0} appears more than once on the path")]
    RepeatedVertex(VertexId),

    #[error("{0} -> {1} is not an arc of the digraph")]
    MissingArc(VertexId, VertexId),

    #[error("a path needs at least one vertex")]
    EmptyPath,

    #[error("path endpoints do not match: {0}")]
    EndpointMismatch(String),

    #[error("{0}")]
    Domain(String),

    /// The local-connectivity or strongness premise of a theorem is not met.
    #[error("hypothesis not satisfied: {0}")]
    Hypothesis(String),

    /// The fallback search proved no linkage exists although the premises hold.
    #[error("theorem refuted: {0}")]
    TheoremRefuted(String),

    #[error("search budget of {0} nodes exhausted")]
    BudgetExceeded(u64),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
