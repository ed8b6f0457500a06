use thiserror::Error;

/// Errors produced anywhere in the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {index} out of range for graph on {vertex_count} vertices")]
    IndexOutOfRange { index: usize, vertex_count: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("edge ({0},{1}) is not in the graph")]
    EdgeNotFound(usize, usize),
    #[error("duplicate edge ({0},{1}) in subdivision list")]
    DuplicateEdge(usize, usize),
    #[error("graph has {0} vertices; at most {max} are supported", max = crate::graph::MAX_VERTICES)]
    TooManyVertices(usize),
    #[error("invalid parameter: {0}")]
    InvalidParam(String),
    #[error("unknown partition {0:?}")]
    UnknownPartition(String),
    #[error("integer set must be non-empty")]
    EmptySet,
    #[error("label element {0} exceeds the supported maximum")]
    LabelTooLarge(u64),
    #[error("vertex {0} has no label")]
    MissingLabel(usize),
    #[error("{what}: graph has {vertex_count} vertices, limit is {limit}")]
    TooLarge {
        what: &'static str,
        vertex_count: usize,
        limit: usize,
    },
    #[error("vertex set is not independent: edge ({0},{1}) lies inside it")]
    NotIndependent(usize, usize),
    #[error("certification failed: {0}")]
    CertificationFailed(String),
    #[error("parameters outside the claim's domain: {0}")]
    DomainError(String),
    #[error("claim {0} needs the instantiated graph")]
    MissingGraph(&'static str),
    #[error("unknown claim {0:?}")]
    UnknownClaim(String),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

impl Error {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }

    /// True for errors caused by exceeding a size limit rather than by bad input.
    pub fn is_resource_limit(&self) -> bool {
        matches!(self, Error::TooManyVertices(_) | Error::TooLarge { .. })
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
