use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("node id {id} out of range for graph with {n} nodes")]
    NodeOutOfRange { id: usize, n: usize },
    #[error("self-loop at node {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("parse error: {0}")]
    Parse(String),
    /// An input does not satisfy the hypothesis of the requested construction.
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("graph has {n} nodes, enumeration cap is {cap}")]
    CapExceeded { n: usize, cap: usize },
    #[error("linear system is singular")]
    Singular,
    #[error("elasticity coefficient on edge {{{0}, {1}}} is not positive")]
    NonPositiveCoefficient(usize, usize),
    #[error("nodes {0} and {1} are embedded at the same point")]
    CoincidentPoints(usize, usize),
    #[error("projection tie between nodes {0} and {1}")]
    ProjectionTie(usize, usize),
    /// A post-condition the construction guarantees did not hold.
    #[error("internal invariant failed: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn pre(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    pub(crate) fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }
}
