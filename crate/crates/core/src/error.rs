use thiserror::Error;

/// Errors raised by constructors, size guards and precondition checks.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} is out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("loop at vertex {0}")]
    Loop(usize),

    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),

    #[error("duplicate arc ({0},{1})")]
    DuplicateArc(usize, usize),

    #[error("degree bounds must be positive, got <{i},{j}>")]
    InvalidBounds { i: usize, j: usize },

    /// A documented size guard refused the instance.
    #[error("instance too large for {guard}: {actual} exceeds the limit of {limit}")]
    TooLarge {
        guard: &'static str,
        actual: usize,
        limit: usize,
    },

    #[error("precondition violated: {0}")]
    Precondition(String),

    /// The digraph handed to the design extraction is not extremal at the
    /// given clique.
    #[error("clique is not extremal: {0}")]
    NotExtremal(String),

    /// Both sides of an if-and-only-if were computed and disagree.
    #[error("equivalence check failed: {0}")]
    EquivalenceFailed(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
