use std::fmt;

/// Where in an input document a parse error occurred.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Location {
    Line(usize),
    Byte(usize),
}

impl fmt::Display for Location {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Location::Line(l) => write!(f, "line {l}"),
            Location::Byte(b) => write!(f, "byte {b}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("parse error at {location}: {reason}")]
    Parse { location: Location, reason: String },

    #[error("vertex {0} is not in the graph")]
    InvalidVertex(usize),

    #[error("vertex {0} appears more than once")]
    DuplicateVertex(usize),

    #[error("{0}-{1} is not an edge")]
    NotAnEdge(usize, usize),

    #[error("graph has {n} vertices, limit is {max}")]
    TooLarge { n: usize, max: usize },

    #[error("ordering is not a permutation of the vertex set")]
    NotAPermutation,

    #[error("graph is disconnected")]
    Disconnected,

    #[error("graph has no vertices")]
    Empty,

    #[error("graph is already distance-hereditary")]
    AlreadyDh,

    #[error("graph is not distance-hereditary")]
    NotDh,

    #[error("invalid pruning sequence: {0}")]
    InvalidSequence(String),

    #[error("vertex set is not a split")]
    NotASplit,

    #[error("malformed decomposition: {0}")]
    MalformedDecomposition(String),

    #[error("{0}-{1} is not a tree edge")]
    NotATreeEdge(usize, usize),

    #[error("split tree is not a path")]
    NotAPath,

    #[error("not applicable: {0}")]
    NotApplicable(String),

    #[error("internal invariant violated: {0}")]
    InternalInvariantViolation(String),

    #[error("orbit exceeded cap of {0} graphs")]
    CapExceeded(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
