use thiserror::Error;

/// Errors raised by graph construction, counting and search operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph6 parse error at byte {offset}: {message}")]
    Graph6 { offset: usize, message: String },

    #[error("edge list parse error: {0}")]
    EdgeList(String),

    #[error("graph has {n} vertices; at most {max} are supported")]
    TooManyVertices { n: usize, max: usize },

    #[error("operation requires at least one vertex")]
    EmptyGraph,

    #[error("loop at vertex {0} is not allowed")]
    Loop(usize),

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("size mismatch: graph has {graph} vertices, permutation acts on {perm}")]
    SizeMismatch { graph: usize, perm: usize },

    #[error("permutation is not an automorphism of the graph")]
    NotAnAutomorphism,

    #[error("a cycle of the permutation contains two adjacent vertices")]
    AdjacentCycle,

    #[error("invalid list assignment: {0}")]
    InvalidLists(String),

    #[error("{what} exceeds the feasibility guard ({estimate} > {limit})")]
    Infeasible {
        what: &'static str,
        estimate: u128,
        limit: u128,
    },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("I/O: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(err: std::io::Error) -> Self {
        Error::Io(err.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(err: serde_json::Error) -> Self {
        Error::Io(err.to_string())
    }
}
