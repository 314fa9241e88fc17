use thiserror::Error;

/// Errors reported by the burning toolkit.
#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph with {vertex_count} vertices")]
    VertexOutOfRange { vertex: usize, vertex_count: usize },

    #[error("unknown vertex label `{0}`")]
    UnknownLabel(String),

    #[error("no path between vertices {from} and {to}")]
    NoPath { from: usize, to: usize },

    #[error("graph is empty")]
    EmptyGraph,

    #[error("graph is not connected")]
    Disconnected,

    #[error("graph contains a cycle")]
    Cyclic,

    #[error("budget must be at least 1")]
    ZeroBudget,

    #[error("graph has {vertex_count} vertices, exact solver cap is {cap}")]
    TooLarge { vertex_count: usize, cap: usize },

    #[error("recursion limit exceeded: {0}")]
    RecursionLimit(String),

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("unknown format `{0}`")]
    UnknownFormat(String),

    #[error("unknown algorithm `{0}`")]
    UnknownAlgorithm(String),

    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),

    #[error("config error: {0}")]
    Config(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
