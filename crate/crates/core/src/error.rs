use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("{0}-{1} is not an edge")]
    NotAnEdge(usize, usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph needs at least {min} vertices, got {got}")]
    TooSmall { min: usize, got: usize },
    #[error("graph on {n} vertices exceeds the exact search budget of {max}")]
    TooLarge { n: usize, max: usize },
    #[error("invalid tree: {0}")]
    InvalidTree(String),
    #[error("invalid family parameters: {0}")]
    InvalidFamily(String),
    #[error("graph generation failed after {attempts} attempts: {reason}")]
    Generation { attempts: usize, reason: String },
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("stale step plan: {0}")]
    StalePlan(String),
    #[error("construction defect: {0}")]
    Defect(String),
}

pub type Result<T> = std::result::Result<T, Error>;
