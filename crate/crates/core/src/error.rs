use thiserror::Error;

/// Errors produced by graph construction, parsing and the algorithm modules.
#[derive(Debug, Error)]
pub enum Error {
    #[error("self-loop at vertex {v}")]
    SelfLoop { v: usize },
    #[error("duplicate edge {u}-{v}")]
    DuplicateEdge { u: usize, v: usize },
    #[error("vertex {v} out of range for a graph on {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("threshold assignment has {got} entries, graph has {expected} vertices")]
    SizeMismatch { expected: usize, got: usize },
    #[error("threshold of vertex {v} must be at least 1")]
    NonPositiveThreshold { v: usize },
    #[error("vertex set is over {set_n} vertices, graph has {graph_n}")]
    SetGraphMismatch { set_n: usize, graph_n: usize },
    #[error("resistant-subgraph predicate requires a nonempty vertex set")]
    EmptySubset,
    #[error("{context}: the given set is not a dynamic monopoly")]
    NotADynamo { context: &'static str },
    #[error("not a tree: {n} vertices, {m} edges, connected: {connected}")]
    NotATree { n: usize, m: usize, connected: bool },
    #[error("not a dominating set: vertex {v} has no neighbor in it")]
    NotDominating { v: usize },
    #[error("graph is not regular: degrees range from {min} to {max}")]
    NotRegular { min: usize, max: usize },
    #[error("thresholds are not uniform: found both {a} and {b}")]
    NonUniformThreshold { a: usize, b: usize },
    #[error("invalid threshold model: {0}")]
    InvalidModel(String),
    #[error("no dynamic monopoly within the size limit {limit}")]
    NoDynamoWithinLimit { limit: usize },
    #[error("construction `{method}` produced a set that failed dynamo verification")]
    VerificationFailed { method: &'static str },
}

pub type Result<T> = std::result::Result<T, Error>;
