use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {0} is out of range")]
    VertexOutOfRange(usize),
    #[error("vertex set is empty")]
    EmptySet,
    #[error("graph of order {n} exceeds the limit of {limit} for this operation")]
    TooLarge { n: usize, limit: usize },
    #[error("bad order {0} for this graph family")]
    BadOrder(usize),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph is trivial (fewer than two vertices)")]
    Trivial,
    #[error("exact search over {n} vertices exceeds the cap of {cap}")]
    SearchLimitExceeded { n: usize, cap: usize },
    #[error("no feasible set exists")]
    Infeasible,
    #[error("inconsistent decomposition: {0}")]
    InconsistentDecomposition(String),
    #[error("arity mismatch: expected {expected}, found {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("point-attaching result is disconnected")]
    DisconnectedResult,
    #[error("bad identification: {0}")]
    BadIdentification(String),
    #[error("bad chain specification: {0}")]
    BadSpec(String),
    #[error("bipartite factor requires the base graph")]
    MissingBase,
    #[error("block {index} has order {order}; the block-graph formula needs order at least 3")]
    BadBlockOrder { index: usize, order: usize },
    #[error("operation requires a non-bipartite graph")]
    Bipartite,
    #[error("not applicable: {0}")]
    NotApplicable(String),
    #[error("witness failed re-validation")]
    WitnessRejected,
    #[error("syntax error at {line}:{col}: expected {expected}")]
    Syntax {
        line: usize,
        col: usize,
        expected: String,
    },
    #[error("`{name}` at {line}:{col}: {message}")]
    Arity {
        name: String,
        line: usize,
        col: usize,
        message: String,
    },
    #[error("unknown identifier `{name}` at {line}:{col}")]
    UnknownIdentifier { name: String, line: usize, col: usize },
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("bad generator config: {0}")]
    BadConfig(String),
    #[error("i/o error: {0}")]
    Io(String),
}
