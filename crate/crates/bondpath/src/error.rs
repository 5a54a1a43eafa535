use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("graph6: {0}")]
    Graph6(String),
    #[error("edge list: {0}")]
    EdgeList(String),
    #[error("graph has {n} vertices, exceeding the supported maximum {max}")]
    TooLarge { n: usize, max: usize },
    #[error("graph must be connected")]
    Disconnected,
    #[error("vertex set must be nonempty")]
    EmptyVertexSet,
    #[error("side {side} does not induce a connected subgraph")]
    DisconnectedSide { side: VertexSetRepr },
    #[error("not a path of the graph: {0}")]
    NotAPath(String),
    #[error("not a Hamilton path")]
    NotHamilton,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("cap exceeded: {0}")]
    CapExceeded(String),
    /// A state the underlying theorems promise cannot occur. Surfacing one of
    /// these means either the implementation or the theorem is wrong; callers
    /// must report it, never swallow it.
    #[error("falsification witness: {0}")]
    Falsification(String),
    #[error("unknown catalog graph {0:?}")]
    UnknownCatalog(String),
    #[error("config: {0}")]
    Config(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

/// Sorted vertex list used in error messages.
#[derive(Debug, Clone)]
pub struct VertexSetRepr(pub Vec<usize>);

impl std::fmt::Display for VertexSetRepr {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

pub type Result<T> = std::result::Result<T, Error>;
