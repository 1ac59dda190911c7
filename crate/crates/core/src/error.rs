use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graphs are limited to 63 vertices, got {0}")]
    TooManyVertices(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("adjacency is not symmetric between {0} and {1}")]
    Asymmetric(usize, usize),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("{what} is limited to n <= {max}, got n = {n}")]
    SizeLimit { what: &'static str, max: usize, n: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("graph6 parse error at byte {offset}: {reason}")]
pub struct Graph6Error {
    pub offset: usize,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error(transparent)]
    Graph6(#[from] Graph6Error),
    #[error("edge list line {line}: {reason}")]
    EdgeList { line: usize, reason: String },
    #[error("family spec {spec:?}: {reason}")]
    Family { spec: String, reason: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Failures of the parameter and game solvers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("{0}")]
    Hypothesis(String),
    #[error("configuration space too large: C({n},{k}) exceeds {limit}")]
    TooManyConfigurations { n: usize, k: usize, limit: u128 },
    #[error("time budget exhausted during {0}")]
    OutOfTime(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

impl SolveError {
    pub(crate) fn hypothesis(msg: impl Into<String>) -> Self {
        SolveError::Hypothesis(msg.into())
    }

    /// Resource exhaustion, as opposed to a violated precondition.
    pub fn is_resource_limit(&self) -> bool {
        matches!(
            self,
            SolveError::TooManyConfigurations { .. }
                | SolveError::OutOfTime(_)
                | SolveError::Graph(GraphError::SizeLimit { .. })
        )
    }
}
