use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("edge ({u}, {v}) has an endpoint outside 0..{n}")]
    EndpointOutOfRange { u: usize, v: usize, n: usize },

    #[error("edge ({v}, {v}) is a loop; graphs must be simple")]
    Loop { v: usize },

    #[error("vertex {vertex} is not in a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },

    #[error("edge list parse error at line {line}: {reason}")]
    EdgeList { line: usize, reason: String },

    #[error("minimum degree is undefined on the empty graph")]
    EmptyGraph,

    #[error("seed set must be nonempty")]
    EmptySeed,

    #[error("seed set is not {k}-independent: d({u}, {v}) <= {k}")]
    NotKIndependent { k: usize, u: usize, v: usize },

    #[error("graph is disconnected")]
    Disconnected,

    #[error("diameter {diameter} is below the required {required}")]
    DiameterTooSmall { diameter: usize, required: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("{what} is capped at {limit} vertices, got {n}{hint}")]
    SizeCap {
        what: &'static str,
        limit: usize,
        n: usize,
        hint: &'static str,
    },

    #[error("search exceeded the node limit of {limit}")]
    NodeLimit { limit: u64 },

    #[error("arithmetic overflow evaluating {0}")]
    Overflow(&'static str),
}

impl Error {
    /// True for the errors raised when an exact routine refuses an instance
    /// because of its size or search budget.
    pub fn is_solver_cap(&self) -> bool {
        matches!(self, Error::SizeCap { .. } | Error::NodeLimit { .. })
    }

    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidParameter(msg.into())
    }
}
