use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An edge endpoint is not a valid vertex index.
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    InvalidVertex { vertex: usize, n: usize },

    /// The edge list contains a self-loop or a duplicate edge.
    #[error("graph is not simple: {0}")]
    NotSimple(String),

    /// A line of an edge-list stream could not be parsed.
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// The two vertices lie in different components.
    #[error("vertices {0} and {1} are not connected")]
    Unreachable(usize, usize),

    /// The graph exceeds the subset-enumeration cap.
    #[error("graph has {n} vertices, exhaustive enumeration is capped at {limit}")]
    TooLarge { n: usize, limit: usize },

    /// The graph has a block that is neither a cut edge nor a cycle.
    #[error("graph is not a cactus")]
    NotACactus,

    /// Cut-path distance needs at least two cut vertices on the cycle.
    #[error("cycle has fewer than two cut vertices")]
    FewerThanTwoCuts,

    /// A tree was expected but the graph contains a cycle.
    #[error("graph contains a cycle")]
    HasCycle,

    /// Cycle length below 3.
    #[error("no cycle of length {0} exists")]
    InvalidCycle(usize),

    /// Wheel rim size below 3.
    #[error("no wheel with rim size {0} exists")]
    InvalidWheel(usize),

    /// Pendant-tree decomposition needs at least one cycle.
    #[error("cactus has no cycle")]
    NoCycle,

    /// No cactus with the requested order, cycle count and pendant count exists.
    #[error("no cactus with n={n}, k={k}, t={t} exists")]
    Infeasible { n: usize, k: usize, t: usize },

    /// A generator parameter is outside its documented domain.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// A deadline was exceeded before the computation finished.
    #[error("deadline exceeded")]
    Timeout,
}

pub type Result<T> = std::result::Result<T, Error>;
