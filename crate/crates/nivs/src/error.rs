use thiserror::Error;

/// Errors produced by graph construction, serialization and the search layer.
#[derive(Debug, Error)]
pub enum Error {
    #[error("graph capacity exceeded: {requested} vertices (maximum {max})")]
    Capacity { requested: usize, max: usize },

    #[error("vertex index {vertex} out of range for graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("vertex set indexes a graph of order {set_order}, host has order {host_order}")]
    HostMismatch { set_order: usize, host_order: usize },

    #[error("vertex set has bits at or above position {order}")]
    InvalidVertexSet { order: usize },

    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6Parse { offset: usize, reason: String },

    #[error("order {order} not representable in single-byte graph6 (maximum 62)")]
    Graph6Order { order: usize },

    #[error("canonical labeling unsupported for order {order} (maximum {max})")]
    CanonOrder { order: usize, max: usize },

    #[error("subset enumeration oracle refused: order {order} exceeds budget {max}")]
    OracleBudget { order: usize, max: usize },

    #[error("family `{family}` requires order >= {minimum}, got {order}")]
    FamilyOrder {
        family: String,
        minimum: usize,
        order: usize,
    },

    #[error("family `{family}` has no closed-form Nordhaus-Gaddum value")]
    UnsupportedFamily { family: String },

    #[error("unknown family name `{name}`")]
    UnknownFamily { name: String },

    #[error("built-in graph generator supports orders 1..={max}, got {order}; supply an external graph6 stream for larger orders")]
    GenGraphOrder { order: usize, max: usize },

    #[error("tree generator supports orders 1..={max}, got {order}")]
    GenTreeOrder { order: usize, max: usize },

    #[error("line {line}: {source}")]
    StreamParse {
        line: usize,
        #[source]
        source: Box<Error>,
    },

    #[error("empty graph stream")]
    EmptyStream,

    #[error("graph on line {line} has order {got}, expected {expected}")]
    StreamOrderMismatch {
        line: usize,
        got: usize,
        expected: usize,
    },

    #[error("graph on line {line} is not a tree")]
    NotATree { line: usize },

    #[error("objective `{objective}` requires class `{required}`")]
    ObjectiveClassMismatch {
        objective: String,
        required: String,
    },

    #[error("unknown objective `{name}`")]
    UnknownObjective { name: String },

    #[error("unknown theorem `{name}`")]
    UnknownTheorem { name: String },

    #[error("unknown graph class `{name}`")]
    UnknownClass { name: String },

    #[error("invalid order range `{text}`: expected inclusive `a..b`")]
    InvalidRange { text: String },

    #[error("{0}")]
    Usage(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
