use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("line {line}: {message}")]
    ParseLine { line: usize, message: String },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("vertex set must be nonempty")]
    EmptyVertexSet,

    #[error("graph on {0} vertices exceeds the supported maximum of {max}", max = crate::graph::MAX_VERTICES)]
    TooManyVertices(usize),

    #[error("{n} variables exceeds the limit of {limit} for this computation")]
    TooManyVariables { n: usize, limit: usize },

    #[error("zero ideal")]
    ZeroIdeal,

    #[error("unit ideal")]
    UnitIdeal,

    #[error("generator with empty support (unit ideal)")]
    EmptySupport,

    #[error("generators have mixed degrees; linear resolution test not applicable")]
    MixedDegrees,

    #[error("hypothesis not satisfied: {0}")]
    NotApplicable(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("invalid field: {0}")]
    InvalidField(String),
}
