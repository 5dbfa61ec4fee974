use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("vertex index {0} out of range")]
    VertexOutOfRange(usize),
    #[error("`{0}-{1}` is not an edge")]
    NotAnEdge(String, String),
    #[error("graph is not a {0}")]
    WrongClass(&'static str),
    #[error("graph is a path")]
    IsPath,
    #[error("graph has no cut vertex")]
    NoCutVertex,
    #[error("`{0}` is a cut vertex")]
    CutVertex(String),
    #[error("`{0}-{1}` is a cut edge")]
    CutEdge(String, String),
    #[error("set is not power dominating")]
    NotPowerDominating,
    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("duplicate name `{0}` in model")]
    NameCollision(String),
    #[error("model has no variables")]
    EmptyModel,
    #[error("connectivity constraints already present")]
    ConnectivityAlreadyApplied,
    #[error("model was not built from a graph")]
    NoGraphLayout,
    #[error("invalid trace: {0}")]
    InvalidTrace(String),
    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
