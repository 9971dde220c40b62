use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ambient mismatch: {left} variables vs {right} variables")]
    AmbientMismatch { left: usize, right: usize },

    #[error("variable index {index} out of range 1..={n}")]
    VariableOutOfRange { index: usize, n: usize },

    #[error("the unit monomial cannot be a generator of a proper ideal")]
    UnitGenerator,

    #[error("generators do not form a divisibility antichain")]
    NotMinimal,

    #[error("ideal is not squarefree; polarize it first")]
    NotSquarefree,

    #[error("ideal has no generators")]
    ZeroIdeal,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid support family: {0}")]
    InvalidFamily(String),

    #[error("invalid sigma collection: {0}")]
    InvalidSigma(String),

    #[error("not a partial order: {0}")]
    NotPartialOrder(String),

    #[error("poset is not a forest")]
    NotForest,

    #[error("poset is not a tree")]
    NotTree,

    #[error("unknown poset element `{0}`")]
    UnknownLabel(String),

    #[error("invalid chain partition: {0}")]
    InvalidPartition(String),

    #[error("partition does not induce a depolarization")]
    NotADepolarization,

    #[error("parameter out of range: {0}")]
    OutOfRange(String),

    #[error("invalid series-parallel expression: {0}")]
    InvalidExpression(String),

    #[error("scale cap exceeded: {what} is {actual}, cap is {cap}")]
    ScaleCap {
        what: &'static str,
        actual: usize,
        cap: usize,
    },

    #[error("empty Betti table")]
    EmptyTable,
}

impl Error {
    /// Stable machine-readable identifier, printed by the CLI.
    pub fn code(&self) -> &'static str {
        match self {
            Error::AmbientMismatch { .. } => "AMBIENT_MISMATCH",
            Error::VariableOutOfRange { .. } => "VARIABLE_OUT_OF_RANGE",
            Error::UnitGenerator => "UNIT_GENERATOR",
            Error::NotMinimal => "NOT_MINIMAL",
            Error::NotSquarefree => "NOT_SQUAREFREE",
            Error::ZeroIdeal => "ZERO_IDEAL",
            Error::Parse(_) => "PARSE",
            Error::InvalidFamily(_) => "INVALID_FAMILY",
            Error::InvalidSigma(_) => "INVALID_SIGMA",
            Error::NotPartialOrder(_) => "NOT_PARTIAL_ORDER",
            Error::NotForest => "NOT_FOREST",
            Error::NotTree => "NOT_TREE",
            Error::UnknownLabel(_) => "UNKNOWN_LABEL",
            Error::InvalidPartition(_) => "INVALID_PARTITION",
            Error::NotADepolarization => "NOT_A_DEPOLARIZATION",
            Error::OutOfRange(_) => "OUT_OF_RANGE",
            Error::InvalidExpression(_) => "INVALID_EXPRESSION",
            Error::ScaleCap { .. } => "SCALE_CAP",
            Error::EmptyTable => "EMPTY_TABLE",
        }
    }
}
