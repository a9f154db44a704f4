use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("partition {0} is not a hook")]
    NotAHook(String),
    #[error("size limit exceeded: n = {n} > {limit}")]
    SizeLimit { n: usize, limit: usize },
    #[error("ambient variable count mismatch: {left} vs {right}")]
    AmbientMismatch { left: usize, right: usize },
    #[error("zero polynomial has no minimal monomial")]
    ZeroPolynomial,
    #[error("parse error at {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("no drawing has this diagram")]
    NoPreimage,
    #[error("diagram has {0} drawings, expected one")]
    Ambiguous(usize),
    #[error("a son must be a different drawing")]
    IdenticalDrawings,
    #[error("operator is not an anomaly: {0}")]
    NotAnAnomaly(String),
    #[error("no relation found to rewrite {0}")]
    NoRelation(String),
    #[error("rewriting budget of {0} steps exhausted")]
    BudgetExceeded(usize),
    #[error("invalid drawing: {0}")]
    InvalidDrawing(String),
}
