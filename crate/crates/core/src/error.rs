use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },

    #[error("edge list parse error at line {line}: {reason}")]
    EdgeList { line: usize, reason: String },

    #[error("expression parse error at column {column}: {reason}")]
    Expr { column: usize, reason: String },

    #[error("vertex count {n} exceeds the cap of {cap}")]
    TooManyVertices { n: usize, cap: usize },

    #[error("{0}")]
    InvalidParameter(String),

    #[error("operation requires a graph with at least {min} vertices, got {n}")]
    TooFewVertices { n: usize, min: usize },

    #[error("oracle scale exceeded: {0}")]
    OracleScale(String),

    #[error("rational parse error: {0}")]
    Rational(String),

    #[error("time budget exhausted")]
    BudgetExceeded,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
