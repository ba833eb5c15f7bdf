use thiserror::Error;

/// Errors raised for invalid input or violated preconditions.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("unknown arrow `{0}`")]
    UnknownArrow(String),
    #[error("duplicate {kind} `{name}`")]
    Duplicate { kind: &'static str, name: String },
    #[error("relation {index} is not admissible: {reason}")]
    NonAdmissibleRelation { index: usize, reason: String },
    #[error("not finite-dimensional below length bound {bound}: path `{witness}` survives")]
    NotFiniteDimensional { bound: usize, witness: String },
    #[error("path length bound must be at least 2, got {0}")]
    BoundTooSmall(usize),
    #[error("field characteristic {p} is too small for this computation (need > {needed})")]
    FieldTooSmall { p: u32, needed: usize },
    #[error("{0} is not a prime below 2^31")]
    NotPrime(u32),
    #[error("quotient by the identity idempotent is the zero algebra")]
    ZeroAlgebra,
    #[error("representation does not satisfy relation {0}")]
    RelationViolated(usize),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("morphism is not natural at arrow `{0}`")]
    NotNatural(String),
    #[error("module is not projective")]
    NotProjective,
    #[error("non-split input: {0}")]
    NonSplit(String),
    #[error("invalid partial order: {0}")]
    InvalidOrder(String),
    #[error("mutation undefined: {0}")]
    MutationUndefined(String),
    #[error("{0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;
