use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at column {column}: {message}")]
    Parse { column: usize, message: String },

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("invalid ring: {0}")]
    InvalidRing(String),

    #[error("invalid monomial order: {0}")]
    InvalidOrder(String),

    #[error("operands live in different polynomial rings")]
    RingMismatch,

    #[error("monomial arity mismatch: expected {expected} exponents, found {found}")]
    ArityMismatch { expected: usize, found: usize },

    #[error("{0} requires a nonzero polynomial")]
    ZeroPolynomial(&'static str),

    #[error("division by zero")]
    DivisionByZero,

    #[error("ideal has no nonzero generators")]
    EmptyIdeal,

    #[error("not a Gröbner basis: {0}")]
    NotGroebnerBasis(String),

    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),

    #[error("{operation} did not stabilize within {limit} iterations")]
    IterationLimit {
        operation: &'static str,
        limit: usize,
    },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("not a regular sequence: element {index} is a zero divisor modulo the preceding ideal")]
    NotRegularSequence { index: usize },

    #[error("exact division failed: {0}")]
    DivisionFailure(String),

    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
}
