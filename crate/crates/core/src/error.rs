use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed table: {0}")]
    MalformedTable(String),

    #[error("not a semiring: {axiom} fails at {witness:?}")]
    NotASemiring { axiom: String, witness: Vec<usize> },

    #[error("order mismatch: expected {expected}, found {found}")]
    OrderMismatch { expected: usize, found: usize },

    #[error("element {element} out of range for order {order}")]
    ElementOutOfRange { element: usize, order: usize },

    #[error("empty subset")]
    EmptySubset,

    /// The operation needs a special element (absorbing, zero, ...) that the
    /// algebra does not have.
    #[error("not applicable: {0}")]
    NotApplicable(String),

    #[error("{0}")]
    NotAnIdeal(String),

    #[error("partition is not a congruence")]
    NotACongruence,

    #[error("capability bound exceeded: {what} supports order <= {bound}, got {order}")]
    Capability {
        what: &'static str,
        bound: usize,
        order: usize,
    },

    #[error("precondition failed: {0}")]
    Precondition(String),

    /// A property that must always hold failed on a computed instance.
    #[error("internal invariant violated: {0}")]
    Invariant(String),

    #[error("parse error at line {line}, column {column}: expected {expected}, found {found}")]
    Parse {
        line: usize,
        column: usize,
        expected: String,
        found: String,
    },

    #[error("line {line}: {message}")]
    Semantic { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
