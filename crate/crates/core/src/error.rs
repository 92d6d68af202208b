use thiserror::Error;

/// Errors raised while building rings or evaluating predicates over them.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{what} would have {size} elements, above the cap of {cap}")]
    SizeExceeded { what: String, size: u128, cap: usize },

    #[error("dimension {dim} is above the allowed maximum {max}")]
    DimensionRejected { dim: usize, max: usize },

    #[error("element set is not a two-sided ideal: {0}")]
    NotAnIdeal(String),

    #[error("element {0} is not idempotent")]
    NotIdempotent(String),

    #[error("ring {0} is not commutative")]
    NotCommutative(String),

    #[error("precondition failed: {0}")]
    PreconditionFailed(String),

    #[error("no witness found: {0}")]
    NotFound(String),

    #[error("syntax error at offset {offset}: expected {}", expected.join(" or "))]
    Syntax { offset: usize, expected: Vec<String> },

    #[error("unknown element literal `{literal}` in {ring}")]
    UnknownElement { literal: String, ring: String },

    #[error("ideal lattice has more than {cap} members")]
    TooManyIdeals { cap: usize },

    #[error("ring {ring} violates the ring axioms: {first}")]
    AxiomsViolated { ring: String, first: String },

    #[error("corpus: {0}")]
    Corpus(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
