use thiserror::Error;

/// Errors raised by biderlab operations.
///
/// Predicate failures (an identity not holding, a hypothesis failing) are
/// reported as verdicts, not errors. Errors signal malformed input or a
/// violated precondition.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("malformed rational {0:?}")]
    MalformedRational(String),

    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("{field}: expected {expected} entries, got {found}")]
    FieldLength {
        field: String,
        expected: usize,
        found: usize,
    },

    #[error("invalid preset: {0}")]
    InvalidPreset(String),

    #[error("not associative: (u{i}u{j})u{k} != u{i}(u{j}u{k}) (basis {names})", i = .triple.0 + 1, j = .triple.1 + 1, k = .triple.2 + 1)]
    NotAssociative {
        triple: (usize, usize, usize),
        names: String,
    },

    #[error("unity law fails at basis element {} ({name})", .index + 1)]
    UnityLaw { index: usize, name: String },

    #[error("invalid bimodule: {0}")]
    InvalidBimodule(String),

    #[error("element is not idempotent")]
    NotIdempotent,

    #[error("trivial idempotent: {0}")]
    TrivialIdempotent(&'static str),

    #[error("invalid polynomial: {0}")]
    InvalidPolynomial(String),

    #[error("arity mismatch: polynomial has arity {expected}, got {found} arguments")]
    ArityMismatch { expected: usize, found: usize },

    #[error("polynomial arity {arity} exceeds the configured cap {cap}")]
    ArityCap { arity: usize, cap: usize },

    #[error("constraint system too large: {rows} rows x {cols} columns (limit {limit} rows)")]
    SystemTooLarge {
        rows: usize,
        cols: usize,
        limit: usize,
    },

    #[error("subspace is not closed under multiplication")]
    NotSubalgebra,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
