use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An index fell outside its 1-based range.
    #[error("index {index} out of range 1..={bound}")]
    Range { index: usize, bound: usize },

    /// A sequence had the wrong length for the operation.
    #[error("arity mismatch: expected {expected}, got {got}")]
    Arity { expected: usize, got: usize },

    /// Values that do not form a permutation or function of the stated shape.
    #[error("malformed {what}: {detail}")]
    Malformed { what: &'static str, detail: String },

    /// Domain/codomain mismatch while composing or assembling morphisms.
    #[error("typing error at {junction}: {detail}")]
    Typing { junction: String, detail: String },

    /// A functor lacks data an operation requires (e.g. inverse constraints).
    #[error("missing capability: {0}")]
    Capability(String),

    /// A semiring table violates one of the commutative-semiring laws.
    #[error("semiring law `{law}` fails at {witness}")]
    SemiringLaw { law: &'static str, witness: String },

    /// A semiring table file could not be parsed.
    #[error("table parse error (line {line}): {detail}")]
    Parse { line: usize, detail: String },
}

impl Error {
    pub(crate) fn typing(junction: impl Into<String>, detail: impl Into<String>) -> Self {
        Error::Typing {
            junction: junction.into(),
            detail: detail.into(),
        }
    }
}
