use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An operation was called outside its domain (zero gcd, non-divisor modulus, ...).
    #[error("domain error: {0}")]
    Domain(String),

    #[error("ring mismatch: Z/{left} vs Z/{right}")]
    RingMismatch { left: u64, right: u64 },

    #[error("variable count mismatch: {left} vs {right}")]
    ArityMismatch { left: usize, right: usize },

    #[error("monomial order mismatch")]
    OrderMismatch,

    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("invalid modulus {0}: must be at least 2 and below 2^63")]
    InvalidModulus(u64),

    #[error("io error on {path}: {message}")]
    Io { path: String, message: String },
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
