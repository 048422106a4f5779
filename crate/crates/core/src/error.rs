use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Malformed or unsupported Cartan type string.
    #[error("invalid Cartan type `{factor}`: {reason}")]
    InvalidType { factor: String, reason: String },

    /// Malformed textual input (weights, root lists, rationals).
    #[error("parse error: {0}")]
    Parse(String),

    /// Input is well formed but violates a mathematical precondition.
    #[error("validation error: {0}")]
    Validation(String),

    /// A configured cap (rank, Weyl order, term count) would be exceeded.
    #[error("resource limit exceeded: {0}")]
    Resource(String),

    /// An internal consistency check failed. Always a bug.
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn validation(msg: impl Into<String>) -> Self {
        Error::Validation(msg.into())
    }

    pub(crate) fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }

    /// Process exit status for this error: 2 usage, 3 validation, 4 caps.
    /// Internal failures share status 1 with failed identities.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::InvalidType { .. } | Error::Parse(_) => 2,
            Error::Validation(_) => 3,
            Error::Resource(_) => 4,
            Error::Internal(_) => 1,
        }
    }
}
