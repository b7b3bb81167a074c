use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed input: mismatched arities, bad dimensions, violated hypotheses.
    #[error("input error: {0}")]
    Input(String),

    /// The operation is undefined for this value (zero ideal, zero coordinate, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// Syntax error in an ideal expression, rational literal or system file.
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    /// A truncated computation could not decide its answer.
    #[error("inconclusive truncation: {0}")]
    Inconclusive(String),
}

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn parse(position: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            position,
            message: msg.into(),
        }
    }
}
