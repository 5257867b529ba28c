use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed textual input. `line` is 1-based; 0 when the format has no lines.
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    /// Input parsed but violates a graph invariant (self-loop, duplicate edge, ...).
    #[error("invalid graph: {0}")]
    Validation(String),

    /// Argument outside the operation's domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// A theorem or bound precondition does not hold for these parameters.
    #[error("not applicable: {0}")]
    NotApplicable(String),

    /// The input exceeds an exhaustive-enumeration guard.
    #[error("refused: {0}")]
    Refused(String),

    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),

    #[error("generator error: {0}")]
    Generator(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}
