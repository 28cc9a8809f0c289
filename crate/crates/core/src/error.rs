use thiserror::Error;

/// Errors raised by graph construction, metrics, algebra and planning.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    Input(String),

    #[error("graph is disconnected")]
    Disconnected,

    #[error("oracle refuses graphs with {order} vertices (cap {cap})")]
    OracleCap { order: usize, cap: usize },

    #[error("arithmetic overflow computing {0}")]
    Overflow(&'static str),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn input<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Input(msg.into()))
}
