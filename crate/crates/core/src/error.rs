use std::fmt;

/// Errors surfaced by parsers and by operations with preconditions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Malformed input file; `line` is 1-based.
    Parse { line: usize, msg: String },
    /// An instance exceeds the hard size cap of an operation.
    SizeCap { what: String },
    /// A precondition on the arguments is violated.
    InvalidInput(String),
}

impl Error {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }

    pub(crate) fn cap(what: impl Into<String>) -> Self {
        Error::SizeCap { what: what.into() }
    }

    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Parse { line, msg } => write!(f, "line {line}: {msg}"),
            Error::SizeCap { what } => write!(f, "size cap exceeded: {what}"),
            Error::InvalidInput(msg) => write!(f, "{msg}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
