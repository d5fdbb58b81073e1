use std::fmt;

/// A 1-based source position.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Pos {
    pub line: u32,
    pub col: u32,
}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.col)
    }
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum CliError {
    #[error("parse error at {pos}: {msg}")]
    Parse { pos: Pos, msg: String },
    #[error("type error at {pos}: {msg}")]
    Type { pos: Pos, msg: String },
    #[error("evaluation error at {pos}: {source}")]
    Eval { pos: Pos, source: qca_core::Error },
    #[error("{0}")]
    Input(String),
}

impl CliError {
    pub fn parse(pos: Pos, msg: impl Into<String>) -> Self {
        CliError::Parse { pos, msg: msg.into() }
    }

    pub fn ty(pos: Pos, msg: impl Into<String>) -> Self {
        CliError::Type { pos, msg: msg.into() }
    }

    pub fn eval(pos: Pos, source: qca_core::Error) -> Self {
        CliError::Eval { pos, source }
    }
}
