use thiserror::Error;

/// Errors raised by the algebra routines and the text front end.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A term or word refers to something the alphabet does not contain.
    #[error("structural error: {0}")]
    Structural(String),

    /// Input outside an operation's domain (e.g. a non-Lyndon word passed to `theta`).
    #[error("domain error: {0}")]
    Domain(String),

    /// A precomputed basis is too small for the requested weight, or a
    /// computation would exceed the built-in size limits.
    #[error("capacity error: {what} needs weight {needed}, limit is {limit}")]
    Capacity {
        what: String,
        needed: usize,
        limit: usize,
    },

    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

impl Error {
    pub(crate) fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            pos,
            msg: msg.into(),
        }
    }

    pub(crate) fn capacity(what: impl Into<String>, needed: usize, limit: usize) -> Self {
        Error::Capacity {
            what: what.into(),
            needed,
            limit,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
