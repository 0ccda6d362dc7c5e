//! Error taxonomy shared by every module.
//!
//! Domain errors (an input outside an operation's mathematical domain) are
//! kept distinct from guard refusals (an input that is meaningful but whose
//! cost exceeds a named size guard). The CLI maps them to different exit
//! codes.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The input lies outside the operation's domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// The computation was refused because a size guard was exceeded.
    #[error("size guard `{guard}` refused the request: {actual} exceeds limit {limit}")]
    Guard {
        guard: &'static str,
        limit: u64,
        actual: u64,
    },
}

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;

/// Checks one named size guard, refusing when `actual > limit`.
pub fn check_guard(guard: &'static str, actual: u64, limit: u64) -> Result<()> {
    if actual > limit {
        Err(Error::Guard {
            guard,
            limit,
            actual,
        })
    } else {
        Ok(())
    }
}
