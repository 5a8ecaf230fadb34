use thiserror::Error;

/// Errors raised by construction, geometry and verification routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A caller-supplied parameter is outside the range the routine is defined for.
    #[error("invalid parameter: {0}")]
    Parameter(String),

    /// A lookup past the end of an eagerly built table.
    #[error("index {index} out of range (table limit {limit})")]
    Range { index: u64, limit: u64 },

    /// A routine was called with inputs violating its precondition.
    #[error("contract violation: {0}")]
    Contract(String),

    /// An exact integer computation left the 64-bit range.
    #[error("integer overflow while computing {0}")]
    Overflow(&'static str),

    /// The construction did not produce the structure it is supposed to.
    #[error("construction broken: {0}")]
    ConstructionBroken(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn param(msg: impl Into<String>) -> Error {
    Error::Parameter(msg.into())
}
