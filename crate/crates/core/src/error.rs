use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Arguments violate an operation's preconditions (wrong kind, bad index, ...).
    #[error("usage error: {0}")]
    Usage(String),
    /// Geometrically degenerate input, e.g. a line through two equal points.
    #[error("degenerate input: {0}")]
    Degenerate(String),
    /// A guaranteed property failed to hold; this indicates a bug.
    #[error("invariant violated: {0}")]
    InvariantViolation(String),
    /// A seeded generator could not meet its constraints within its retry budget.
    #[error("generation failed: {0}")]
    Generation(String),
    /// A formula was evaluated outside the regime where it is defined.
    #[error("domain error: {0}")]
    Domain(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn usage<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Usage(msg.into()))
}

pub(crate) fn degenerate<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Degenerate(msg.into()))
}
