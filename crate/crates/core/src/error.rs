use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// An expansion produced a denominator longer than the configured guard.
    #[error("digit guard exceeded: term {index} has more than {limit} decimal digits")]
    DigitGuard { limit: usize, index: usize },

    /// A bounded search ran out of nodes before it could certify its answer.
    #[error("search inconclusive: node budget of {budget} exhausted")]
    Inconclusive { budget: u64 },

    /// A mathematical identity that must hold did not. Always a bug.
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn invariant(msg: impl Into<String>) -> Self {
        Error::Invariant(msg.into())
    }
}
