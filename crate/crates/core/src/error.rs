use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    /// Arguments outside the domain of an operation.
    #[error("invalid parameter: {0}")]
    Parameter(String),

    /// A precondition of a construction does not hold for the given graphs.
    #[error("precondition failed: {0}")]
    Precondition(String),

    /// An exact search ran out of explored-node budget.
    #[error("search budget of {nodes} nodes exhausted (best bounds: {lower}..={upper})")]
    BudgetExhausted { nodes: u64, lower: u64, upper: u64 },

    /// Enumeration exceeded a size limit.
    #[error("resource limit exceeded: {0}")]
    Resource(String),

    /// Input data violating a structural invariant.
    #[error("invariant violated: {0}")]
    Invariant(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn param(msg: impl Into<String>) -> Self {
        Error::Parameter(msg.into())
    }
}
