use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Malformed or out-of-range input.
    #[error("invalid input: {0}")]
    Input(String),

    /// A precondition of an exact formula or construction does not hold.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// Proof, query, and instance dimensions disagree.
    #[error("shape mismatch: {0}")]
    Shape(String),

    /// An exhaustive computation would exceed its configured budget.
    #[error("{what}: estimated cost {cost} exceeds cap {cap}")]
    CapExceeded { what: &'static str, cost: f64, cap: f64 },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn input<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Input(msg.into()))
}
