use thiserror::Error;

/// Errors raised by graph construction, family builders, and the exact and
/// floating-point solvers.
#[derive(Debug, Error)]
pub enum QueensError {
    /// A caller-supplied value violates an operation's precondition.
    #[error("invalid input: {0}")]
    Input(String),

    /// A desk-scale size guard refused the request.
    #[error("size guard exceeded: {0}")]
    Guard(String),

    /// A supplied eigenvector failed its verification; indicates a broken
    /// family constructor rather than a mathematical outcome.
    #[error("family vector failed verification: {0}")]
    Family(String),

    /// The float solver did not reach its convergence threshold.
    #[error("no convergence after {sweeps} sweeps (off-diagonal mass {residual:e})")]
    NoConvergence { sweeps: usize, residual: f64 },

    /// An exact computation contradicted an invariant that cannot fail in
    /// correct code (e.g. a verified lower bound above the modular upper bound).
    #[error("invariant violated: {0}")]
    Invariant(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T> = std::result::Result<T, QueensError>;

pub(crate) fn input_err<T>(msg: impl Into<String>) -> Result<T> {
    Err(QueensError::Input(msg.into()))
}
