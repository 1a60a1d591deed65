use thiserror::Error;

/// Crate-wide error type.
///
/// The variants deliberately separate structural problems (wrong shapes,
/// bad arguments, malformed files) from numerical failures (rank
/// deficiency, ill-conditioning, non-convergence): callers such as the CLI
/// map the two groups to different exit codes.
#[derive(Debug, Error)]
pub enum Error {
    /// Matrix/vector shapes are inconsistent.
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    /// An operation was called with arguments outside its domain.
    #[error("invalid argument: {0}")]
    Argument(String),

    /// The model violates one or more identifiability assumptions.
    #[error("model assumptions violated: {}", .0.join("; "))]
    Assumptions(Vec<String>),

    /// A matrix that must have full numerical rank does not.
    #[error("rank deficiency in {what}: smallest singular value {sigma_min:.3e}")]
    RankDeficient { what: String, sigma_min: f64 },

    /// An iterative solver ran out of iterations.
    #[error("no convergence after {iterations} iterations (residual {residual:.3e})")]
    NotConverged { iterations: usize, residual: f64 },

    /// A numerical operation failed (singular factor, indefinite
    /// covariance, non-finite values).
    #[error("numerical failure: {0}")]
    Numerical(String),

    /// A dataset or config file does not match the expected format.
    #[error("format error: {0}")]
    Format(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
