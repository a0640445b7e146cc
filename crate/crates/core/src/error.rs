//! Error types shared across the crate.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// One row of the iteration trace attached to convergence failures.
#[derive(Debug, Clone, PartialEq)]
pub struct IterationRecord {
    pub iteration: usize,
    pub log_likelihood: f64,
    pub gradient_norm: f64,
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("invalid data: {0}")]
    InvalidData(String),

    #[error("singular design: columns {} are linearly dependent given the others", columns.join(", "))]
    SingularDesign { columns: Vec<String> },

    #[error("logistic fit did not converge after {} iterations (last gradient norm {:.3e})",
        trace.len(), trace.last().map(|r| r.gradient_norm).unwrap_or(f64::NAN))]
    Convergence { trace: Vec<IterationRecord> },

    #[error("fit for index set {set} did not converge{}", if *separated { " (separated)" } else { "" })]
    NonConvergedFit { set: String, separated: bool },

    #[error("target correlation {requested} outside attainable bounds [{lower:.6}, {upper:.6}] for the given marginals")]
    InfeasibleCorrelation {
        requested: f64,
        lower: f64,
        upper: f64,
    },

    #[error("generation failed: {0}")]
    Generation(String),

    #[error("covariance factorization failed: {0}")]
    Factorization(String),

    #[error("pathological truncation: acceptance rate {rate:.2e} after {attempts} draws")]
    PathologicalTruncation { rate: f64, attempts: usize },

    #[error("insufficient data: {0}")]
    InsufficientData(String),

    #[error("{failed} of {total} {what} failed (limit {limit_percent}%)")]
    TooManyFailures {
        what: String,
        failed: usize,
        total: usize,
        limit_percent: u8,
    },

    #[error("internal invariant violated: {0}")]
    Internal(String),

    #[error("config error: {0}")]
    Config(String),

    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub(crate) fn io(path: impl Into<String>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}
