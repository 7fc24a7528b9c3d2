use thiserror::Error;

/// Errors produced by the evaluation, fitting and goodness-of-fit routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("argument out of domain: {0}")]
    Domain(String),

    #[error("dataset is empty")]
    EmptyData,

    #[error("degenerate data: {0}")]
    DegenerateData(String),

    #[error("no sign change over bracket [{lo}, {hi}]")]
    NoSignChange { lo: f64, hi: f64 },

    #[error("root finder exceeded {0} iterations")]
    MaxIterations(usize),

    #[error("quadrature did not converge (value {value}, error estimate {error_estimate})")]
    QuadratureNonConvergence { value: f64, error_estimate: f64 },

    #[error("series did not converge (last term magnitude {last_term})")]
    SeriesNonConvergence { value: f64, last_term: f64 },

    #[error("observed information is singular or ill-conditioned: {0}")]
    SingularInformation(String),

    #[error("invalid order statistic rank {r} for sample size {n}")]
    InvalidRank { r: usize, n: usize },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("line {line}: negative observation {value}")]
    NegativeValue { line: usize, value: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;
