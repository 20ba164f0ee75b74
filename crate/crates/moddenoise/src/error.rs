use thiserror::Error;

/// Errors produced by graph construction, solvers, bound evaluators and I/O.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid size: {0}")]
    InvalidSize(String),

    #[error("graph is not connected: vertex {a} and vertex {b} lie in different components")]
    Disconnected { a: usize, b: usize },

    #[error("invalid edge ({i}, {j}): {reason}")]
    InvalidEdge { i: usize, j: usize, reason: String },

    #[error("size mismatch: {0}")]
    SizeMismatch(String),

    #[error("invalid parameter: {0}")]
    Parameter(String),

    #[error("{what} = {value} out of range [{lo}, {hi}]")]
    OutOfRange {
        what: String,
        value: f64,
        lo: f64,
        hi: f64,
    },

    #[error(
        "signal is orthogonal to the Laplacian null space \
         (|<z, q_n>| = {inner:.3e} below threshold {threshold:.3e})"
    )]
    NullSpaceDegenerate { inner: f64, threshold: f64 },

    #[error(
        "root finding did not converge in {iterations} iterations \
         (bracket [{lo:.17e}, {hi:.17e}], residual {residual:.3e})"
    )]
    NonConvergence {
        iterations: usize,
        lo: f64,
        hi: f64,
        residual: f64,
    },

    #[error("numerical failure: {0}")]
    Numerical(String),

    #[error("validation error: {0}")]
    Validation(String),

    #[error("trial failed at sigma = {sigma}, trial {trial_index}: {source}")]
    TrialFailure {
        sigma: f64,
        trial_index: usize,
        source: Box<Error>,
    },

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("JSON error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
