//! Crate-wide error type.

use thiserror::Error;

/// Everything that can go wrong while building geometry, solving traces,
/// stepping the front, or doing IO.
#[derive(Debug, Error)]
pub enum FlameError {
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("geometry error: {0}")]
    Geometry(String),

    #[error("front self-intersection between segments {seg_a} and {seg_b} at tau = {tau}")]
    SelfIntersection { seg_a: usize, seg_b: usize, tau: f64 },

    #[error("trace system is ill-conditioned (estimate {estimate:.3e} > {limit:.1e})")]
    IllConditioned { estimate: f64, limit: f64 },

    #[error("stretch iteration failed to converge after {iters} iterations (last update {last_update:.3e})")]
    StretchDiverged { iters: usize, last_update: f64 },

    #[error("linear algebra failure: {0}")]
    Linalg(String),

    #[error("checkpoint error: {0}")]
    Checkpoint(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("JSON error: {0}")]
    Json(#[from] serde_json::Error),

    #[error("CSV error: {0}")]
    Csv(#[from] csv::Error),
}

pub type Result<T> = std::result::Result<T, FlameError>;

impl From<ndarray_linalg::error::LinalgError> for FlameError {
    fn from(e: ndarray_linalg::error::LinalgError) -> Self {
        FlameError::Linalg(e.to_string())
    }
}
