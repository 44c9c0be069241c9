//! Error taxonomy shared by every module in the crate.

use thiserror::Error;

/// All failure modes surfaced by the laboratory.
#[derive(Debug, Error)]
pub enum Error {
    /// An argument is outside the operation's domain (non-unit direction,
    /// odd dimension where an even one is required, p >= n, ...).
    #[error("input domain: {0}")]
    InputDomain(String),

    /// A body oracle produced an impossible value (non-positive radius,
    /// unbounded radial ratio, NaN gauge).
    #[error("body integrity: {0}")]
    BodyIntegrity(String),

    /// A density oracle produced a negative or non-finite value.
    #[error("density integrity: {0}")]
    DensityIntegrity(String),

    /// Invalid rule / experiment configuration.
    #[error("config: {0}")]
    Config(String),

    /// Adaptive quadrature failed to converge; message carries diagnostics.
    #[error("quadrature failure: {0}")]
    QuadratureFailure(String),

    /// An oracle failed at a specific quadrature node.
    #[error("evaluation failed at node {node}: {msg}")]
    Evaluation { node: usize, msg: String },

    /// A spectral expansion could not resolve the input below tolerance.
    #[error("resolution: {0}")]
    Resolution(String),

    /// A multiplier or matrix is too ill-conditioned to invert.
    #[error("conditioning: {0}")]
    Conditioning(String),

    /// A constructed body has zero or infinite measure.
    #[error("degenerate body: {0}")]
    DegenerateBody(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
