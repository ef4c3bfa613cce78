//! Error types shared across the crate.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("non-finite input: {0}")]
    NonFinite(&'static str),

    #[error("density must be positive, got v = {v}")]
    NonPositiveDensity { v: f64 },

    #[error("density must be nonnegative, got v = {v}")]
    NegativeDensity { v: f64 },

    #[error("invalid flux parameters: eps1 = {eps1}, eps2 = {eps2}")]
    InvalidParams { eps1: f64, eps2: f64 },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("v = {v} is off the {kind} branch based at v = {v_base}")]
    OffBranch {
        kind: &'static str,
        v: f64,
        v_base: f64,
    },

    #[error("degenerate jump: both states have v = {v}")]
    DegenerateJump { v: f64 },

    #[error("wave curves do not intersect at positive density: {0}")]
    NoIntersection(String),

    #[error("bracket expansion failed: {0}")]
    BracketFailure(String),

    #[error("iteration did not converge: {0}")]
    Convergence(String),

    #[error("quadrature did not converge: {0}")]
    QuadratureFailure(String),

    #[error("computational domain too small: {0}")]
    DomainTooSmall(String),

    #[error("L1 comparison is undefined against a delta-shock solution")]
    DeltaComparison,

    #[error("unsupported case: {0}")]
    UnsupportedCase(String),

    #[error("no classification threshold in the search range: {0}")]
    ThresholdNotFound(String),

    #[error("sweep point eps1 = {eps1}, eps2 = {eps2} failed: {source}")]
    SweepPoint {
        eps1: f64,
        eps2: f64,
        #[source]
        source: Box<Error>,
    },
}

impl Error {
    /// Process exit code the CLI maps this error onto: 2 for input
    /// validation problems, 3 for solver and quadrature failures.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::NonFinite(_)
            | Error::NonPositiveDensity { .. }
            | Error::NegativeDensity { .. }
            | Error::InvalidParams { .. }
            | Error::InvalidInput(_)
            | Error::OffBranch { .. }
            | Error::DegenerateJump { .. }
            | Error::UnsupportedCase(_)
            | Error::DeltaComparison => 2,
            Error::SweepPoint { source, .. } => source.exit_code(),
            _ => 3,
        }
    }
}
