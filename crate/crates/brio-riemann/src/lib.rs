//! Exact Riemann solvers for a Brio-type system with a two-parameter flux
//! perturbation, together with its one-parameter reduction and the
//! transport-equation limit.
//!
//! The crate provides:
//! - a pointwise kernel (characteristic speeds, wave curves, jump
//!   conditions, entropy checks) in [`kernel`];
//! - the four-configuration solver for the strictly hyperbolic system in
//!   [`solver`];
//! - exact solvers for the two limiting systems, including delta shocks
//!   and vacuum states, in [`limit_models`];
//! - parameter sweeps driving the flux coefficients to zero, with limit
//!   predictions and convergence-rate estimates, in [`sweep`];
//! - quadrature verification of the weak formulations in [`weak`];
//! - a first-order finite-volume cross-check in [`fv`].

pub mod bump;
pub mod error;
pub mod fv;
pub mod kernel;
pub mod limit_models;
pub mod quad;
pub mod roots;
pub mod solver;
pub mod state;
pub mod sweep;
pub mod wave;
pub mod weak;

pub use error::{Error, Result};
pub use state::{CharPair, FluxParams, State, SystemKind, WaveFamily};
pub use wave::{DeltaShockSolution, Region3, Region4, RiemannSolution, SampleResult, Wave};

/// JSON schema tag carried by machine-readable outputs.
pub const SCHEMA: &str = "brio-riemann/1";

/// Solves the Riemann problem for whichever system the parameters select:
/// the strictly hyperbolic solver for `eps1 > 0`, the one-parameter system
/// for `eps1 = 0, eps2 > 0`, and the transport equations for both zero.
pub fn solve(left: State, right: State, params: FluxParams, tol: f64) -> Result<RiemannSolution> {
    params.validate()?;
    match params.system() {
        SystemKind::Perturbed => solver::solve_riemann(left, right, params, tol),
        SystemKind::SingleParameter => limit_models::solve_single_param(left, right, params.eps2),
        SystemKind::Transport => limit_models::solve_transport(left, right),
    }
}
