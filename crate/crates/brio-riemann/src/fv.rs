//! First-order finite-volume cross-check: a local Lax-Friedrichs scheme
//! on Riemann data, an L1 comparison against exact solutions, and a
//! concentration diagnostic for near-delta regimes.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::kernel::{eigenvalues, flux};
use crate::solver::sample;
use crate::state::{FluxParams, State};
use crate::wave::{RiemannSolution, SampleResult};

/// Uniform grid and run controls.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Grid {
    pub x_min: f64,
    pub x_max: f64,
    pub n_cells: usize,
    pub cfl: f64,
    pub t_end: f64,
}

impl Grid {
    pub fn new(x_min: f64, x_max: f64, n_cells: usize, cfl: f64, t_end: f64) -> Result<Self> {
        if !(x_min < 0.0 && x_max > 0.0) {
            return Err(Error::InvalidInput(format!(
                "grid must straddle x = 0, got [{x_min}, {x_max}]"
            )));
        }
        if n_cells < 10 {
            return Err(Error::InvalidInput(format!("need at least 10 cells, got {n_cells}")));
        }
        if !(cfl > 0.0 && cfl < 1.0) {
            return Err(Error::InvalidInput(format!("cfl must lie in (0,1), got {cfl}")));
        }
        if !(t_end > 0.0 && t_end.is_finite()) {
            return Err(Error::InvalidInput(format!("t_end must be positive, got {t_end}")));
        }
        Ok(Grid { x_min, x_max, n_cells, cfl, t_end })
    }

    pub fn dx(&self) -> f64 {
        (self.x_max - self.x_min) / self.n_cells as f64
    }

    pub fn center(&self, i: usize) -> f64 {
        self.x_min + (i as f64 + 0.5) * self.dx()
    }
}

impl Default for Grid {
    fn default() -> Self {
        Grid { x_min: -2.0, x_max: 2.0, n_cells: 400, cfl: 0.45, t_end: 0.4 }
    }
}

/// Cell-averaged fields at the final time, plus run diagnostics.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CellField {
    pub grid: Grid,
    pub params: FluxParams,
    pub u: Vec<f64>,
    pub v: Vec<f64>,
    pub time: f64,
    pub steps: usize,
    /// Largest `dt * max|lambda| / (cfl * dx)` seen; stays <= 1.
    pub max_cfl_ratio: f64,
    /// Set when a nonpositive density appeared with eps1 > 0.
    pub admissibility_warning: bool,
    /// Relative drift of the totals against exact boundary-flux bookkeeping.
    pub mass_drift: (f64, f64),
}

fn max_abs_speed(u: f64, v: f64, p: FluxParams) -> f64 {
    let c = eigenvalues(State::new(u, v), p).expect("finite cell state");
    c.lambda1.abs().max(c.lambda2.abs())
}

/// Runs the conservative local Lax-Friedrichs update on Riemann data until
/// `t_end`, with transmissive boundaries. Errors if any wave reaches the
/// boundary cells.
pub fn lax_friedrichs_run(
    left: State,
    right: State,
    p: FluxParams,
    grid: Grid,
) -> Result<CellField> {
    p.validate()?;
    left.validate_finite()?;
    right.validate_finite()?;
    if p.eps1 > 0.0 {
        left.require_positive_density()?;
        right.require_positive_density()?;
    } else {
        left.require_nonnegative_density()?;
        right.require_nonnegative_density()?;
    }
    let n = grid.n_cells;
    let dx = grid.dx();
    let mut u: Vec<f64> = (0..n)
        .map(|i| if grid.center(i) < 0.0 { left.u } else { right.u })
        .collect();
    let mut v: Vec<f64> = (0..n)
        .map(|i| if grid.center(i) < 0.0 { left.v } else { right.v })
        .collect();

    let mut t = 0.0;
    let mut steps = 0usize;
    let mut max_cfl_ratio = 0.0_f64;
    let mut warning = false;
    // Totals expected from exact boundary-flux bookkeeping.
    let mut expected_u: f64 = u.iter().sum::<f64>() * dx;
    let mut expected_v: f64 = v.iter().sum::<f64>() * dx;
    let mut fu = vec![0.0_f64; n + 1];
    let mut fv = vec![0.0_f64; n + 1];

    while t < grid.t_end {
        let amax = (0..n)
            .map(|i| max_abs_speed(u[i], v[i], p))
            .fold(0.0_f64, f64::max);
        let dt = if amax > 1e-14 {
            (grid.cfl * dx / amax).min(grid.t_end - t)
        } else {
            grid.t_end - t
        };
        if amax > 0.0 {
            max_cfl_ratio = max_cfl_ratio.max(dt * amax / (grid.cfl * dx));
        }
        // Interface fluxes; ghost cells copy the edge cells, which makes
        // the boundary fluxes plain point fluxes.
        for i in 0..=n {
            let (il, ir) = (i.saturating_sub(1).min(n - 1), i.min(n - 1));
            let (il, ir) = if i == 0 { (0, 0) } else if i == n { (n - 1, n - 1) } else { (il, ir) };
            let ql = State::new(u[il], v[il]);
            let qr = State::new(u[ir], v[ir]);
            let (f1l, f2l) = flux(ql, p);
            let (f1r, f2r) = flux(qr, p);
            let alpha = max_abs_speed(ql.u, ql.v, p).max(max_abs_speed(qr.u, qr.v, p));
            fu[i] = 0.5 * (f1l + f1r) - 0.5 * alpha * (qr.u - ql.u);
            fv[i] = 0.5 * (f2l + f2r) - 0.5 * alpha * (qr.v - ql.v);
        }
        let lam = dt / dx;
        for i in 0..n {
            u[i] -= lam * (fu[i + 1] - fu[i]);
            v[i] -= lam * (fv[i + 1] - fv[i]);
        }
        expected_u -= dt * (fu[n] - fu[0]);
        expected_v -= dt * (fv[n] - fv[0]);
        t += dt;
        steps += 1;
        if p.eps1 > 0.0 && v.iter().any(|x| *x <= 0.0) {
            warning = true;
        }
        // Waves must stay clear of the boundary cells.
        let edge_moved = (u[0] - left.u).abs() > 1e-9 * (1.0 + left.u.abs())
            || (v[0] - left.v).abs() > 1e-9 * (1.0 + left.v.abs())
            || (u[n - 1] - right.u).abs() > 1e-9 * (1.0 + right.u.abs())
            || (v[n - 1] - right.v).abs() > 1e-9 * (1.0 + right.v.abs());
        if edge_moved {
            return Err(Error::DomainTooSmall(format!(
                "wave influence reached the boundary at t = {t}"
            )));
        }
        if steps > 10_000_000 {
            return Err(Error::Convergence("step budget exhausted".into()));
        }
    }

    let total_u: f64 = u.iter().sum::<f64>() * dx;
    let total_v: f64 = v.iter().sum::<f64>() * dx;
    let drift = |total: f64, expected: f64| {
        (total - expected).abs() / (1.0 + expected.abs())
    };
    Ok(CellField {
        grid,
        params: p,
        mass_drift: (drift(total_u, expected_u), drift(total_v, expected_v)),
        u,
        v,
        time: t,
        steps,
        max_cfl_ratio,
        admissibility_warning: warning,
    })
}

/// L1 distance between the numerical field and the exact solution sampled
/// at cell centers, summed over both components. Undefined against delta
/// shocks.
pub fn l1_error(num: &CellField, exact: &RiemannSolution, t: f64) -> Result<f64> {
    if exact.has_delta() {
        return Err(Error::DeltaComparison);
    }
    if t <= 0.0 || t.is_nan() {
        return Err(Error::InvalidInput(format!("comparison time must be positive, got {t}")));
    }
    let dx = num.grid.dx();
    let mut total = 0.0;
    for i in 0..num.grid.n_cells {
        let xi = num.grid.center(i) / t;
        let s = match sample(exact, xi) {
            SampleResult::State(s) => s,
            SampleResult::Delta { .. } => return Err(Error::DeltaComparison),
        };
        total += ((num.u[i] - s.u).abs() + (num.v[i] - s.v).abs()) * dx;
    }
    Ok(total)
}

/// Largest single-cell density mass `v * dx`: a grid-level surrogate for
/// concentration.
pub fn delta_indicator(num: &CellField) -> f64 {
    let dx = num.grid.dx();
    num.v.iter().cloned().fold(0.0_f64, f64::max) * dx
}

/// Machine-readable run summary.
#[derive(Debug, Clone, Serialize)]
pub struct RunSummary {
    pub scheme: &'static str,
    pub steps: usize,
    pub time: f64,
    pub l1_error: Option<f64>,
    pub delta_indicator: f64,
    pub mass_drift_u: f64,
    pub mass_drift_v: f64,
    pub max_cfl_ratio: f64,
    pub admissibility_warning: bool,
}

impl RunSummary {
    pub fn of(field: &CellField, l1: Option<f64>) -> Self {
        RunSummary {
            scheme: "local-lax-friedrichs-first-order",
            steps: field.steps,
            time: field.time,
            l1_error: l1,
            delta_indicator: delta_indicator(field),
            mass_drift_u: field.mass_drift.0,
            mass_drift_v: field.mass_drift.1,
            max_cfl_ratio: field.max_cfl_ratio,
            admissibility_warning: field.admissibility_warning,
        }
    }
}

/// CSV snapshot `x,u,v`, one row per cell.
pub fn field_to_csv(field: &CellField) -> String {
    let mut out = String::from("x,u,v\n");
    for i in 0..field.grid.n_cells {
        out.push_str(&format!("{},{},{}\n", field.grid.center(i), field.u[i], field.v[i]));
    }
    out
}
