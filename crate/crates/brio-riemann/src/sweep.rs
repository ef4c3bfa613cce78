//! Parameter-limit laboratory: geometric schedules driving the flux
//! coefficients to zero, per-point solution records, predicted limit
//! objects, classification thresholds, and convergence-rate estimates.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::limit_models::{self, region3_of};
use crate::solver;
use crate::state::{FluxParams, State, ABS_TOL, TIE_TOL};
use crate::wave::{DeltaShockSolution, Region3, Region4};

const SOLVE_TOL: f64 = ABS_TOL;

/// How the two coefficients move along a schedule.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "mode", rename_all = "snake_case")]
pub enum SweepMode {
    /// `eps1 = eps2 = eps_k`.
    BothEqual,
    /// `eps1 = eps_k` with `eps2` held fixed. `eps2 = 0` selects the
    /// exactly solvable straight-curve family.
    Eps1Only { eps2: f64 },
}

/// Geometric schedule `eps_k = eps_start * ratio^k`, truncated at `floor`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Schedule {
    pub eps_start: f64,
    pub ratio: f64,
    pub count: usize,
    pub floor: f64,
    pub mode: SweepMode,
}

impl Schedule {
    pub const DEFAULT_FLOOR: f64 = 1e-12;

    pub fn both_equal(eps_start: f64, ratio: f64, count: usize) -> Result<Self> {
        Self::new(eps_start, ratio, count, Self::DEFAULT_FLOOR, SweepMode::BothEqual)
    }

    pub fn eps1_only(eps_start: f64, ratio: f64, count: usize, eps2: f64) -> Result<Self> {
        Self::new(
            eps_start,
            ratio,
            count,
            Self::DEFAULT_FLOOR,
            SweepMode::Eps1Only { eps2 },
        )
    }

    pub fn new(
        eps_start: f64,
        ratio: f64,
        count: usize,
        floor: f64,
        mode: SweepMode,
    ) -> Result<Self> {
        if !(eps_start > 0.0 && eps_start.is_finite()) {
            return Err(Error::InvalidInput(format!("eps_start must be positive, got {eps_start}")));
        }
        if !(ratio > 0.0 && ratio < 1.0) {
            return Err(Error::InvalidInput(format!("ratio must lie in (0,1), got {ratio}")));
        }
        if count == 0 {
            return Err(Error::InvalidInput("count must be positive".into()));
        }
        if floor <= 0.0 || floor.is_nan() {
            return Err(Error::InvalidInput(format!("floor must be positive, got {floor}")));
        }
        if let SweepMode::Eps1Only { eps2 } = mode {
            if !(eps2 >= 0.0 && eps2.is_finite()) {
                return Err(Error::InvalidParams { eps1: eps_start, eps2 });
            }
        }
        Ok(Schedule { eps_start, ratio, count, floor, mode })
    }

    /// The schedule values, dropping anything below the floor.
    pub fn values(&self) -> Vec<f64> {
        (0..self.count)
            .map(|k| self.eps_start * self.ratio.powi(k as i32))
            .take_while(|e| *e >= self.floor)
            .collect()
    }
}

/// One row of a limit study.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SweepRecord {
    pub eps1: f64,
    pub eps2: f64,
    pub v_star: f64,
    pub u_star: f64,
    /// Leading edge of the first wave (shock speed or fan head).
    pub sigma1: f64,
    /// Trailing edge of the second wave (shock speed or fan tail).
    pub sigma2: f64,
    /// `(sigma2 - sigma1) * v_star`, the mass collecting between the waves.
    pub strength_surrogate: f64,
    /// `sqrt(eps1) * v_star`.
    pub scaled_vstar: f64,
    pub region: Region4,
}

/// Solves one parameter point and extracts the record fields.
pub fn solve_record(
    left: State,
    right: State,
    eps1: f64,
    eps2: f64,
    tol: f64,
) -> Result<SweepRecord> {
    let attach = |e: Error| Error::SweepPoint { eps1, eps2, source: Box::new(e) };
    let p = FluxParams::new(eps1, eps2).map_err(attach)?;
    let sol = solver::solve_riemann(left, right, p, tol).map_err(attach)?;
    let mid = sol.intermediate.ok_or_else(|| {
        attach(Error::InvalidInput(
            "degenerate data: fewer than two waves, no intermediate state".into(),
        ))
    })?;
    let sigma1 = sol.waves[0].speed_range().0;
    let sigma2 = sol.waves[1].speed_range().1;
    Ok(SweepRecord {
        eps1,
        eps2,
        v_star: mid.v,
        u_star: mid.u,
        sigma1,
        sigma2,
        strength_surrogate: (sigma2 - sigma1) * mid.v,
        scaled_vstar: eps1.sqrt() * mid.v,
        region: sol.region.expect("hyperbolic solve always sets a region"),
    })
}

/// Sweep with both coefficients equal along the schedule.
pub fn sweep_both(left: State, right: State, sch: &Schedule) -> Result<Vec<SweepRecord>> {
    if sch.mode != SweepMode::BothEqual {
        return Err(Error::InvalidInput("sweep_both needs a both-equal schedule".into()));
    }
    if left.u == right.u {
        return Err(Error::InvalidInput("sweep needs distinct velocities".into()));
    }
    sch.values()
        .into_iter()
        .map(|e| solve_record(left, right, e, e, SOLVE_TOL))
        .collect()
}

/// Sweep in `eps1` with `eps2` fixed.
pub fn sweep_eps1(
    left: State,
    right: State,
    eps2: f64,
    sch: &Schedule,
) -> Result<Vec<SweepRecord>> {
    match sch.mode {
        SweepMode::Eps1Only { eps2: e } if e == eps2 => {}
        _ => {
            return Err(Error::InvalidInput(
                "sweep_eps1 needs an eps1-only schedule with a matching eps2".into(),
            ))
        }
    }
    sch.values()
        .into_iter()
        .map(|e| solve_record(left, right, e, eps2, SOLVE_TOL))
        .collect()
}

/// What a vanishing-parameter family converges to.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum LimitPrediction {
    DeltaShock(DeltaShockSolution),
    Vacuum {
        left_speed: f64,
        right_speed: f64,
    },
    ContactThenRarefaction {
        contact_speed: f64,
        intermediate: State,
    },
}

/// Limit of the both-equal family: the transport delta shock for closing
/// velocities, the transport vacuum for opening ones.
pub fn predicted_limit_both(left: State, right: State) -> Result<LimitPrediction> {
    left.require_nonnegative_density()?;
    right.require_nonnegative_density()?;
    if left.u > right.u {
        let sol = limit_models::solve_transport(left, right)?;
        Ok(LimitPrediction::DeltaShock(sol.delta().expect("closing data form a delta")))
    } else if left.u < right.u {
        Ok(LimitPrediction::Vacuum {
            left_speed: left.u,
            right_speed: right.u,
        })
    } else {
        Err(Error::InvalidInput("limit prediction needs distinct velocities".into()))
    }
}

/// Limit of the eps1-only family: the one-parameter delta shock for
/// region-III data, contact plus rarefaction for region-I data. Region II
/// is not covered.
pub fn predicted_limit_eps1(left: State, right: State, eps2: f64) -> Result<LimitPrediction> {
    match region3_of(left, right, eps2)? {
        Region3::III => {
            let sol = limit_models::solve_single_param(left, right, eps2)?;
            Ok(LimitPrediction::DeltaShock(sol.delta().expect("region III forms a delta")))
        }
        Region3::I => {
            let v_star = right.v * ((left.u - right.u) / eps2).exp();
            Ok(LimitPrediction::ContactThenRarefaction {
                contact_speed: left.u - eps2,
                intermediate: State::new(left.u, v_star),
            })
        }
        Region3::II => Err(Error::UnsupportedCase(
            "no eps1 -> 0 limit is provided for region-II data".into(),
        )),
    }
}

/// Largest `eps1` below which the classification matches the limiting
/// configuration: `S1S2` for region-III data, `R1R2` for region-I data.
/// Returns `+inf` when the classification already holds at the top of the
/// search range `[1e-300, 1e6]`.
pub fn find_region_threshold(left: State, right: State, eps2: f64) -> Result<f64> {
    let target = match region3_of(left, right, eps2)? {
        Region3::III => Region4::S1S2,
        Region3::I => Region4::R1R2,
        Region3::II => {
            return Err(Error::UnsupportedCase(
                "thresholds are defined for region-I and region-III data".into(),
            ))
        }
    };
    let is_target = |e1: f64| {
        solver::classify(left, right, FluxParams { eps1: e1, eps2 }, TIE_TOL)
            .map(|r| r == target)
            .unwrap_or(false)
    };
    let (lo, hi) = (1e-300_f64, 1e6_f64);
    if is_target(hi) {
        return Ok(f64::INFINITY);
    }
    if !is_target(lo) {
        return Err(Error::ThresholdNotFound(format!(
            "classification is not {target:?} even at eps1 = {lo}"
        )));
    }
    // Bisect the switch point on a log scale.
    let (mut wl, mut wh) = (lo.ln(), hi.ln());
    for _ in 0..200 {
        let wm = 0.5 * (wl + wh);
        if is_target(wm.exp()) {
            wl = wm;
        } else {
            wh = wm;
        }
        if wh - wl <= 1e-13 {
            break;
        }
    }
    Ok(wl.exp())
}

/// Record field selectors for limit estimation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RecordField {
    Eps1,
    VStar,
    UStar,
    Sigma1,
    Sigma2,
    StrengthSurrogate,
    ScaledVstar,
}

impl RecordField {
    pub fn get(&self, r: &SweepRecord) -> f64 {
        match self {
            RecordField::Eps1 => r.eps1,
            RecordField::VStar => r.v_star,
            RecordField::UStar => r.u_star,
            RecordField::Sigma1 => r.sigma1,
            RecordField::Sigma2 => r.sigma2,
            RecordField::StrengthSurrogate => r.strength_surrogate,
            RecordField::ScaledVstar => r.scaled_vstar,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LimitEstimate {
    /// Last value of the sequence.
    pub limit: f64,
    /// Power `p` in `|x_k - x*| ~ C eps_k^p`, from the log-ratio of the
    /// last two successive differences; absent when the tail is not
    /// monotone enough to support the estimate.
    pub rate: Option<f64>,
}

/// Convergence diagnostics on a geometric schedule: needs at least three
/// records.
pub fn estimate_limit(records: &[SweepRecord], field: RecordField) -> Result<LimitEstimate> {
    if records.len() < 3 {
        return Err(Error::InvalidInput(format!(
            "rate estimation needs at least three records, got {}",
            records.len()
        )));
    }
    let n = records.len();
    let x = |k: usize| field.get(&records[k]);
    let limit = x(n - 1);
    let d1 = x(n - 2) - x(n - 3);
    let d2 = x(n - 1) - x(n - 2);
    let ratio = records[n - 1].eps1 / records[n - 2].eps1;
    let rate = if d1 != 0.0
        && d2 != 0.0
        && d1.signum() == d2.signum()
        && ratio > 0.0
        && ratio < 1.0
    {
        Some((d2 / d1).ln() / ratio.ln())
    } else {
        None
    };
    Ok(LimitEstimate { limit, rate })
}

/// Candidate limits of `sqrt(eps1) * v_star`, under the jump-consistent
/// shock slope and under the endpoint-sum form. Only the first is pinned
/// by tests; the second is retained for comparison.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ScaledVstarLimits {
    pub midpoint_form: f64,
    pub endpoint_sum_form: f64,
}

/// Predicted `sqrt(eps1) * v_star` limits for two-shock data, when defined.
pub fn scaled_vstar_limits(
    left: State,
    right: State,
    mode: SweepMode,
) -> Option<ScaledVstarLimits> {
    let du = left.u - right.u;
    if du <= 0.0 {
        return None;
    }
    match mode {
        SweepMode::BothEqual => Some(ScaledVstarLimits {
            midpoint_form: 0.5 * du,
            endpoint_sum_form: 0.25 * du,
        }),
        SweepMode::Eps1Only { eps2 } => {
            let sq = 0.25 * du * du - eps2 * eps2;
            if sq <= 0.0 {
                return None;
            }
            Some(ScaledVstarLimits {
                midpoint_form: sq.sqrt(),
                endpoint_sum_form: 0.5 * sq.sqrt(),
            })
        }
    }
}

/// Fixed CSV header for sweep records.
pub const SWEEP_CSV_HEADER: &str =
    "eps1,eps2,v_star,u_star,sigma1,sigma2,strength_surrogate,scaled_vstar,region";

/// Serializes records with the fixed column order, shortest round-trip
/// floats.
pub fn records_to_csv(records: &[SweepRecord]) -> String {
    let mut out = String::from(SWEEP_CSV_HEADER);
    out.push('\n');
    for r in records {
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{},{}\n",
            r.eps1,
            r.eps2,
            r.v_star,
            r.u_star,
            r.sigma1,
            r.sigma2,
            r.strength_surrogate,
            r.scaled_vstar,
            r.region
        ));
    }
    out
}

/// Full machine-readable sweep output: records, limit estimates for the
/// interesting fields, the predicted limit object, and both candidate
/// scaled-density constants.
#[derive(Debug, Clone, Serialize)]
pub struct SweepReport {
    pub schema: &'static str,
    pub left: State,
    pub right: State,
    pub mode: SweepMode,
    pub records: Vec<SweepRecord>,
    pub estimates: BTreeMap<String, LimitEstimate>,
    pub prediction: Option<LimitPrediction>,
    pub scaled_vstar_limits: Option<ScaledVstarLimits>,
    pub notes: Vec<String>,
}

pub fn build_report(
    left: State,
    right: State,
    mode: SweepMode,
    records: Vec<SweepRecord>,
) -> SweepReport {
    let mut estimates = BTreeMap::new();
    for (name, field) in [
        ("v_star", RecordField::VStar),
        ("u_star", RecordField::UStar),
        ("sigma1", RecordField::Sigma1),
        ("sigma2", RecordField::Sigma2),
        ("strength_surrogate", RecordField::StrengthSurrogate),
        ("scaled_vstar", RecordField::ScaledVstar),
    ] {
        if let Ok(est) = estimate_limit(&records, field) {
            estimates.insert(name.to_string(), est);
        }
    }
    let prediction = match mode {
        SweepMode::BothEqual => predicted_limit_both(left, right).ok(),
        SweepMode::Eps1Only { eps2 } => predicted_limit_eps1(left, right, eps2).ok(),
    };
    let mut notes = Vec::new();
    if let SweepMode::Eps1Only { eps2 } = mode {
        if eps2 == 0.0 {
            notes.push(
                "eps2 = 0 is a degenerate-parameter extension with straight wave curves"
                    .to_string(),
            );
        }
    }
    SweepReport {
        schema: "brio-riemann/1",
        left,
        right,
        mode,
        records,
        estimates,
        prediction,
        scaled_vstar_limits: scaled_vstar_limits(left, right, mode),
        notes,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exactly_solvable_point() {
        let r = solve_record(State::new(1.0, 1.0), State::new(-1.0, 1.0), 1e-4, 0.0, 1e-12)
            .unwrap();
        assert!((r.v_star - 101.0).abs() < 1e-7);
        assert!((r.sigma1 + 0.01).abs() < 1e-10);
        assert!((r.sigma2 - 0.01).abs() < 1e-10);
        assert!((r.strength_surrogate - 2.02).abs() < 1e-8);
        assert_eq!(r.region, Region4::S1S2);
    }

    #[test]
    fn schedule_values_respect_floor() {
        let sch = Schedule::new(1e-1, 0.25, 30, 1e-12, SweepMode::BothEqual).unwrap();
        let vals = sch.values();
        assert!(vals.iter().all(|e| *e >= 1e-12));
        assert!(vals.len() < 30);
        assert!((vals[0] - 0.1).abs() < 1e-15);
        assert!((vals[1] - 0.025).abs() < 1e-15);
    }

    #[test]
    fn both_equal_sweep_tends_to_delta() {
        let sch = Schedule::both_equal(1e-1, 0.25, 12).unwrap();
        let recs = sweep_both(State::new(1.0, 1.0), State::new(-1.0, 1.0), &sch).unwrap();
        assert_eq!(recs.len(), 12);
        // Densities grow without bound, speeds close onto the mean.
        assert!(recs.windows(2).all(|w| w[1].v_star > w[0].v_star));
        let last = recs.last().unwrap();
        assert!(last.sigma1.abs() < 1e-2 && last.sigma2.abs() < 1e-2);
        assert!((last.strength_surrogate - 2.0).abs() < 1e-2);
    }

    #[test]
    fn predicted_limits() {
        match predicted_limit_both(State::new(1.0, 1.0), State::new(-1.0, 1.0)).unwrap() {
            LimitPrediction::DeltaShock(d) => {
                assert_eq!(d.sigma, 0.0);
                assert_eq!(d.strength_rate, 2.0);
            }
            other => panic!("expected delta, got {other:?}"),
        }
        match predicted_limit_both(State::new(2.0, 3.0), State::new(0.0, 5.0)).unwrap() {
            LimitPrediction::DeltaShock(d) => {
                assert_eq!(d.sigma, 1.0);
                assert_eq!(d.strength_rate, 8.0);
            }
            other => panic!("expected delta, got {other:?}"),
        }
        match predicted_limit_both(State::new(-1.0, 1.0), State::new(1.0, 2.0)).unwrap() {
            LimitPrediction::Vacuum { left_speed, right_speed } => {
                assert_eq!((left_speed, right_speed), (-1.0, 1.0));
            }
            other => panic!("expected vacuum, got {other:?}"),
        }
    }

    #[test]
    fn predicted_limits_eps1() {
        match predicted_limit_eps1(State::new(2.0, 1.0), State::new(0.0, 1.0), 0.5).unwrap() {
            LimitPrediction::DeltaShock(d) => {
                assert_eq!(d.sigma, 1.0);
                assert_eq!(d.u_delta, 1.5);
                assert_eq!(d.strength_rate, 2.0);
            }
            other => panic!("expected delta, got {other:?}"),
        }
        match predicted_limit_eps1(State::new(0.0, 1.0), State::new(1.0, 2.0), 0.5).unwrap() {
            LimitPrediction::ContactThenRarefaction { contact_speed, intermediate } => {
                assert_eq!(contact_speed, -0.5);
                assert!((intermediate.v - 2.0 * (-2.0_f64).exp()).abs() < 1e-14);
                assert_eq!(intermediate.u, 0.0);
            }
            other => panic!("expected contact+rarefaction, got {other:?}"),
        }
        assert!(matches!(
            predicted_limit_eps1(State::new(2.0, 1.0), State::new(1.5, 1.0), 0.5),
            Err(Error::UnsupportedCase(_))
        ));
    }

    #[test]
    fn threshold_sentinel_for_equal_densities() {
        let t = find_region_threshold(State::new(1.0, 1.0), State::new(0.0, 1.0), 0.25).unwrap();
        assert!(t.is_infinite());
    }

    #[test]
    fn threshold_region_three() {
        let left = State::new(1.0, 1.0);
        let right = State::new(0.5, 2.0);
        let t = find_region_threshold(left, right, 0.1).unwrap();
        assert!(t.is_finite() && t > 0.0);
        for f in [0.5, 0.1, 1e-3] {
            let r = solver::classify(left, right, FluxParams { eps1: t * f, eps2: 0.1 }, TIE_TOL)
                .unwrap();
            assert_eq!(r, Region4::S1S2, "eps1 = {}", t * f);
        }
        let above = solver::classify(
            left,
            right,
            FluxParams { eps1: t * 4.0, eps2: 0.1 },
            TIE_TOL,
        )
        .unwrap();
        assert_ne!(above, Region4::S1S2);
    }

    #[test]
    fn threshold_region_one() {
        let left = State::new(0.0, 1.0);
        let right = State::new(1.0, 3.0);
        let t = find_region_threshold(left, right, 0.5).unwrap();
        assert!(t.is_finite() && t > 0.0);
        for f in [0.5, 1e-2] {
            let r = solver::classify(left, right, FluxParams { eps1: t * f, eps2: 0.5 }, TIE_TOL)
                .unwrap();
            assert_eq!(r, Region4::R1R2);
        }
    }

    #[test]
    fn rate_estimation_on_synthetic_sequences() {
        let mk = |vals: &[f64], ratio: f64| -> Vec<SweepRecord> {
            vals.iter()
                .enumerate()
                .map(|(k, v)| SweepRecord {
                    eps1: 0.1 * ratio.powi(k as i32),
                    eps2: 0.0,
                    v_star: *v,
                    u_star: 0.0,
                    sigma1: 0.0,
                    sigma2: 0.0,
                    strength_surrogate: 0.0,
                    scaled_vstar: 0.0,
                    region: Region4::S1S2,
                })
                .collect()
        };
        let eps: Vec<f64> = (0..6).map(|k| 0.1 * 0.5_f64.powi(k)).collect();
        let linear: Vec<f64> = eps.iter().map(|e| 1.0 + e).collect();
        let est = estimate_limit(&mk(&linear, 0.5), RecordField::VStar).unwrap();
        assert!((est.limit - linear[5]).abs() < 1e-15);
        assert!((est.rate.unwrap() - 1.0).abs() < 1e-10);

        let sqrt: Vec<f64> = eps.iter().map(|e| 1.0 + e.sqrt()).collect();
        let est = estimate_limit(&mk(&sqrt, 0.5), RecordField::VStar).unwrap();
        assert!((est.rate.unwrap() - 0.5).abs() < 1e-10);

        let wobble = vec![1.0, 2.0, 1.5, 2.5, 1.2, 2.2];
        let est = estimate_limit(&mk(&wobble, 0.5), RecordField::VStar).unwrap();
        assert!(est.rate.is_none());

        assert!(estimate_limit(&mk(&[1.0, 2.0], 0.5), RecordField::VStar).is_err());
    }

    #[test]
    fn limit_prediction_rejects_matching_velocities() {
        assert!(predicted_limit_both(State::new(1.0, 1.0), State::new(1.0, 2.0)).is_err());
    }

    #[test]
    fn sigma_rate_of_exact_family() {
        let sch = Schedule::eps1_only(1e-1, 0.25, 10, 0.0).unwrap();
        let recs = sweep_eps1(State::new(1.0, 1.0), State::new(-1.0, 1.0), 0.0, &sch).unwrap();
        let est = estimate_limit(&recs, RecordField::Sigma1).unwrap();
        assert!(est.limit.abs() < 1e-3);
        assert!((est.rate.unwrap() - 0.5).abs() < 1e-6);
        // The identity strength = 2 + 2 sqrt(eps1) holds exactly here.
        for r in &recs {
            assert!((r.strength_surrogate - (2.0 + 2.0 * r.eps1.sqrt())).abs() < 1e-10);
            assert!((r.scaled_vstar - (1.0 + r.eps1.sqrt())).abs() < 1e-9);
        }
    }

    #[test]
    fn sweep_failures_carry_the_offending_point() {
        // Opening velocities with eps2 = 0 cavitate: no intermediate state.
        let sch = Schedule::eps1_only(1e-1, 0.25, 4, 0.0).unwrap();
        let err = sweep_eps1(State::new(-1.0, 1.0), State::new(1.0, 1.0), 0.0, &sch)
            .unwrap_err();
        match err {
            Error::SweepPoint { eps1, eps2, .. } => {
                assert_eq!(eps1, 0.1);
                assert_eq!(eps2, 0.0);
            }
            other => panic!("expected a sweep-point error, got {other}"),
        }
    }

    #[test]
    fn sweep_mode_mismatch_is_rejected() {
        let sch = Schedule::both_equal(1e-1, 0.5, 4).unwrap();
        assert!(sweep_eps1(State::new(2.0, 1.0), State::new(0.0, 1.0), 0.25, &sch).is_err());
        let sch = Schedule::eps1_only(1e-1, 0.5, 4, 0.25).unwrap();
        assert!(sweep_both(State::new(2.0, 1.0), State::new(0.0, 1.0), &sch).is_err());
    }

    #[test]
    fn csv_layout_is_fixed() {
        let recs = vec![SweepRecord {
            eps1: 0.1,
            eps2: 0.1,
            v_star: 2.0,
            u_star: 0.5,
            sigma1: -1.0,
            sigma2: 1.0,
            strength_surrogate: 4.0,
            scaled_vstar: 0.2,
            region: Region4::S1S2,
        }];
        let csv = records_to_csv(&recs);
        let mut lines = csv.lines();
        assert_eq!(lines.next().unwrap(), SWEEP_CSV_HEADER);
        assert_eq!(lines.next().unwrap(), "0.1,0.1,2,0.5,-1,1,4,0.2,S1S2");
    }
}
