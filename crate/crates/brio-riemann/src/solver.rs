//! Riemann solver for the strictly hyperbolic system: phase-plane
//! classification, intermediate-state root finding, fan assembly, and
//! self-similar sampling.

use crate::error::{Error, Result};
use crate::kernel::{self, CurveKind, SlopeForm};
use crate::roots;
use crate::state::{FluxParams, State, WaveFamily, TIE_TOL};
use crate::wave::{Region4, RiemannSolution, SampleResult, Wave};

const MAX_ITER: usize = 200;

fn validate_riemann_data(left: State, right: State, p: FluxParams) -> Result<()> {
    p.validate()?;
    if p.eps1 <= 0.0 {
        return Err(Error::InvalidParams {
            eps1: p.eps1,
            eps2: p.eps2,
        });
    }
    left.require_positive_density()?;
    right.require_positive_density()?;
    Ok(())
}

/// Locates the right state relative to the wave curves through the left
/// state. On-curve ties (within `tie`) resolve toward the configuration
/// whose extra wave has zero strength.
pub fn classify(left: State, right: State, p: FluxParams, tie: f64) -> Result<Region4> {
    validate_riemann_data(left, right, p)?;
    let dv = right.v - left.v;
    if dv.abs() <= tie * (1.0 + left.v.abs()) {
        return Ok(if right.u >= left.u {
            Region4::R1R2
        } else {
            Region4::S1S2
        });
    }
    if dv > 0.0 {
        let u_r2 = kernel::curve_u(CurveKind::R2, left, right.v, p)?;
        let u_s1 = kernel::curve_u(CurveKind::S1, left, right.v, p)?;
        if right.u >= u_r2 - tie * (1.0 + u_r2.abs()) {
            Ok(Region4::R1R2)
        } else if right.u <= u_s1 + tie * (1.0 + u_s1.abs()) {
            Ok(Region4::S1S2)
        } else {
            Ok(Region4::S1R2)
        }
    } else {
        let u_r1 = kernel::curve_u(CurveKind::R1, left, right.v, p)?;
        let u_s2 = kernel::curve_u(CurveKind::S2, left, right.v, p)?;
        if right.u >= u_r1 - tie * (1.0 + u_r1.abs()) {
            Ok(Region4::R1R2)
        } else if right.u <= u_s2 + tie * (1.0 + u_s2.abs()) {
            Ok(Region4::S1S2)
        } else {
            Ok(Region4::R1S2)
        }
    }
}

/// Velocity reached from `left` along the family-1 curve of the region.
fn u_from_left(region: Region4, left: State, v: f64, p: FluxParams) -> f64 {
    match region {
        Region4::R1R2 | Region4::R1S2 => {
            left.u + kernel::potential_lnv(WaveFamily::Back, v.ln(), p)
                - kernel::potential_lnv(WaveFamily::Back, left.v.ln(), p)
        }
        Region4::S1R2 | Region4::S1S2 => {
            left.u + (v - left.v) * kernel::shock_slope(WaveFamily::Back, left.v, v, p, SlopeForm::Midpoint)
        }
    }
}

/// Velocity required at density `v` so that the family-2 wave reaches
/// `right`.
fn u_from_right(region: Region4, right: State, v: f64, p: FluxParams) -> f64 {
    match region {
        Region4::R1R2 | Region4::S1R2 => {
            right.u + kernel::potential_lnv(WaveFamily::Forward, v.ln(), p)
                - kernel::potential_lnv(WaveFamily::Forward, right.v.ln(), p)
        }
        Region4::R1S2 | Region4::S1S2 => {
            right.u
                + (v - right.v)
                    * kernel::shock_slope(WaveFamily::Forward, right.v, v, p, SlopeForm::Midpoint)
        }
    }
}

/// Solves for the intermediate state between the two waves.
///
/// The mismatch between the family-1 and family-2 curve velocities is
/// strictly monotone in the intermediate density, so a bracketed bisection
/// is reliable. For two rarefactions the root is located in `ln v`: the
/// mismatch is asymptotically linear in `ln v` there and the root can sit
/// far below the bottom of the normal floating-point range.
pub fn solve_intermediate(
    left: State,
    right: State,
    p: FluxParams,
    tol: f64,
) -> Result<(State, Region4)> {
    let region = classify(left, right, p, TIE_TOL)?;
    if tol <= 0.0 || tol.is_nan() {
        return Err(Error::InvalidInput(format!("tolerance must be positive, got {tol}")));
    }
    let v_star = match region {
        Region4::R1R2 => {
            let f = |w: f64| {
                (left.u + kernel::potential_lnv(WaveFamily::Back, w, p)
                    - kernel::potential_lnv(WaveFamily::Back, left.v.ln(), p))
                    - (right.u + kernel::potential_lnv(WaveFamily::Forward, w, p)
                        - kernel::potential_lnv(WaveFamily::Forward, right.v.ln(), p))
            };
            let w_hi = left.v.min(right.v).ln();
            let f_hi = f(w_hi);
            if f_hi >= 0.0 {
                // Right state on (or numerically at) the rarefaction curve
                // through the left state: zero-strength first or second wave.
                if f_hi <= 1e-9 * (1.0 + left.u.abs() + right.u.abs()) {
                    left.v.min(right.v)
                } else {
                    return Err(Error::Convergence(format!(
                        "two-rarefaction mismatch positive at the bracket top (f = {f_hi})"
                    )));
                }
            } else {
                if p.eps2 == 0.0 {
                    // Straight-line curves: intersection at positive density
                    // exists only below the cavitation threshold.
                    let gap = (right.u - left.u) - p.eps1.sqrt() * (left.v + right.v);
                    if gap >= 0.0 {
                        return Err(Error::NoIntersection(format!(
                            "data admit no positive intermediate density for eps2 = 0 \
                             (velocity gap exceeds threshold by {gap})"
                        )));
                    }
                }
                let mut offset = 16.0;
                let mut w_lo = w_hi - offset;
                let mut found = false;
                for _ in 0..70 {
                    if f(w_lo) >= 0.0 {
                        found = true;
                        break;
                    }
                    offset *= 2.0;
                    w_lo = w_hi - offset;
                }
                if !found {
                    return Err(Error::BracketFailure(
                        "two-rarefaction mismatch never changed sign toward v -> 0".into(),
                    ));
                }
                let w = roots::bisect(w_lo, w_hi, f, tol, MAX_ITER)?;
                w.exp()
            }
        }
        Region4::S1R2 => {
            let f = |v: f64| u_from_left(region, left, v, p) - u_from_right(region, right, v, p);
            roots::bisect(left.v, right.v, f, tol, MAX_ITER)?
        }
        Region4::R1S2 => {
            let f = |v: f64| u_from_left(region, left, v, p) - u_from_right(region, right, v, p);
            roots::bisect(right.v, left.v, f, tol, MAX_ITER)?
        }
        Region4::S1S2 => {
            let f = |v: f64| u_from_left(region, left, v, p) - u_from_right(region, right, v, p);
            let lo = left.v.max(right.v);
            let f_lo = f(lo);
            if f_lo <= 0.0 {
                lo
            } else {
                let hi = roots::expand_upper(lo + 1.0, &f, f_lo.signum(), 1024)?;
                roots::bisect(lo, hi, f, tol, MAX_ITER)?
            }
        }
    };
    let u_star = u_from_left(region, left, v_star, p);
    Ok((State::new(u_star, v_star), region))
}

/// Builds the full two-wave solution. Zero-strength waves (right state on
/// a wave curve) are suppressed, so on-curve data yield one-wave fans.
pub fn solve_riemann(
    left: State,
    right: State,
    p: FluxParams,
    tol: f64,
) -> Result<RiemannSolution> {
    validate_riemann_data(left, right, p)?;
    if left == right {
        return Ok(RiemannSolution::constant(left, p));
    }
    let (mid, region) = solve_intermediate(left, right, p, tol)?;
    let mut waves = Vec::with_capacity(2);

    if !left.close_to(&mid, TIE_TOL) {
        let wave = match region {
            Region4::R1R2 | Region4::R1S2 => Wave::Rarefaction {
                family: WaveFamily::Back,
                left,
                right: mid,
                head: kernel::eigenvalues(left, p)?.lambda1,
                tail: kernel::eigenvalues(mid, p)?.lambda1,
            },
            Region4::S1R2 | Region4::S1S2 => Wave::Shock {
                family: WaveFamily::Back,
                left,
                right: mid,
                sigma: kernel::shock_speed(WaveFamily::Back, left, mid, p)?,
            },
        };
        waves.push(wave);
    }
    if !mid.close_to(&right, TIE_TOL) {
        let wave = match region {
            Region4::R1R2 | Region4::S1R2 => Wave::Rarefaction {
                family: WaveFamily::Forward,
                left: mid,
                right,
                head: kernel::eigenvalues(mid, p)?.lambda2,
                tail: kernel::eigenvalues(right, p)?.lambda2,
            },
            Region4::R1S2 | Region4::S1S2 => Wave::Shock {
                family: WaveFamily::Forward,
                left: mid,
                right,
                sigma: kernel::shock_speed(WaveFamily::Forward, mid, right, p)?,
            },
        };
        waves.push(wave);
    }
    let intermediate = if waves.len() == 2 { Some(mid) } else { None };
    Ok(RiemannSolution {
        left,
        right,
        params: p,
        waves,
        intermediate,
        region: Some(region),
    })
}

/// Density at similarity coordinate `xi` inside a rarefaction fan, found
/// by inverting the characteristic speed along the wave curve.
fn invert_fan(
    family: WaveFamily,
    fan_left: State,
    fan_right: State,
    p: FluxParams,
    xi: f64,
) -> State {
    if p.eps1 == 0.0 {
        // Family-2 fan of the one-parameter system: xi = u along the fan
        // and eps2 ln v - u stays constant.
        let u = xi.clamp(fan_left.u.min(fan_right.u), fan_left.u.max(fan_right.u));
        let v = fan_left.v * ((u - fan_left.u) / p.eps2).exp();
        return State::new(u, v);
    }
    let base_pot = kernel::potential_lnv(family, fan_left.v.ln(), p);
    let state_at = |v: f64| {
        let u = fan_left.u + kernel::potential_lnv(family, v.ln(), p) - base_pot;
        State::new(u, v)
    };
    let speed_at = |v: f64| {
        let s = state_at(v);
        let c = kernel::eigenvalues(s, p).expect("fan states are finite");
        match family {
            WaveFamily::Back => c.lambda1 - xi,
            WaveFamily::Forward => c.lambda2 - xi,
        }
    };
    let (lo, hi) = (
        fan_left.v.min(fan_right.v),
        fan_left.v.max(fan_right.v),
    );
    match roots::bisect(lo, hi, speed_at, 1e-12, MAX_ITER) {
        Ok(v) => state_at(v),
        // xi numerically at a fan edge: fall back to the nearer endpoint.
        Err(_) => {
            if speed_at(lo).abs() <= speed_at(hi).abs() {
                state_at(lo)
            } else {
                state_at(hi)
            }
        }
    }
}

/// Evaluates a solution at `xi = x/t`. A `xi` exactly equal to a
/// delta-shock speed returns the delta marker.
pub fn sample(sol: &RiemannSolution, xi: f64) -> SampleResult {
    let mut current = sol.left;
    for wave in &sol.waves {
        let (lo, hi) = wave.speed_range();
        if xi < lo {
            return SampleResult::State(current);
        }
        match *wave {
            Wave::Rarefaction {
                family,
                left,
                right,
                ..
            } => {
                if xi <= hi {
                    return SampleResult::State(invert_fan(family, left, right, sol.params, xi));
                }
                current = right;
            }
            Wave::Shock { right, .. } | Wave::Contact { right, .. } => {
                current = right;
            }
            Wave::DeltaShock {
                sigma,
                u_delta,
                strength_rate,
            } => {
                if xi == sigma {
                    return SampleResult::Delta {
                        sigma,
                        u_delta,
                        strength_rate,
                    };
                }
                current = sol.right;
            }
            Wave::VacuumFan { tail, .. } => {
                if xi <= tail {
                    return SampleResult::State(State::new(xi, 0.0));
                }
                current = State::new(tail, 0.0);
            }
        }
    }
    SampleResult::State(current)
}
