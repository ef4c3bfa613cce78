//! Exact Riemann solvers for the two limiting systems: the transport
//! equations (both parameters zero) and the one-parameter system
//! (`eps1 = 0, eps2 > 0`).

use crate::error::{Error, Result};
use crate::state::{FluxParams, State, TIE_TOL};
use crate::wave::{Region3, RiemannSolution, Wave};

/// Region of the right state relative to a left state for the
/// one-parameter system. Boundaries are closed toward the degenerate side:
/// `u_r = u_l` falls in II (the following wave has zero strength) and
/// `u_r = u_l - 2 eps2` in III.
pub fn region3_of(left: State, right: State, eps2: f64) -> Result<Region3> {
    left.require_positive_density()?;
    right.require_positive_density()?;
    if !(eps2 > 0.0 && eps2.is_finite()) {
        return Err(Error::InvalidParams { eps1: 0.0, eps2 });
    }
    Ok(if right.u > left.u {
        Region3::I
    } else if right.u <= left.u - 2.0 * eps2 {
        Region3::III
    } else {
        Region3::II
    })
}

/// Transport equations: two contacts with a vacuum fan in between when the
/// velocities open up, a delta shock when they cross, a single contact when
/// they match.
pub fn solve_transport(left: State, right: State) -> Result<RiemannSolution> {
    left.require_nonnegative_density()?;
    right.require_nonnegative_density()?;
    let params = FluxParams { eps1: 0.0, eps2: 0.0 };
    if left == right {
        return Ok(RiemannSolution::constant(left, params));
    }
    let waves = if left.u < right.u {
        vec![
            Wave::Contact {
                sigma: left.u,
                left,
                right: State::new(left.u, 0.0),
            },
            Wave::VacuumFan {
                head: left.u,
                tail: right.u,
            },
            Wave::Contact {
                sigma: right.u,
                left: State::new(right.u, 0.0),
                right,
            },
        ]
    } else if left.u > right.u {
        let sigma = 0.5 * (left.u + right.u);
        vec![Wave::DeltaShock {
            sigma,
            u_delta: sigma,
            strength_rate: 0.5 * (left.v + right.v) * (left.u - right.u),
        }]
    } else {
        vec![Wave::Contact {
            sigma: left.u,
            left,
            right,
        }]
    };
    Ok(RiemannSolution {
        left,
        right,
        params,
        waves,
        intermediate: None,
        region: None,
    })
}

/// One-parameter system: contact followed by a rarefaction (region I) or a
/// shock (region II), or a delta shock (region III).
pub fn solve_single_param(left: State, right: State, eps2: f64) -> Result<RiemannSolution> {
    let region = region3_of(left, right, eps2)?;
    let params = FluxParams { eps1: 0.0, eps2 };
    if left == right {
        return Ok(RiemannSolution::constant(left, params));
    }
    let d = left.u - right.u;
    let mut waves = Vec::with_capacity(2);
    let intermediate;
    match region {
        Region3::I => {
            let v_star = right.v * (d / eps2).exp();
            let mid = State::new(left.u, v_star);
            if !left.close_to(&mid, TIE_TOL) {
                waves.push(Wave::Contact {
                    sigma: left.u - eps2,
                    left,
                    right: mid,
                });
            }
            waves.push(Wave::Rarefaction {
                family: crate::state::WaveFamily::Forward,
                left: mid,
                right,
                head: mid.u,
                tail: right.u,
            });
            intermediate = if waves.len() == 2 { Some(mid) } else { None };
        }
        Region3::II => {
            if d.abs() <= TIE_TOL * (1.0 + left.u.abs()) {
                // Matching velocities: a single contact carries the v jump.
                waves.push(Wave::Contact {
                    sigma: left.u - eps2,
                    left,
                    right,
                });
                intermediate = None;
            } else {
                let v_star = right.v * (d + 2.0 * eps2) / (-d + 2.0 * eps2);
                let mid = State::new(left.u, v_star);
                if !left.close_to(&mid, TIE_TOL) {
                    waves.push(Wave::Contact {
                        sigma: left.u - eps2,
                        left,
                        right: mid,
                    });
                }
                waves.push(Wave::Shock {
                    family: crate::state::WaveFamily::Forward,
                    left: mid,
                    right,
                    sigma: 0.5 * (left.u + right.u),
                });
                intermediate = if waves.len() == 2 { Some(mid) } else { None };
            }
        }
        Region3::III => {
            let sigma = 0.5 * (left.u + right.u);
            waves.push(Wave::DeltaShock {
                sigma,
                u_delta: sigma + eps2,
                strength_rate: 0.5
                    * (right.v * (d + 2.0 * eps2) - left.v * (-d + 2.0 * eps2)),
            });
            intermediate = None;
        }
    }
    Ok(RiemannSolution {
        left,
        right,
        params,
        waves,
        intermediate,
        region: None,
    })
}

/// Position and strength of a delta shock at time `t`: between constant
/// states the generalized jump-condition ODEs have constant right-hand
/// sides, so the evolution is linear.
pub fn grh_evolve(sigma: f64, strength_rate: f64, t: f64) -> Result<(f64, f64)> {
    if !(t >= 0.0 && t.is_finite()) {
        return Err(Error::InvalidInput(format!("time must be nonnegative, got {t}")));
    }
    Ok((sigma * t, strength_rate * t))
}
