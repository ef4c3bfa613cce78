//! Pointwise kernel for the perturbed system: characteristic speeds,
//! genuine-nonlinearity indicators, rarefaction and shock curves, shock
//! speeds, jump-condition residuals, and entropy checks.
//!
//! Fluxes are `f1 = u^2/2 + eps1 v^2/2` and `f2 = u v - eps2 v`. The
//! discriminant `S(v) = sqrt(eps2^2 + 4 eps1 v^2)` appears throughout.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::state::{CharPair, FluxParams, State, WaveFamily};

/// Wave-curve kinds in the phase plane, based at a left state.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CurveKind {
    R1,
    R2,
    S1,
    S2,
}

/// Which algebraic form of the shock-curve slope to evaluate.
///
/// `Midpoint` is the form consistent with the jump conditions: the slope
/// is `(eps2 -/+ S(vm)) / (2 vm)` with `vm = (v + v_base)/2`. The
/// `EndpointSum` form replaces `2 vm` by `v + v_base` inside and outside
/// the square root; it fails the jump-condition residual test and is kept
/// only for diagnostics.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SlopeForm {
    Midpoint,
    EndpointSum,
}

#[inline]
pub(crate) fn disc(v: f64, p: FluxParams) -> f64 {
    (p.eps2 * p.eps2 + 4.0 * p.eps1 * v * v).sqrt()
}

/// Flux vector `(f1, f2)` at a state.
#[inline]
pub fn flux(s: State, p: FluxParams) -> (f64, f64) {
    (
        0.5 * s.u * s.u + 0.5 * p.eps1 * s.v * s.v,
        s.u * s.v - p.eps2 * s.v,
    )
}

/// Characteristic speeds `u - eps2/2 -/+ S(v)/2`.
///
/// With `eps1 = 0` (or `v = 0`) the pair reduces exactly to
/// `(u - eps2, u)`; with both parameters zero it is the duplicate speed
/// `u` of the transport equations.
pub fn eigenvalues(s: State, p: FluxParams) -> Result<CharPair> {
    s.validate_finite()?;
    p.validate()?;
    if p.eps1 == 0.0 || s.v == 0.0 {
        return Ok(CharPair {
            lambda1: s.u - p.eps2,
            lambda2: s.u,
        });
    }
    let half = 0.5 * disc(s.v, p);
    Ok(CharPair {
        lambda1: s.u - 0.5 * p.eps2 - half,
        lambda2: s.u - 0.5 * p.eps2 + half,
    })
}

/// Genuine-nonlinearity indicators `eps1 v (2 -/+ eps2 / S(v))` for the
/// two families (minus for family 1, plus for family 2).
///
/// Both are strictly positive for `v > 0`, `eps1 > 0`, `eps2 > 0`, and the
/// prefactor makes both vanish identically when `eps1 = 0`.
pub fn genuine_nonlinearity(s: State, p: FluxParams) -> Result<(f64, f64)> {
    s.validate_finite()?;
    p.validate()?;
    if p.eps1 == 0.0 {
        return Ok((0.0, 0.0));
    }
    if s.v <= 0.0 {
        return Err(Error::NonPositiveDensity { v: s.v });
    }
    let base = p.eps1 * s.v;
    let ratio = if p.eps2 == 0.0 {
        0.0
    } else {
        p.eps2 / disc(s.v, p)
    };
    Ok((base * (2.0 - ratio), base * (2.0 + ratio)))
}

/// Rarefaction potential evaluated at `ln v`. Along a rarefaction curve
/// of the given family, `u - potential(v)` is constant.
///
/// Family 1: `(-S + eps2 ln(S + eps2)) / 2`.
/// Family 2: `( S + eps2 ln(S - eps2)) / 2`, with the log rewritten as
/// `ln(4 eps1) + 2 ln v - ln(S + eps2)` so it stays accurate as v -> 0.
///
/// Taking `ln v` rather than `v` keeps the family-2 branch meaningful even
/// when `v` itself underflows.
pub(crate) fn potential_lnv(fam: WaveFamily, ln_v: f64, p: FluxParams) -> f64 {
    if p.eps1 == 0.0 {
        // Degenerate limit: family 1 is the contact of the one-parameter
        // system (u constant), family 2 follows eps2 ln v - u = const.
        return match fam {
            WaveFamily::Back => 0.0,
            WaveFamily::Forward => p.eps2 * ln_v,
        };
    }
    let v = ln_v.exp();
    let s = disc(v, p);
    match fam {
        WaveFamily::Back => {
            let log_term = if p.eps2 > 0.0 {
                p.eps2 * (s + p.eps2).ln()
            } else {
                0.0
            };
            0.5 * (-s + log_term)
        }
        WaveFamily::Forward => {
            let log_term = if p.eps2 > 0.0 {
                p.eps2 * ((4.0 * p.eps1).ln() + 2.0 * ln_v - (s + p.eps2).ln())
            } else {
                0.0
            };
            0.5 * (s + log_term)
        }
    }
}

/// Rarefaction potential at density `v`; see [`potential_lnv`].
pub fn rarefaction_potential(fam: WaveFamily, v: f64, p: FluxParams) -> Result<f64> {
    p.validate()?;
    if !v.is_finite() {
        return Err(Error::NonFinite("density"));
    }
    if v <= 0.0 {
        return Err(Error::NonPositiveDensity { v });
    }
    Ok(potential_lnv(fam, v.ln(), p))
}

/// Shock-curve slope `du/dv` between densities `va` and `vb`.
pub fn shock_slope(fam: WaveFamily, va: f64, vb: f64, p: FluxParams, form: SlopeForm) -> f64 {
    match form {
        SlopeForm::Midpoint => {
            let vm = 0.5 * (va + vb);
            let s = disc(vm, p);
            match fam {
                WaveFamily::Back => (p.eps2 - s) / (2.0 * vm),
                WaveFamily::Forward => (p.eps2 + s) / (2.0 * vm),
            }
        }
        SlopeForm::EndpointSum => {
            let sum = va + vb;
            let s = (p.eps2 * p.eps2 + 4.0 * p.eps1 * sum * sum).sqrt();
            match fam {
                WaveFamily::Back => (p.eps2 - s) / sum,
                WaveFamily::Forward => (p.eps2 + s) / sum,
            }
        }
    }
}

fn branch_check(kind: CurveKind, v: f64, v_base: f64) -> Result<()> {
    let ok = match kind {
        CurveKind::R1 | CurveKind::S2 => v <= v_base,
        CurveKind::R2 | CurveKind::S1 => v >= v_base,
    };
    if ok {
        Ok(())
    } else {
        Err(Error::OffBranch {
            kind: match kind {
                CurveKind::R1 => "R1",
                CurveKind::R2 => "R2",
                CurveKind::S1 => "S1",
                CurveKind::S2 => "S2",
            },
            v,
            v_base,
        })
    }
}

/// Velocity on a wave curve through `left`, evaluated at density `v`,
/// using the jump-consistent shock slope.
pub fn curve_u(kind: CurveKind, left: State, v: f64, p: FluxParams) -> Result<f64> {
    curve_u_with(kind, left, v, p, SlopeForm::Midpoint)
}

/// Same as [`curve_u`] but with an explicit shock-slope form.
pub fn curve_u_with(
    kind: CurveKind,
    left: State,
    v: f64,
    p: FluxParams,
    form: SlopeForm,
) -> Result<f64> {
    left.validate_finite()?;
    p.validate()?;
    if !v.is_finite() {
        return Err(Error::NonFinite("density"));
    }
    if v <= 0.0 || left.v <= 0.0 {
        return Err(Error::NonPositiveDensity { v: v.min(left.v) });
    }
    branch_check(kind, v, left.v)?;
    match kind {
        CurveKind::R1 => Ok(left.u + potential_lnv(WaveFamily::Back, v.ln(), p)
            - potential_lnv(WaveFamily::Back, left.v.ln(), p)),
        CurveKind::R2 => Ok(left.u + potential_lnv(WaveFamily::Forward, v.ln(), p)
            - potential_lnv(WaveFamily::Forward, left.v.ln(), p)),
        CurveKind::S1 => Ok(left.u + (v - left.v) * shock_slope(WaveFamily::Back, left.v, v, p, form)),
        CurveKind::S2 => {
            Ok(left.u + (v - left.v) * shock_slope(WaveFamily::Forward, left.v, v, p, form))
        }
    }
}

/// Finite endpoint of a wave curve as v -> 0+: the R1 asymptote
/// `(-eps2 + eps2 ln(2 eps2))/2 + (u_left - potential_1(v_left))`, and the
/// S2 endpoint `u_left - (eps2 + sqrt(eps2^2 + eps1 v_left^2))`.
///
/// R2 and S1 are unbounded and rejected. For `eps2 = 0` the R1 log term is
/// replaced by its limit, zero.
pub fn curve_limit_u(kind: CurveKind, left: State, p: FluxParams) -> Result<f64> {
    left.require_positive_density()?;
    p.validate()?;
    if p.eps1 <= 0.0 {
        return Err(Error::InvalidParams {
            eps1: p.eps1,
            eps2: p.eps2,
        });
    }
    match kind {
        CurveKind::R1 => {
            let c1 = left.u - potential_lnv(WaveFamily::Back, left.v.ln(), p);
            let tail = if p.eps2 > 0.0 {
                0.5 * (-p.eps2 + p.eps2 * (2.0 * p.eps2).ln())
            } else {
                0.0
            };
            Ok(c1 + tail)
        }
        CurveKind::S2 => {
            Ok(left.u - (p.eps2 + (p.eps2 * p.eps2 + p.eps1 * left.v * left.v).sqrt()))
        }
        _ => Err(Error::InvalidInput(
            "only R1 and S2 have finite endpoints as v -> 0".into(),
        )),
    }
}

/// Shock speed from the jump condition of the second equation.
///
/// Family 1 uses `u_l + v_r (u_r - u_l)/(v_r - v_l) - eps2`, family 2 the
/// mirrored form; both are algebraically equal to the direct quotient
/// `[u v - eps2 v] / [v]`.
pub fn shock_speed(fam: WaveFamily, left: State, right: State, p: FluxParams) -> Result<f64> {
    left.validate_finite()?;
    right.validate_finite()?;
    p.validate()?;
    let dv = right.v - left.v;
    if dv == 0.0 {
        return Err(Error::DegenerateJump { v: left.v });
    }
    let du = right.u - left.u;
    Ok(match fam {
        WaveFamily::Back => left.u + right.v * du / dv - p.eps2,
        WaveFamily::Forward => right.u + left.v * du / dv - p.eps2,
    })
}

/// Jump-condition residuals `(sigma [u] - [f1], sigma [v] - [f2])` with
/// `[g] = g_right - g_left`.
pub fn rh_residual(left: State, right: State, sigma: f64, p: FluxParams) -> (f64, f64) {
    let (f1l, f2l) = flux(left, p);
    let (f1r, f2r) = flux(right, p);
    (
        sigma * (right.u - left.u) - (f1r - f1l),
        sigma * (right.v - left.v) - (f2r - f2l),
    )
}

/// Entropy check: a family-1 shock needs `sigma < lambda1(left)` and
/// `lambda1(right) < sigma < lambda2(right)`; a family-2 shock needs
/// `lambda1(left) < sigma < lambda2(left)` and `lambda2(right) < sigma`.
/// Comparisons are strict up to the tie tolerance.
pub fn lax_check(
    fam: WaveFamily,
    left: State,
    right: State,
    sigma: f64,
    p: FluxParams,
    tie: f64,
) -> bool {
    let (ll, lr) = match (eigenvalues(left, p), eigenvalues(right, p)) {
        (Ok(a), Ok(b)) => (a, b),
        _ => return false,
    };
    let lt = |a: f64, b: f64| a < b + tie;
    match fam {
        WaveFamily::Back => lt(sigma, ll.lambda1) && lt(lr.lambda1, sigma) && lt(sigma, lr.lambda2),
        WaveFamily::Forward => {
            lt(ll.lambda1, sigma) && lt(sigma, ll.lambda2) && lt(lr.lambda2, sigma)
        }
    }
}
