//! Bracketed scalar root finding.

use crate::error::{Error, Result};

/// Bisection on `[lo, hi]`; `f(lo)` and `f(hi)` must have opposite signs
/// (or be zero). Stops when the bracket width drops below
/// `tol * (1 + |mid|)` or after `max_iter` halvings.
pub fn bisect<F>(mut lo: f64, mut hi: f64, f: F, tol: f64, max_iter: usize) -> Result<f64>
where
    F: Fn(f64) -> f64,
{
    let flo = f(lo);
    let fhi = f(hi);
    if flo == 0.0 {
        return Ok(lo);
    }
    if fhi == 0.0 {
        return Ok(hi);
    }
    if flo.signum() == fhi.signum() {
        return Err(Error::BracketFailure(format!(
            "f({lo}) = {flo} and f({hi}) = {fhi} have the same sign"
        )));
    }
    let sign_lo = flo.signum();
    for _ in 0..max_iter {
        let mid = 0.5 * (lo + hi);
        if (hi - lo).abs() <= tol * (1.0 + mid.abs()) {
            return Ok(mid);
        }
        let fm = f(mid);
        if fm == 0.0 {
            return Ok(mid);
        }
        if fm.signum() == sign_lo {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Err(Error::Convergence(format!(
        "bisection stalled on [{lo}, {hi}] after {max_iter} iterations"
    )))
}

/// Doubles `hi` starting from `start` until `f(hi)` changes sign relative
/// to `f_ref_sign` (the sign at the lower end), up to `max_doublings`.
pub fn expand_upper<F>(start: f64, f: &F, f_ref_sign: f64, max_doublings: usize) -> Result<f64>
where
    F: Fn(f64) -> f64,
{
    let mut hi = start;
    for _ in 0..max_doublings {
        let fv = f(hi);
        if fv == 0.0 || fv.signum() != f_ref_sign {
            return Ok(hi);
        }
        hi *= 2.0;
        if !hi.is_finite() {
            break;
        }
    }
    Err(Error::BracketFailure(format!(
        "no sign change while doubling from {start}"
    )))
}
