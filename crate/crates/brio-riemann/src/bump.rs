//! Compactly supported smooth test functions on elliptical supports.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A smooth bump `phi(x,t) = exp(1 - 1/(1 - rho^2))` on the ellipse
/// `rho^2 = ((x-x0)/rx)^2 + ((t-t0)/rt)^2 < 1`, zero outside, with
/// `phi(center) = 1`. The support sits strictly inside `t > 0`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BumpTestFn {
    pub center: (f64, f64),
    pub radii: (f64, f64),
}

/// Builds a bump; the support must not touch `t <= 0`.
pub fn make_bump(center: (f64, f64), radii: (f64, f64)) -> Result<BumpTestFn> {
    let (x0, t0) = center;
    let (rx, rt) = radii;
    if !(x0.is_finite() && t0.is_finite() && rx.is_finite() && rt.is_finite()) {
        return Err(Error::NonFinite("bump parameters"));
    }
    if !(rx > 0.0 && rt > 0.0) {
        return Err(Error::InvalidInput(format!("bump radii must be positive, got ({rx}, {rt})")));
    }
    if t0 - rt <= 0.0 {
        return Err(Error::InvalidInput(format!(
            "bump support touches t <= 0 (t0 = {t0}, rt = {rt})"
        )));
    }
    Ok(BumpTestFn { center, radii })
}

// Below this distance to the support boundary the profile underflows and
// the derivative prefactors blow up; clip to zero there.
const EDGE: f64 = 1e-13;

impl BumpTestFn {
    #[inline]
    fn rho2(&self, x: f64, t: f64) -> f64 {
        let dx = (x - self.center.0) / self.radii.0;
        let dt = (t - self.center.1) / self.radii.1;
        dx * dx + dt * dt
    }

    /// phi(x, t).
    pub fn value(&self, x: f64, t: f64) -> f64 {
        let r2 = self.rho2(x, t);
        if r2 >= 1.0 - EDGE {
            return 0.0;
        }
        (1.0 - 1.0 / (1.0 - r2)).exp()
    }

    /// d phi / dx.
    pub fn dx(&self, x: f64, t: f64) -> f64 {
        let r2 = self.rho2(x, t);
        if r2 >= 1.0 - EDGE {
            return 0.0;
        }
        let den = 1.0 - r2;
        let phi = (1.0 - 1.0 / den).exp();
        let dr2 = 2.0 * (x - self.center.0) / (self.radii.0 * self.radii.0);
        -phi * dr2 / (den * den)
    }

    /// d phi / dt.
    pub fn dt(&self, x: f64, t: f64) -> f64 {
        let r2 = self.rho2(x, t);
        if r2 >= 1.0 - EDGE {
            return 0.0;
        }
        let den = 1.0 - r2;
        let phi = (1.0 - 1.0 / den).exp();
        let dr2 = 2.0 * (t - self.center.1) / (self.radii.1 * self.radii.1);
        -phi * dr2 / (den * den)
    }

    /// Time extent of the support.
    pub fn t_range(&self) -> (f64, f64) {
        (self.center.1 - self.radii.1, self.center.1 + self.radii.1)
    }

    /// Spatial extent of the support.
    pub fn x_range(&self) -> (f64, f64) {
        (self.center.0 - self.radii.0, self.center.0 + self.radii.0)
    }

    /// Hull of `x/t` over the support (using the bounding box; the bump
    /// vanishes on the padding).
    pub fn xi_range(&self) -> (f64, f64) {
        let (x_lo, x_hi) = self.x_range();
        let (t_lo, t_hi) = self.t_range();
        let corners = [x_lo / t_lo, x_lo / t_hi, x_hi / t_lo, x_hi / t_hi];
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for c in corners {
            lo = lo.min(c);
            hi = hi.max(c);
        }
        (lo, hi)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn peak_and_support() {
        let b = make_bump((0.0, 1.0), (1.0, 0.5)).unwrap();
        assert_eq!(b.value(0.0, 1.0), 1.0);
        assert_eq!(b.value(1.0, 1.0), 0.0);
        assert_eq!(b.value(0.0, 0.5), 0.0);
        assert_eq!(b.value(5.0, 5.0), 0.0);
    }

    #[test]
    fn interior_value() {
        let b = make_bump((0.0, 1.0), (1.0, 0.5)).unwrap();
        let expect = (-1.0_f64 / 3.0).exp();
        assert!((b.value(0.5, 1.0) - expect).abs() < 1e-12);
    }

    #[test]
    fn rejects_support_touching_initial_time() {
        assert!(make_bump((0.0, 0.5), (1.0, 0.5)).is_err());
        assert!(make_bump((0.0, 0.5), (1.0, 0.6)).is_err());
        assert!(make_bump((0.0, 1.0), (-1.0, 0.5)).is_err());
    }

    #[test]
    fn derivatives_match_finite_differences() {
        let b = make_bump((0.3, 1.1), (0.8, 0.4)).unwrap();
        let h = 1e-6;
        for (x, t) in [(0.4, 1.0), (0.0, 1.2), (0.9, 1.3)] {
            let fd_x = (b.value(x + h, t) - b.value(x - h, t)) / (2.0 * h);
            let fd_t = (b.value(x, t + h) - b.value(x, t - h)) / (2.0 * h);
            assert!((b.dx(x, t) - fd_x).abs() < 1e-6, "dx at ({x},{t})");
            assert!((b.dt(x, t) - fd_t).abs() < 1e-6, "dt at ({x},{t})");
        }
    }

    #[test]
    fn no_nan_near_edge() {
        let b = make_bump((0.0, 1.0), (1.0, 0.5)).unwrap();
        for f in [0.9, 0.99, 0.999999, 1.0 - 1e-14] {
            assert!(b.value(f, 1.0).is_finite());
            assert!(b.dx(f, 1.0).is_finite());
            assert!(b.dt(f, 1.0).is_finite());
        }
    }
}
