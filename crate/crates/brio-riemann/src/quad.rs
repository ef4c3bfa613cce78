//! Adaptive Gauss-Kronrod quadrature for small vector-valued integrands.

use crate::error::{Error, Result};

// 15-point Kronrod nodes on [-1, 1] (nonnegative half) with the embedded
// 7-point Gauss rule.
const XGK: [f64; 8] = [
    0.991455371120813,
    0.949107912342759,
    0.864864423359769,
    0.741531185599394,
    0.586087235467691,
    0.405845151377397,
    0.207784955007898,
    0.0,
];
const WGK: [f64; 8] = [
    0.022935322010529,
    0.063092092629979,
    0.104790010322250,
    0.140653259715525,
    0.169004726639267,
    0.190350578064785,
    0.204432940075298,
    0.209482141084728,
];
const WG: [f64; 4] = [
    0.129484966168870,
    0.279705391489277,
    0.381830050505119,
    0.417959183673469,
];

/// One Gauss-Kronrod panel: returns the Kronrod estimate and the
/// difference against the embedded Gauss value per component.
fn gk15<const N: usize, F>(f: &F, a: f64, b: f64) -> ([f64; N], [f64; N])
where
    F: Fn(f64) -> [f64; N],
{
    let half = 0.5 * (b - a);
    let mid = 0.5 * (a + b);
    let mut kron = [0.0; N];
    let mut gauss = [0.0; N];
    for (i, (&x, &wk)) in XGK.iter().zip(WGK.iter()).enumerate() {
        let scaled = half * x;
        let acc = if x == 0.0 {
            f(mid)
        } else {
            let lo = f(mid - scaled);
            let hi = f(mid + scaled);
            std::array::from_fn(|j| lo[j] + hi[j])
        };
        for j in 0..N {
            kron[j] += wk * acc[j];
        }
        // Odd Kronrod indices carry the embedded Gauss nodes.
        if i % 2 == 1 {
            let wg = WG[i / 2];
            for j in 0..N {
                gauss[j] += wg * acc[j];
            }
        }
    }
    let mut err = [0.0; N];
    for j in 0..N {
        kron[j] *= half;
        gauss[j] *= half;
        err[j] = (kron[j] - gauss[j]).abs();
    }
    (kron, err)
}

/// Adaptive integration of an `N`-vector integrand over `[a, b]` to the
/// absolute tolerance `tol` per component.
pub fn integrate<const N: usize, F>(f: &F, a: f64, b: f64, tol: f64) -> Result<[f64; N]>
where
    F: Fn(f64) -> [f64; N],
{
    if a == b {
        return Ok([0.0; N]);
    }
    let mut total = [0.0; N];
    // (left, right, tolerance share, depth)
    let mut stack = vec![(a, b, tol, 0u32)];
    let mut panels = 0usize;
    while let Some((lo, hi, t, depth)) = stack.pop() {
        panels += 1;
        if panels > 200_000 {
            return Err(Error::QuadratureFailure(format!(
                "panel budget exhausted on [{a}, {b}] (tol = {tol})"
            )));
        }
        let (val, err) = gk15(f, lo, hi);
        let worst = err.iter().cloned().fold(0.0_f64, f64::max);
        if worst <= t || depth >= 48 {
            if depth >= 48 && worst > t.max(1e3 * f64::EPSILON) {
                return Err(Error::QuadratureFailure(format!(
                    "refinement limit hit on [{lo}, {hi}] with error {worst} > {t}"
                )));
            }
            for j in 0..N {
                total[j] += val[j];
            }
        } else {
            let mid = 0.5 * (lo + hi);
            stack.push((lo, mid, 0.5 * t, depth + 1));
            stack.push((mid, hi, 0.5 * t, depth + 1));
        }
    }
    Ok(total)
}
