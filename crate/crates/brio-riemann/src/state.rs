//! Phase-plane states, flux parameters, and characteristic speeds.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Absolute comparison tolerance for exact-value checks.
pub const ABS_TOL: f64 = 1e-12;
/// Relative comparison tolerance for exact-value checks.
pub const REL_TOL: f64 = 1e-10;
/// Tie tolerance for classification and zero-strength wave suppression.
pub const TIE_TOL: f64 = 1e-12;

/// A point in the phase plane: velocity `u` and density `v`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct State {
    pub u: f64,
    pub v: f64,
}

impl State {
    pub fn new(u: f64, v: f64) -> Self {
        State { u, v }
    }

    pub fn validate_finite(&self) -> Result<()> {
        if self.u.is_finite() && self.v.is_finite() {
            Ok(())
        } else {
            Err(Error::NonFinite("state"))
        }
    }

    /// Valid for the strictly hyperbolic system: v must be positive.
    pub fn require_positive_density(&self) -> Result<()> {
        self.validate_finite()?;
        if self.v > 0.0 {
            Ok(())
        } else {
            Err(Error::NonPositiveDensity { v: self.v })
        }
    }

    /// Valid for the transport system: vacuum (v = 0) is allowed.
    pub fn require_nonnegative_density(&self) -> Result<()> {
        self.validate_finite()?;
        if self.v >= 0.0 {
            Ok(())
        } else {
            Err(Error::NegativeDensity { v: self.v })
        }
    }

    /// True when both components agree within the tie tolerance.
    pub fn close_to(&self, other: &State, tie: f64) -> bool {
        (self.u - other.u).abs() <= tie * (1.0 + self.u.abs().max(other.u.abs()))
            && (self.v - other.v).abs() <= tie * (1.0 + self.v.abs().max(other.v.abs()))
    }
}

/// The two flux coefficients. `(0, 0)` selects the transport equations,
/// `eps1 = 0, eps2 > 0` the one-parameter system, and both positive the
/// full perturbed system.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FluxParams {
    pub eps1: f64,
    pub eps2: f64,
}

impl FluxParams {
    pub fn new(eps1: f64, eps2: f64) -> Result<Self> {
        let p = FluxParams { eps1, eps2 };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.eps1.is_finite() && self.eps2.is_finite())
            || self.eps1 < 0.0
            || self.eps2 < 0.0
        {
            return Err(Error::InvalidParams {
                eps1: self.eps1,
                eps2: self.eps2,
            });
        }
        Ok(())
    }

    pub fn system(&self) -> SystemKind {
        if self.eps1 > 0.0 {
            SystemKind::Perturbed
        } else if self.eps2 > 0.0 {
            SystemKind::SingleParameter
        } else {
            SystemKind::Transport
        }
    }
}

/// Which of the three systems a parameter pair selects.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SystemKind {
    Transport,
    SingleParameter,
    Perturbed,
}

/// Characteristic family: `Back` is family 1, `Forward` is family 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum WaveFamily {
    Back,
    Forward,
}

/// The two characteristic speeds at a state, `lambda1 <= lambda2`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CharPair {
    pub lambda1: f64,
    pub lambda2: f64,
}
