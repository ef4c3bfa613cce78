//! Waves, Riemann solutions, and delta-shock descriptors.

use serde::{Deserialize, Serialize};

use crate::state::{FluxParams, State, SystemKind, WaveFamily};

/// The four solution configurations of the strictly hyperbolic system.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Region4 {
    R1R2,
    S1R2,
    R1S2,
    S1S2,
}

impl std::fmt::Display for Region4 {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Region4::R1R2 => "R1R2",
            Region4::S1R2 => "S1R2",
            Region4::R1S2 => "R1S2",
            Region4::S1S2 => "S1S2",
        })
    }
}

/// The three data regions of the one-parameter system: `I` gives a contact
/// followed by a rarefaction, `II` a contact followed by a shock, `III` a
/// delta shock.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Region3 {
    I,
    II,
    III,
}

/// One wave of a self-similar solution fan.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Wave {
    Rarefaction {
        family: WaveFamily,
        left: State,
        right: State,
        /// Speed of the leading (leftmost) edge of the fan.
        head: f64,
        /// Speed of the trailing edge.
        tail: f64,
    },
    Shock {
        family: WaveFamily,
        left: State,
        right: State,
        sigma: f64,
    },
    Contact {
        sigma: f64,
        left: State,
        right: State,
    },
    DeltaShock {
        sigma: f64,
        u_delta: f64,
        /// The strength grows linearly in time: w(t) = strength_rate * t.
        strength_rate: f64,
    },
    /// Vacuum region with v = 0 and u = xi between two contacts.
    VacuumFan { head: f64, tail: f64 },
}

impl Wave {
    /// Closed speed interval occupied by the wave.
    pub fn speed_range(&self) -> (f64, f64) {
        match *self {
            Wave::Rarefaction { head, tail, .. } => (head, tail),
            Wave::Shock { sigma, .. } => (sigma, sigma),
            Wave::Contact { sigma, .. } => (sigma, sigma),
            Wave::DeltaShock { sigma, .. } => (sigma, sigma),
            Wave::VacuumFan { head, tail } => (head, tail),
        }
    }

    pub fn is_delta(&self) -> bool {
        matches!(self, Wave::DeltaShock { .. })
    }
}

/// A complete self-similar Riemann solution: an ordered fan of waves
/// between the two data states.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RiemannSolution {
    pub left: State,
    pub right: State,
    pub params: FluxParams,
    pub waves: Vec<Wave>,
    /// Present exactly when the fan has two waves and no delta shock.
    pub intermediate: Option<State>,
    /// Present for solutions of the strictly hyperbolic system.
    pub region: Option<Region4>,
}

impl RiemannSolution {
    pub fn constant(state: State, params: FluxParams) -> Self {
        RiemannSolution {
            left: state,
            right: state,
            params,
            waves: Vec::new(),
            intermediate: None,
            region: None,
        }
    }

    pub fn has_delta(&self) -> bool {
        self.waves.iter().any(Wave::is_delta)
    }

    /// Extracts the delta-shock descriptor if the fan carries one.
    pub fn delta(&self) -> Option<DeltaShockSolution> {
        self.waves.iter().find_map(|w| match *w {
            Wave::DeltaShock {
                sigma,
                u_delta,
                strength_rate,
            } => Some(DeltaShockSolution {
                sigma,
                u_delta,
                strength_rate,
                left: self.left,
                right: self.right,
            }),
            _ => None,
        })
    }

    /// All wave-edge speeds, left to right.
    pub fn speeds(&self) -> Vec<f64> {
        let mut out = Vec::with_capacity(2 * self.waves.len());
        for w in &self.waves {
            let (a, b) = w.speed_range();
            out.push(a);
            if b != a {
                out.push(b);
            }
        }
        out
    }

    pub fn min_speed(&self) -> Option<f64> {
        self.waves.first().map(|w| w.speed_range().0)
    }

    pub fn max_speed(&self) -> Option<f64> {
        self.waves.last().map(|w| w.speed_range().1)
    }

    /// Checks that wave speed intervals are ordered left to right, with
    /// overlap up to `tie` at shared endpoints.
    pub fn ordered(&self, tie: f64) -> bool {
        self.waves
            .windows(2)
            .all(|w| w[0].speed_range().1 <= w[1].speed_range().0 + tie)
    }
}

/// A delta shock: a discontinuity at x = sigma t carrying density mass
/// w(t) = strength_rate * t, with velocity u_delta on the discontinuity.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DeltaShockSolution {
    pub sigma: f64,
    pub u_delta: f64,
    pub strength_rate: f64,
    pub left: State,
    pub right: State,
}

impl DeltaShockSolution {
    /// Entropy admissibility for the system selected by `sys`:
    /// transport needs `u_right < sigma < u_left`, the one-parameter system
    /// needs `u_left - eps2 >= sigma >= u_right + eps2` (up to `tie`).
    pub fn entropy_satisfied(&self, sys: SystemKind, eps2: f64, tie: f64) -> bool {
        match sys {
            SystemKind::Transport => {
                self.right.u < self.sigma + tie && self.sigma < self.left.u + tie
            }
            SystemKind::SingleParameter => {
                self.right.u + eps2 <= self.sigma + tie
                    && self.sigma <= self.left.u - eps2 + tie
            }
            SystemKind::Perturbed => false,
        }
    }

    /// Wraps the descriptor as a one-wave Riemann solution.
    pub fn into_solution(self, params: FluxParams) -> RiemannSolution {
        RiemannSolution {
            left: self.left,
            right: self.right,
            params,
            waves: vec![Wave::DeltaShock {
                sigma: self.sigma,
                u_delta: self.u_delta,
                strength_rate: self.strength_rate,
            }],
            intermediate: None,
            region: None,
        }
    }
}

/// Result of sampling a solution at a similarity coordinate.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SampleResult {
    State(State),
    Delta {
        sigma: f64,
        u_delta: f64,
        strength_rate: f64,
    },
}

impl SampleResult {
    pub fn state(&self) -> Option<State> {
        match *self {
            SampleResult::State(s) => Some(s),
            SampleResult::Delta { .. } => None,
        }
    }
}
