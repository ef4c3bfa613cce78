//! Structural and algebraic invariants beyond the acceptance gate.

use proptest::prelude::*;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use brio_riemann::bump::make_bump;
use brio_riemann::kernel::{curve_u, eigenvalues, rarefaction_potential, CurveKind};
use brio_riemann::limit_models::{solve_single_param, solve_transport};
use brio_riemann::solver::{classify, sample, solve_riemann};
use brio_riemann::state::TIE_TOL;
use brio_riemann::sweep::{sweep_both, Schedule};
use brio_riemann::weak::weak_residual;
use brio_riemann::{FluxParams, Region4, State, SystemKind, Wave};

proptest! {
    /// Strict hyperbolicity: the gap equals sqrt(eps2^2 + 4 eps1 v^2).
    #[test]
    fn eigenvalue_gap(u in -3.0..3.0f64, v in 1e-3..5.0f64, e1 in 1e-6..2.0f64, e2 in 1e-6..2.0f64) {
        let c = eigenvalues(State::new(u, v), FluxParams { eps1: e1, eps2: e2 }).unwrap();
        let gap = (e2 * e2 + 4.0 * e1 * v * v).sqrt();
        prop_assert!(c.lambda1 < c.lambda2);
        prop_assert!(((c.lambda2 - c.lambda1) - gap).abs() <= 1e-12 * (1.0 + gap));
    }

    /// With eps1 = 0 the pair reduces exactly to (u - eps2, u).
    #[test]
    fn eigenvalue_reduction(u in -3.0..3.0f64, v in 0.0..5.0f64, e2 in 0.0..2.0f64) {
        let c = eigenvalues(State::new(u, v), FluxParams { eps1: 0.0, eps2: e2 }).unwrap();
        prop_assert_eq!(c.lambda1, u - e2);
        prop_assert_eq!(c.lambda2, u);
    }

    /// At moderate densities the cancellation-free forward potential
    /// agrees with the textbook evaluation of (S + eps2 ln(S - eps2))/2.
    #[test]
    fn forward_potential_forms_agree(v in 0.05..4.0f64, e1 in 0.05..2.0f64, e2 in 0.05..2.0f64) {
        let p = FluxParams { eps1: e1, eps2: e2 };
        let s = (e2 * e2 + 4.0 * e1 * v * v).sqrt();
        let direct = 0.5 * (s + e2 * (s - e2).ln());
        let stable = rarefaction_potential(brio_riemann::WaveFamily::Forward, v, p).unwrap();
        prop_assert!((direct - stable).abs() <= 1e-9 * (1.0 + direct.abs()));
    }
}

/// Characteristic speeds are monotone along the rarefaction curves:
/// lambda1 decreases with v along R1, lambda2 increases along R2.
#[test]
fn fan_speed_monotonicity() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for _ in 0..20 {
        let left = State::new(rng.gen_range(-1.5..1.5), rng.gen_range(0.2..2.5));
        let p = FluxParams {
            eps1: rng.gen_range(0.05..2.0),
            eps2: rng.gen_range(0.0..1.5),
        };
        let n = 100;
        let mut prev_l1 = f64::INFINITY;
        let mut prev_l2 = f64::NEG_INFINITY;
        for j in 0..n {
            let frac = j as f64 / (n - 1) as f64;
            let v1 = left.v * (0.02 + 0.98 * frac);
            let u1 = curve_u(CurveKind::R1, left, v1, p).unwrap();
            let l1 = eigenvalues(State::new(u1, v1), p).unwrap().lambda1;
            let v2 = left.v * (1.0 + 3.0 * frac);
            let u2 = curve_u(CurveKind::R2, left, v2, p).unwrap();
            let l2 = eigenvalues(State::new(u2, v2), p).unwrap().lambda2;
            if j > 0 {
                assert!(l1 < prev_l1, "lambda1 not decreasing at v = {v1}");
                assert!(l2 > prev_l2, "lambda2 not increasing at v = {v2}");
            }
            prev_l1 = l1;
            prev_l2 = l2;
        }
    }
}

/// For random Riemann data exactly one of the four configurations admits
/// an intermediate state with the right density ordering, and it is the
/// one the classifier reports. The brackets here are evaluated from the
/// public curve functions, independent of the solver internals.
#[test]
fn exactly_one_region_solves() {
    let mut rng = ChaCha8Rng::seed_from_u64(4242);
    for case in 0..1000 {
        let left = State::new(rng.gen_range(-1.5..1.5), rng.gen_range(0.2..2.0));
        let right = State::new(rng.gen_range(-1.5..1.5), rng.gen_range(0.2..2.0));
        let p = FluxParams {
            eps1: rng.gen_range(0.05..1.5),
            eps2: rng.gen_range(0.01..1.0),
        };
        // Mismatch between the family-1 value from the left and the
        // family-2 requirement from the right, per configuration.
        let r1 = |v: f64| curve_u(CurveKind::R1, left, v, p).unwrap();
        let s1 = |v: f64| curve_u(CurveKind::S1, left, v, p).unwrap();
        let r2_back = |v: f64| {
            right.u - (curve_u(CurveKind::R2, State::new(0.0, v), right.v, p).unwrap() - 0.0)
        };
        let s2_back = |v: f64| {
            right.u - (curve_u(CurveKind::S2, State::new(0.0, v), right.v, p).unwrap() - 0.0)
        };
        let vmin = left.v.min(right.v);
        let vmax = left.v.max(right.v);
        let mut admissible = Vec::new();
        if r1(vmin) - r2_back(vmin) <= 0.0 {
            admissible.push(Region4::R1R2);
        }
        if right.v > left.v
            && s1(left.v) - r2_back(left.v) >= 0.0
            && s1(right.v) - r2_back(right.v) <= 0.0
        {
            admissible.push(Region4::S1R2);
        }
        if right.v < left.v
            && r1(right.v) - s2_back(right.v) >= 0.0
            && r1(left.v) - s2_back(left.v) <= 0.0
        {
            admissible.push(Region4::R1S2);
        }
        {
            let f = |v: f64| s1(v) - s2_back(v);
            if f(vmax) >= 0.0 {
                let mut hi = vmax + 1.0;
                let mut flipped = false;
                for _ in 0..200 {
                    if f(hi) < 0.0 {
                        flipped = true;
                        break;
                    }
                    hi *= 2.0;
                }
                if flipped {
                    admissible.push(Region4::S1S2);
                }
            }
        }
        assert_eq!(admissible.len(), 1, "case {case}: admissible = {admissible:?}");
        let region = classify(left, right, p, TIE_TOL).unwrap();
        assert_eq!(region, admissible[0], "case {case}");
        let sol = solve_riemann(left, right, p, 1e-12).unwrap();
        assert_eq!(sol.region, Some(region), "case {case}");
        assert!(sol.ordered(1e-9), "case {case}: wave speeds out of order");
    }
}

/// Sampling just outside each wave edge reproduces the stored bounding
/// states bit-for-bit in the constant regions.
#[test]
fn sampling_round_trip_at_wave_edges() {
    let cases = [
        (State::new(1.0, 1.0), State::new(-1.0, 1.0), 1.0, 0.1),
        (State::new(0.0, 1.0), State::new(1.0, 1.2), 0.7, 0.2),
        (State::new(0.0, 1.0), State::new(0.0, 3.0), 1.0, 0.4),
        (State::new(0.3, 2.0), State::new(0.1, 0.7), 0.5, 0.3),
    ];
    for (left, right, e1, e2) in cases {
        let sol = solve_riemann(left, right, FluxParams { eps1: e1, eps2: e2 }, 1e-12).unwrap();
        let mut expected_left = sol.left;
        for w in &sol.waves {
            let (head, tail) = w.speed_range();
            let before = sample(&sol, head - 1e-9).state().unwrap();
            assert!(
                (before.u - expected_left.u).abs() <= 1e-10
                    && (before.v - expected_left.v).abs() <= 1e-10
            );
            let after_state = match *w {
                Wave::Rarefaction { right, .. }
                | Wave::Shock { right, .. }
                | Wave::Contact { right, .. } => right,
                _ => sol.right,
            };
            let after = sample(&sol, tail + 1e-9).state().unwrap();
            assert!(
                (after.u - after_state.u).abs() <= 1e-10
                    && (after.v - after_state.v).abs() <= 1e-10
            );
            expected_left = after_state;
        }
    }
}

/// Crossing a wave curve continuously shrinks the strength of the
/// vanishing wave.
#[test]
fn region_boundary_continuity() {
    let left = State::new(0.0, 1.0);
    let p = FluxParams { eps1: 1.0, eps2: 0.3 };
    let v_plus = 2.0;
    let on_curve = curve_u(CurveKind::R2, left, v_plus, p).unwrap();
    for sign in [1.0, -1.0] {
        let mut last = f64::INFINITY;
        for exponent in [2, 4, 6, 8] {
            let s = sign * 10f64.powi(-exponent);
            let right = State::new(on_curve + s, v_plus);
            let sol = solve_riemann(left, right, p, 1e-13).unwrap();
            let mid = sol.intermediate.unwrap_or(left);
            let strength = (mid.v - left.v).abs();
            assert!(strength < last, "strength {strength} vs previous {last} at s = {s}");
            last = strength;
        }
        assert!(last <= 1e-6, "residual strength {last}");
    }
}

/// One-parameter solutions keep the ordering contact-then-wave, preserve
/// the rarefaction invariant eps2 ln(v) - u, and their delta shocks
/// satisfy the entropy inequalities.
#[test]
fn single_parameter_structure() {
    let mut rng = ChaCha8Rng::seed_from_u64(35);
    for _ in 0..200 {
        let eps2 = rng.gen_range(0.05..1.0);
        let left = State::new(rng.gen_range(-1.0..1.0), rng.gen_range(0.1..3.0));
        let right = State::new(rng.gen_range(-2.5..2.5), rng.gen_range(0.1..3.0));
        let sol = solve_single_param(left, right, eps2).unwrap();
        assert!(sol.ordered(1e-12));
        if let Some(d) = sol.delta() {
            assert!(d.strength_rate > 0.0);
            assert!(d.entropy_satisfied(SystemKind::SingleParameter, eps2, TIE_TOL));
            assert_eq!(d.u_delta, d.sigma + eps2);
        }
        for w in &sol.waves {
            if let Wave::Rarefaction { left: fl, .. } = w {
                let invariant = eps2 * fl.v.ln() - fl.u;
                let (head, tail) = w.speed_range();
                for k in 0..50 {
                    let xi = head + (tail - head) * (k as f64 + 0.5) / 50.0;
                    let s = sample(&sol, xi).state().unwrap();
                    assert!(
                        (eps2 * s.v.ln() - s.u - invariant).abs() <= 1e-12,
                        "invariant drift at xi = {xi}"
                    );
                }
            }
        }
    }
}

/// Transport delta shocks carry exactly the strength sigma [v] - [u v] and
/// satisfy the entropy ordering.
#[test]
fn transport_delta_identities() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..200 {
        let left = State::new(rng.gen_range(0.0..2.0), rng.gen_range(0.0..3.0));
        let right = State::new(left.u - rng.gen_range(0.05..2.0), rng.gen_range(0.0..3.0));
        let sol = solve_transport(left, right).unwrap();
        let d = sol.delta().unwrap();
        let direct = d.sigma * (right.v - left.v) - (right.u * right.v - left.u * left.v);
        assert!((d.strength_rate - direct).abs() <= 1e-12 * (1.0 + direct.abs()));
        assert!(d.entropy_satisfied(SystemKind::Transport, 0.0, TIE_TOL));
        assert_eq!(d.u_delta, d.sigma);
    }
}

/// Along a both-equal schedule on two-shock data the intermediate density
/// grows strictly, the speed gap shrinks strictly, and the scaled density
/// approaches (u_l - u_r)/2.
#[test]
fn concentration_monotonicity() {
    let sch = Schedule::both_equal(1e-1, 0.25, 14).unwrap();
    let recs = sweep_both(State::new(1.0, 1.0), State::new(-1.0, 1.0), &sch).unwrap();
    for w in recs.windows(2) {
        assert!(w[1].v_star > w[0].v_star);
        assert!((w[1].sigma2 - w[1].sigma1) < (w[0].sigma2 - w[0].sigma1));
    }
    let last = recs.last().unwrap();
    assert!((last.scaled_vstar - 1.0).abs() <= 1e-3, "scaled v* {}", last.scaled_vstar);
}

/// Perturbing any delta parameter by 1e-3 leaves a weak-form residual well
/// above ten times the quadrature tolerance.
#[test]
fn delta_residual_positivity() {
    let exact = solve_transport(State::new(1.0, 2.0), State::new(-1.0, 2.0)).unwrap();
    let bumps = vec![
        make_bump((0.0, 1.0), (1.2, 0.5)).unwrap(),
        make_bump((0.3, 0.8), (1.0, 0.3)).unwrap(),
    ];
    let quad_tol = 1e-10;
    let base = weak_residual(&exact, SystemKind::Transport, &bumps, quad_tol)
        .unwrap()
        .max_abs();
    assert!(base <= 1e-8);
    for which in ["sigma", "u_delta", "rate"] {
        let mut sol = exact.clone();
        if let Wave::DeltaShock {
            ref mut sigma,
            ref mut u_delta,
            ref mut strength_rate,
        } = sol.waves[0]
        {
            match which {
                "sigma" => *sigma += 1e-3,
                "u_delta" => *u_delta += 1e-3,
                _ => *strength_rate += 1e-3,
            }
        }
        let r = weak_residual(&sol, SystemKind::Transport, &bumps, quad_tol)
            .unwrap()
            .max_abs();
        assert!(r > 10.0 * quad_tol, "{which}: residual {r}");
    }
}

/// The eps2 = 1 instance of the one-parameter solver satisfies the jump
/// conditions of the flux pair (u^2/2, u v - v).
#[test]
fn simplified_system_consistency() {
    let sol = solve_single_param(State::new(0.5, 2.0), State::new(-0.5, 1.0), 1.0).unwrap();
    let p = FluxParams { eps1: 0.0, eps2: 1.0 };
    let mut left = sol.left;
    for w in &sol.waves {
        match *w {
            Wave::Shock { right, sigma, .. } | Wave::Contact { right, sigma, .. } => {
                let (ru, rv) = brio_riemann::kernel::rh_residual(left, right, sigma, p);
                assert!(ru.abs() <= 1e-12 && rv.abs() <= 1e-12);
                left = right;
            }
            _ => {}
        }
    }
}
