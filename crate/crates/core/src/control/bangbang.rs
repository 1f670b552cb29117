//! Bang-bang control between the oscillator `H0 = ω₀ a*a` and a stable
//! squeezing Hamiltonian `H1`.
//!
//! Alternating pulses `H0, H1, H0, ..., H0` (2k+1 steps, so k uses of `H1`)
//! trace circles around the origin and hyperbolic circles around `ξ = ξ₋(H1)`.
//! The reachable moduli after step 2k+1 form the interval `[r_{2k+1}, R_{2k+1}]`
//! given by the recursions
//!
//! ```text
//! R_{2k+1} = ((1+|ξ|²) R_{2k-1} + 2|ξ|) / (2|ξ| R_{2k-1} + 1+|ξ|²)
//! r_{2k+1} = ((1+|ξ|²) r_{2k-1} - 2|ξ|) / (-2|ξ| r_{2k-1} + 1+|ξ|²)   if r_{2k-1} > 2|ξ|/(1+|ξ|²)
//!          = 0                                                        otherwise
//! ```
//!
//! In the hyperbolic radial coordinate `x = ln((1+m)/(1-m))` both recursions
//! are simply `x ↦ max(0, x ± 2X)` with `X = d(0, ξ)`, which is what the
//! pulse planner below works with.

use num_complex::Complex64;

use crate::dynamics::{evolve, QuadraticHamiltonian, SpectralClass};
use crate::geometry::{
    circle_circle_intersections, euclidean_radius, hyperbolic_distance, hyperbolic_radius,
    DiskPoint,
};
use crate::json::JsonValue;

use super::ControlError;

/// A single pulse: which Hamiltonian (0 or 1) and for how long.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PulseStep {
    pub hamiltonian: usize,
    pub duration: f64,
}

/// An alternating pulse train starting with `H0`.
#[derive(Debug, Clone, PartialEq)]
pub struct PulseSequence {
    steps: Vec<PulseStep>,
}

impl PulseSequence {
    /// Steps must alternate `H0, H1, H0, ...` with nonnegative durations.
    pub fn new(steps: Vec<PulseStep>) -> Result<Self, ControlError> {
        for (i, step) in steps.iter().enumerate() {
            if step.hamiltonian != i % 2 || !(step.duration >= 0.0) {
                return Err(ControlError::MalformedSequence);
            }
        }
        Ok(PulseSequence { steps })
    }

    /// Durations alone, with the `H0, H1, ...` alternation implied.
    pub fn from_durations(durations: Vec<f64>) -> Result<Self, ControlError> {
        PulseSequence::new(
            durations
                .into_iter()
                .enumerate()
                .map(|(i, duration)| PulseStep {
                    hamiltonian: i % 2,
                    duration,
                })
                .collect(),
        )
    }

    pub fn steps(&self) -> &[PulseStep] {
        &self.steps
    }

    pub fn total_duration(&self) -> f64 {
        self.steps.iter().map(|s| s.duration).sum()
    }

    /// Number of `H1` applications (the k of Theorem 2).
    pub fn switch_count(&self) -> usize {
        self.steps.len() / 2
    }

    pub fn to_json(&self) -> JsonValue {
        JsonValue::Array(
            self.steps
                .iter()
                .map(|s| {
                    let mut step = JsonValue::object();
                    step.push("hamiltonian", s.hamiltonian)
                        .push("duration", s.duration);
                    step
                })
                .collect(),
        )
    }
}

/// Per-step bounds `(r_{2k+1}, R_{2k+1})`, index 0 holding `r_1 = R_1 = |z0|`.
#[derive(Debug, Clone, PartialEq)]
pub struct ReachabilityBounds {
    entries: Vec<(f64, f64)>,
}

impl ReachabilityBounds {
    pub fn min_radius(&self, k: usize) -> f64 {
        self.entries[k].0
    }

    pub fn max_radius(&self, k: usize) -> f64 {
        self.entries[k].1
    }

    pub fn switches(&self) -> usize {
        self.entries.len() - 1
    }

    pub fn entries(&self) -> &[(f64, f64)] {
        &self.entries
    }
}

/// The exact Theorem-2 recursions, including the absorbing branch of `r`.
pub fn bang_bang_bounds(z0_mod: f64, xi_mod: f64, k: usize) -> ReachabilityBounds {
    assert!((0.0..1.0).contains(&z0_mod), "|z0| must lie in [0, 1)");
    assert!((0.0..1.0).contains(&xi_mod), "|xi| must lie in [0, 1)");
    let q = 1.0 + xi_mod * xi_mod;
    let p = 2.0 * xi_mod;
    let mut entries = Vec::with_capacity(k + 1);
    let mut max_r = z0_mod;
    let mut min_r = z0_mod;
    entries.push((min_r, max_r));
    for _ in 0..k {
        max_r = (q * max_r + p) / (p * max_r + q);
        min_r = if min_r > p / q {
            (q * min_r - p) / (-p * min_r + q)
        } else {
            0.0
        };
        entries.push((min_r, max_r));
    }
    ReachabilityBounds { entries }
}

/// Closed form `R_{2k+1} = ((1+Δ^{2k})R₁ + 1 - Δ^{2k}) / ((1-Δ^{2k})R₁ + 1 + Δ^{2k})`
/// with `Δ = (1-|ξ|)/(1+|ξ|)`; equals the recursion output.
pub fn closed_form_max_radius(z0_mod: f64, xi_mod: f64, k: usize) -> f64 {
    let delta = (1.0 - xi_mod) / (1.0 + xi_mod);
    let dk = delta.powi(2 * k as i32);
    ((1.0 + dk) * z0_mod + (1.0 - dk)) / ((1.0 - dk) * z0_mod + (1.0 + dk))
}

/// In-disk fixed point modulus of a stable Hamiltonian.
fn stable_xi_mod(h1: &QuadraticHamiltonian) -> Result<f64, ControlError> {
    match h1.classify() {
        SpectralClass::Stable { lambda } => Ok(h1.alpha().norm() / (h1.omega() + lambda)),
        _ => Err(ControlError::NotStable),
    }
}

fn check_oscillator(h0: &QuadraticHamiltonian) -> Result<(), ControlError> {
    if h0.alpha() != Complex64::new(0.0, 0.0) || h0.omega() <= 0.0 {
        return Err(ControlError::NotOscillator);
    }
    Ok(())
}

/// Theorem 2: `[ψ(zf)] = [U_{2k+1} ψ(z0)]` is solvable iff
/// `r_{2k+1} ≤ |zf| ≤ R_{2k+1}`. Depends only on the moduli.
pub fn bang_bang_feasible(
    z0: DiskPoint,
    zf: DiskPoint,
    k: usize,
    h1: &QuadraticHamiltonian,
) -> Result<bool, ControlError> {
    let xi = stable_xi_mod(h1)?;
    let bounds = bang_bang_bounds(z0.modulus(), xi, k);
    let m = zf.modulus();
    Ok(m >= bounds.min_radius(k) - 1e-12 && m <= bounds.max_radius(k) + 1e-12)
}

/// Smallest k making the target feasible; finite whenever `|ξ| > 0` since
/// `R → 1` and `r → 0`.
pub fn min_switches(
    z0: DiskPoint,
    zf: DiskPoint,
    h1: &QuadraticHamiltonian,
) -> Result<usize, ControlError> {
    let xi = stable_xi_mod(h1)?;
    if xi <= 0.0 {
        return if (z0.modulus() - zf.modulus()).abs() <= 1e-12 {
            Ok(0)
        } else {
            Err(ControlError::NoSqueezing)
        };
    }
    // Each switch moves the hyperbolic radius by at most 2·d(0, ξ).
    let step = 2.0 * hyperbolic_radius(xi);
    let gap = (hyperbolic_radius(zf.modulus()) - hyperbolic_radius(z0.modulus())).abs();
    let mut k = ((gap / step).floor() as usize).saturating_sub(1);
    while !bang_bang_feasible(z0, zf, k, h1)? {
        k += 1;
    }
    Ok(k)
}

/// Simulate an alternating pulse train with the closed-form flows.
pub fn simulate_pulses(
    z0: DiskPoint,
    h0: &QuadraticHamiltonian,
    h1: &QuadraticHamiltonian,
    pulses: &PulseSequence,
) -> DiskPoint {
    pulses.steps().iter().fold(z0, |z, step| {
        let h = if step.hamiltonian == 0 { h0 } else { h1 };
        evolve(h, z, step.duration)
    })
}

/// Synthesize a 2k+1 pulse train steering `z0` to `zf`.
///
/// The plan walks the hyperbolic radius toward the target, each `(H0, H1)`
/// pair moving it by at most `2·d(0, ξ)`. Within a pair the departure angle
/// on the current circle is found by bisection against the monotone
/// hyperbolic distance from `ξ` (tolerance well below 1e-9 on the modulus),
/// the `H1` arc is the rotation about `ξ` landing on the next circle, and the
/// final `H0` rotation fixes the phase of `zf`.
pub fn synthesize_pulses(
    z0: DiskPoint,
    zf: DiskPoint,
    k: usize,
    h0: &QuadraticHamiltonian,
    h1: &QuadraticHamiltonian,
) -> Result<PulseSequence, ControlError> {
    check_oscillator(h0)?;
    let SpectralClass::Stable { lambda } = h1.classify() else {
        return Err(ControlError::NotStable);
    };
    let xi = h1
        .ground_state_point()
        .expect("stable Hamiltonians have an in-disk fixed point")
        .value();
    let xi_mod = xi.norm();
    let bounds = bang_bang_bounds(z0.modulus(), xi_mod, k);
    let target_mod = zf.modulus();
    if target_mod < bounds.min_radius(k) - 1e-12 || target_mod > bounds.max_radius(k) + 1e-12 {
        return Err(ControlError::Infeasible {
            k,
            r: bounds.min_radius(k),
            cap_r: bounds.max_radius(k),
            zf: target_mod,
        });
    }
    if zf.value() == z0.value() {
        return PulseSequence::from_durations(vec![0.0; 2 * k + 1]);
    }
    if k > 0 && xi_mod == 0.0 {
        // Squeezing-free H1 cannot change the modulus; only moduli equal to
        // |z0| pass the feasibility gate, so rotations alone suffice.
        let mut durations = vec![0.0; 2 * k + 1];
        durations[2 * k] = rotation_duration(z0.value(), zf.value(), h0.omega());
        return PulseSequence::from_durations(durations);
    }

    let omega0 = h0.omega();
    let u = if xi_mod > 0.0 {
        xi / xi_mod
    } else {
        Complex64::new(1.0, 0.0)
    };
    let cap_x = hyperbolic_radius(xi_mod);
    let target_rho = hyperbolic_radius(target_mod);

    let mut durations = Vec::with_capacity(2 * k + 1);
    let mut z_cur = z0.value();
    let mut rho_cur = hyperbolic_radius(z_cur.norm());
    for _ in 0..k {
        let lo = (rho_cur - 2.0 * cap_x).max(0.0);
        let hi = rho_cur + 2.0 * cap_x;
        // Greedy: move toward the target radius as far as one pair allows;
        // feasibility guarantees the last step lands on it exactly.
        let rho_next = target_rho.clamp(lo, hi);

        // Hyperbolic radius around ξ of the connecting circle: it must both
        // meet the current circle and carry points of the next modulus.
        let y_cur = (cap_x - rho_cur).abs();
        let y_next = (cap_x - rho_next).abs();
        let y = y_cur
            .max(y_next)
            .min(cap_x + rho_cur)
            .min(cap_x + rho_next);

        // Departure point: bisect the angle from the ξ direction.
        let m_cur = z_cur.norm();
        let departure = if m_cur <= 1e-300 {
            z_cur
        } else {
            let dist_at = |theta: f64| {
                let p = DiskPoint::new(u * Complex64::from_polar(m_cur, theta))
                    .expect("departure candidates stay inside the disk");
                let xi_point = DiskPoint::new(xi).expect("ξ lies inside the disk");
                hyperbolic_distance(xi_point, p)
            };
            let mut a = 0.0f64;
            let mut b = std::f64::consts::PI;
            for _ in 0..64 {
                let mid = 0.5 * (a + b);
                if dist_at(mid) < y {
                    a = mid;
                } else {
                    b = mid;
                }
            }
            u * Complex64::from_polar(m_cur, 0.5 * (a + b))
        };
        durations.push(rotation_duration(z_cur, departure, omega0));

        // Arrival point: intersection of the connecting circle (a Euclidean
        // circle with axis crossings at hyperbolic coordinates X ∓ y) with
        // the circle of the next modulus.
        let s1 = euclidean_radius(cap_x - y);
        let s2 = euclidean_radius(cap_x + y);
        let center = u * (0.5 * (s1 + s2));
        let radius = 0.5 * (s2 - s1);
        let m_next = euclidean_radius(rho_next);
        let arrival = if radius <= 1e-15 {
            // Zero-size connecting circle: the state parks on ξ itself.
            center
        } else {
            let candidates =
                circle_circle_intersections(center, radius, Complex64::new(0.0, 0.0), m_next);
            match candidates.len() {
                0 => {
                    // Tolerance-level tangency miss: take the nearer axis point.
                    let p1 = u * s1;
                    let p2 = u * s2;
                    if (p1.norm() - m_next).abs() <= (p2.norm() - m_next).abs() {
                        p1
                    } else {
                        p2
                    }
                }
                _ => candidates[0],
            }
        };

        // H1 rotates clockwise about ξ by 2λt in the (z-ξ₋)/(z-ξ₊) chart.
        let angle = rotation_about_xi_angle(xi, departure, arrival);
        durations.push(angle.rem_euclid(2.0 * std::f64::consts::PI) / (2.0 * lambda));

        z_cur = arrival;
        rho_cur = hyperbolic_radius(z_cur.norm().min(1.0 - 1e-16));
    }
    durations.push(rotation_duration(z_cur, zf.value(), omega0));
    PulseSequence::from_durations(durations)
}

/// Duration of the `H0` rotation `z ↦ z e^{-2iω₀t}` carrying `from` to `to`
/// (equal moduli assumed).
fn rotation_duration(from: Complex64, to: Complex64, omega0: f64) -> f64 {
    if from.norm() <= 1e-300 || to.norm() <= 1e-300 {
        return 0.0;
    }
    (from.arg() - to.arg()).rem_euclid(2.0 * std::f64::consts::PI) / (2.0 * omega0)
}

/// Clockwise angle of the elliptic rotation about ξ taking `from` to `to`,
/// read in the chart sending `ξ ↦ 0` and `1/ξ̄ ↦ ∞`.
fn rotation_about_xi_angle(xi: Complex64, from: Complex64, to: Complex64) -> f64 {
    let xi_plus = xi.conj().inv();
    let chart = |z: Complex64| (z - xi) / (z - xi_plus);
    let ratio = chart(to) / chart(from);
    // T = e^{-2iλt}: clockwise angles are positive durations.
    (-ratio.arg()).rem_euclid(2.0 * std::f64::consts::PI)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dp(re: f64, im: f64) -> DiskPoint {
        DiskPoint::from_re_im(re, im).unwrap()
    }

    fn oscillator() -> QuadraticHamiltonian {
        QuadraticHamiltonian::new(2.0, Complex64::new(0.0, 0.0)).unwrap()
    }

    /// ω=2, α=1.6: λ = 1.2 and ξ₋ = 0.5.
    fn squeezer() -> QuadraticHamiltonian {
        QuadraticHamiltonian::new(2.0, Complex64::new(1.6, 0.0)).unwrap()
    }

    #[test]
    fn bounds_match_hand_computed_values() {
        let b = bang_bang_bounds(0.0, 0.5, 2);
        assert_eq!(b.min_radius(0), 0.0);
        assert_eq!(b.max_radius(0), 0.0);
        assert!((b.max_radius(1) - 0.8).abs() < 1e-15);
        assert_eq!(b.min_radius(1), 0.0);
        assert!((b.max_radius(2) - 2.0 / 2.05).abs() < 1e-15);
    }

    #[test]
    fn zero_squeezing_keeps_the_modulus() {
        let b = bang_bang_bounds(0.37, 0.0, 5);
        for k in 0..=5 {
            assert_eq!(b.min_radius(k), 0.37);
            assert_eq!(b.max_radius(k), 0.37);
        }
    }

    #[test]
    fn min_radius_branch_engages_above_threshold() {
        // |ξ| = 0.5: threshold 2|ξ|/(1+|ξ|²) = 0.8.
        let b = bang_bang_bounds(0.9, 0.5, 2);
        let expected = (1.25 * 0.9 - 1.0) / (-0.9 + 1.25);
        assert!((b.min_radius(1) - expected).abs() < 1e-15);
        // 0.357... is below 0.8, so the next step absorbs to zero.
        assert_eq!(b.min_radius(2), 0.0);
    }

    #[test]
    fn closed_form_equals_recursion() {
        for &(z0, xi) in &[(0.0, 0.5), (0.3, 0.2), (0.85, 0.7), (0.1, 0.05)] {
            let b = bang_bang_bounds(z0, xi, 64);
            for k in 0..=64 {
                let cf = closed_form_max_radius(z0, xi, k);
                assert!(
                    (cf - b.max_radius(k)).abs() <= 1e-12,
                    "z0={z0} xi={xi} k={k}: {cf} vs {}",
                    b.max_radius(k)
                );
            }
        }
        assert_eq!(closed_form_max_radius(0.3, 0.5, 0), 0.3);
        // Δ = 1/3 at |ξ| = 0.5: R_3 = (8/9)/(10/9) from the origin.
        assert!((closed_form_max_radius(0.0, 0.5, 1) - 0.8).abs() < 1e-15);
    }

    #[test]
    fn asymptotic_defect_formula() {
        // 1 - R_{2k+1} ≈ 2((1-R₁)/(1+R₁))Δ^{2k} once Δ^{2k} is small.
        let (z0, xi) = (0.2, 0.5);
        let delta: f64 = (1.0 - xi) / (1.0 + xi);
        let k = (1..200)
            .find(|&k| delta.powi(2 * k) <= 1e-4)
            .expect("Δ^{2k} shrinks below 1e-4");
        let r = closed_form_max_radius(z0, xi, k as usize);
        let predicted = 2.0 * ((1.0 - z0) / (1.0 + z0)) * delta.powi(2 * k);
        let ratio = (1.0 - r) / predicted;
        assert!((ratio - 1.0).abs() < 0.01, "ratio = {ratio}");
    }

    #[test]
    fn feasibility_examples_from_theorem() {
        let h1 = squeezer();
        let z0 = DiskPoint::origin();
        let zf = dp(0.9, 0.0);
        assert!(!bang_bang_feasible(z0, zf, 1, &h1).unwrap());
        assert!(bang_bang_feasible(z0, zf, 2, &h1).unwrap());

        // Rotation-only targets are feasible with k = 0.
        let z0 = dp(0.3, 0.1);
        let rotated = z0.value() * Complex64::from_polar(1.0, -1.1);
        let zf = DiskPoint::new(rotated).unwrap();
        assert!(bang_bang_feasible(z0, zf, 0, &h1).unwrap());

        let free = QuadraticHamiltonian::new(1.0, Complex64::new(1.0, 0.0)).unwrap();
        assert_eq!(
            bang_bang_feasible(z0, zf, 1, &free),
            Err(ControlError::NotStable)
        );
    }

    #[test]
    fn min_switch_counts() {
        let h1 = squeezer();
        assert_eq!(
            min_switches(DiskPoint::origin(), dp(0.8, 0.0), &h1).unwrap(),
            1
        );
        assert_eq!(
            min_switches(DiskPoint::origin(), dp(0.9, 0.0), &h1).unwrap(),
            2
        );
        assert_eq!(min_switches(dp(0.4, 0.1), dp(-0.1, 0.4), &h1).unwrap(), 0);

        assert_eq!(
            min_switches(DiskPoint::origin(), dp(0.5, 0.0), &oscillator()),
            Err(ControlError::NoSqueezing)
        );
        assert_eq!(
            min_switches(dp(0.5, 0.0), dp(0.0, 0.5), &oscillator()).unwrap(),
            0
        );
    }

    #[test]
    fn synthesized_pulses_hit_the_target() {
        let h0 = oscillator();
        let h1 = squeezer();
        let cases = [
            (DiskPoint::origin(), dp(0.4, 0.0), 1),
            (DiskPoint::origin(), dp(0.0, 0.79), 1),
            (DiskPoint::origin(), dp(-0.6, 0.6), 2),
            (dp(0.5, 0.0), dp(0.05, 0.05), 1),
            (dp(0.3, -0.6), dp(-0.2, 0.0), 3),
        ];
        for (z0, zf, k) in cases {
            let pulses = synthesize_pulses(z0, zf, k, &h0, &h1).unwrap();
            assert_eq!(pulses.steps().len(), 2 * k + 1);
            let endpoint = simulate_pulses(z0, &h0, &h1, &pulses);
            let err = (endpoint.value() - zf.value()).norm();
            assert!(err <= 1e-6, "endpoint error {err} for target {zf:?}");
        }
    }

    #[test]
    fn identity_target_gives_zero_durations() {
        let pulses =
            synthesize_pulses(dp(0.2, 0.1), dp(0.2, 0.1), 2, &oscillator(), &squeezer()).unwrap();
        assert_eq!(pulses.steps().len(), 5);
        assert!(pulses.total_duration() == 0.0);
    }

    #[test]
    fn infeasible_targets_are_rejected_with_bounds() {
        let err = synthesize_pulses(DiskPoint::origin(), dp(0.9, 0.0), 1, &oscillator(), &squeezer())
            .unwrap_err();
        match err {
            ControlError::Infeasible { k, cap_r, .. } => {
                assert_eq!(k, 1);
                assert!((cap_r - 0.8).abs() < 1e-12);
            }
            other => panic!("expected Infeasible, got {other:?}"),
        }
    }

    #[test]
    fn sequences_validate_alternation() {
        assert!(PulseSequence::from_durations(vec![0.1, 0.2, 0.3]).is_ok());
        assert_eq!(
            PulseSequence::new(vec![PulseStep {
                hamiltonian: 1,
                duration: 0.1
            }]),
            Err(ControlError::MalformedSequence)
        );
        assert_eq!(
            PulseSequence::from_durations(vec![0.1, -0.2]),
            Err(ControlError::MalformedSequence)
        );
    }
}
