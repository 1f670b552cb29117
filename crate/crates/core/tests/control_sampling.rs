//! Sampling oracles for the control solvers: Theorem-2 soundness and
//! completeness against simulated dynamics, and the two-step free reachable
//! set validated by forward simulation.

use num_complex::Complex64;
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use disk_squeeze_core::control::{
    adiabatic_path, bang_bang_bounds, free_two_step_contains, free_two_step_durations,
    simulate_pulses, synthesize_pulses, PulseSequence,
};
use disk_squeeze_core::dynamics::{evolve, QuadraticHamiltonian, SpectralClass};
use disk_squeeze_core::geometry::{DiskPoint, GeneralizedCircle};

fn oscillator(omega: f64) -> QuadraticHamiltonian {
    QuadraticHamiltonian::new(omega, Complex64::new(0.0, 0.0)).unwrap()
}

/// Stable Hamiltonian with `|ξ₋| = xi_mod`: `|α| = 2ω·|ξ|/(1+|ξ|²)`.
fn squeezer(omega: f64, xi_mod: f64, arg: f64) -> QuadraticHamiltonian {
    let alpha_mod = 2.0 * omega * xi_mod / (1.0 + xi_mod * xi_mod);
    QuadraticHamiltonian::new(omega, Complex64::from_polar(alpha_mod, arg)).unwrap()
}

fn random_disk_point(rng: &mut impl Rng, max_mod: f64) -> DiskPoint {
    let r = rng.gen::<f64>() * max_mod;
    let th = rng.gen::<f64>() * std::f64::consts::TAU;
    DiskPoint::new(Complex64::from_polar(r, th)).unwrap()
}

/// 10⁴ random alternating pulse trains never leave the Theorem-2 modulus
/// interval.
#[test]
fn random_pulse_trains_respect_the_bounds() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0001);
    for _ in 0..10_000 {
        let omega0 = 0.5 + 2.0 * rng.gen::<f64>();
        let xi_mod = 0.1 + 0.7 * rng.gen::<f64>();
        let h0 = oscillator(omega0);
        let h1 = squeezer(
            0.5 + 2.0 * rng.gen::<f64>(),
            xi_mod,
            rng.gen::<f64>() * std::f64::consts::TAU,
        );
        let SpectralClass::Stable { lambda } = h1.classify() else {
            unreachable!()
        };
        let z0 = random_disk_point(&mut rng, 0.9);
        let k = rng.gen_range(0..4usize);
        let durations: Vec<f64> = (0..2 * k + 1)
            .map(|i| {
                let period = if i % 2 == 0 {
                    std::f64::consts::PI / omega0
                } else {
                    std::f64::consts::PI / lambda
                };
                rng.gen::<f64>() * period
            })
            .collect();
        let pulses = PulseSequence::from_durations(durations).unwrap();
        let endpoint = simulate_pulses(z0, &h0, &h1, &pulses);

        let bounds = bang_bang_bounds(z0.modulus(), xi_mod, k);
        let m = endpoint.modulus();
        assert!(
            m >= bounds.min_radius(k) - 1e-9 && m <= bounds.max_radius(k) + 1e-9,
            "modulus {m} outside [{}, {}] for k = {k}",
            bounds.min_radius(k),
            bounds.max_radius(k)
        );
    }
}

/// 10³ random feasible targets are hit by synthesized pulse trains to 1e-6.
#[test]
fn synthesis_reaches_random_feasible_targets() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0002);
    for _ in 0..1_000 {
        let h0 = oscillator(0.5 + 2.0 * rng.gen::<f64>());
        let xi_mod = 0.1 + 0.7 * rng.gen::<f64>();
        let h1 = squeezer(
            0.5 + 2.0 * rng.gen::<f64>(),
            xi_mod,
            rng.gen::<f64>() * std::f64::consts::TAU,
        );
        let z0 = random_disk_point(&mut rng, 0.9);
        let k = rng.gen_range(0..4usize);
        let bounds = bang_bang_bounds(z0.modulus(), xi_mod, k);
        // Uniform modulus in the feasible interval, uniform phase.
        let m = bounds.min_radius(k)
            + (bounds.max_radius(k) - bounds.min_radius(k)) * rng.gen::<f64>();
        let zf = DiskPoint::new(Complex64::from_polar(
            m.min(0.999_999),
            rng.gen::<f64>() * std::f64::consts::TAU,
        ))
        .unwrap();

        let pulses = synthesize_pulses(z0, zf, k, &h0, &h1).expect("target is feasible");
        let endpoint = simulate_pulses(z0, &h0, &h1, &pulses);
        let err = (endpoint.value() - zf.value()).norm();
        assert!(err <= 1e-6, "endpoint error {err} (k = {k}, |ξ| = {xi_mod})");
    }
}

fn free_pair() -> (QuadraticHamiltonian, QuadraticHamiltonian) {
    // Fixed points ξ0 = 1 and ξ1 = e^{2πi/3}.
    let h0 = QuadraticHamiltonian::new(1.0, Complex64::new(1.0, 0.0)).unwrap();
    let xi1 = Complex64::from_polar(1.0, 2.0 * std::f64::consts::FRAC_PI_3);
    let h1 = QuadraticHamiltonian::new(1.0, xi1.inv()).unwrap();
    (h0, h1)
}

/// Heavy-tailed duration covering the whole forward orbit.
fn random_duration(rng: &mut impl Rng) -> f64 {
    let u: f64 = rng.gen_range(0.0..0.995);
    2.0 * u / (1.0 - u)
}

/// Every simulated two-step endpoint lies in the membership region, interior
/// points are recovered by the closed-form duration search, and points
/// outside the region are never hit.
#[test]
fn free_two_step_region_statistics() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0003);
    let (h0, h1) = free_pair();
    let z0 = DiskPoint::from_re_im(0.15, -0.1).unwrap();

    // Soundness: forward simulation lands inside the membership region.
    let endpoints: Vec<Complex64> = (0..10_000)
        .map(|_| {
            let t0 = random_duration(&mut rng);
            let t1 = random_duration(&mut rng);
            let w = evolve(&h1, evolve(&h0, z0, t0), t1);
            assert!(
                free_two_step_contains(z0, &h0, &h1, w).unwrap(),
                "simulated endpoint {w:?} flagged unreachable (t0={t0}, t1={t1})"
            );
            w.value()
        })
        .collect();

    // Completeness on interior points: membership with a safety ring, then
    // the closed-form durations must replay to the target.
    let margin = 1e-3;
    let interior_test = |w: DiskPoint| -> bool {
        if !free_two_step_contains(z0, &h0, &h1, w).unwrap() {
            return false;
        }
        (0..8).all(|i| {
            let ring = w.value()
                + Complex64::from_polar(margin, i as f64 * std::f64::consts::FRAC_PI_4);
            DiskPoint::new(ring)
                .map(|p| free_two_step_contains(z0, &h0, &h1, p).unwrap())
                .unwrap_or(false)
        })
    };
    let mut hits = 0;
    while hits < 1_000 {
        let w = random_disk_point(&mut rng, 0.995);
        if !interior_test(w) {
            continue;
        }
        hits += 1;
        let (t0, t1) = free_two_step_durations(z0, &h0, &h1, w)
            .unwrap()
            .expect("interior point admits durations");
        let replay = evolve(&h1, evolve(&h0, z0, t0), t1);
        let err = (replay.value() - w.value()).norm();
        assert!(err <= 1e-6, "replay error {err} at {w:?}");
    }

    // Exclusion: clearly-outside points are never reached by the samples.
    let outside_test = |w: DiskPoint| -> bool {
        (0..8).all(|i| {
            let ring = w.value()
                + Complex64::from_polar(1e-2, i as f64 * std::f64::consts::FRAC_PI_4);
            DiskPoint::new(ring)
                .map(|p| !free_two_step_contains(z0, &h0, &h1, p).unwrap())
                .unwrap_or(true)
        }) && !free_two_step_contains(z0, &h0, &h1, w).unwrap()
    };
    let mut outsiders = 0;
    while outsiders < 1_000 {
        let w = random_disk_point(&mut rng, 0.995);
        if !outside_test(w) {
            continue;
        }
        outsiders += 1;
        let nearest = endpoints
            .iter()
            .map(|e| (e - w.value()).norm())
            .fold(f64::MAX, f64::min);
        assert!(
            nearest > 1e-6,
            "outside point {w:?} was reached by a random sample"
        );
        assert!(
            free_two_step_durations(z0, &h0, &h1, w).unwrap().is_none(),
            "outside point {w:?} admitted durations"
        );
    }
}

/// Carrier identity and unit-circle orthogonality for random adiabatic paths.
#[test]
fn adiabatic_paths_stay_on_orthogonal_circles() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0004);
    let mut tested = 0;
    while tested < 200 {
        let omega = 1.0 + 2.0 * rng.gen::<f64>();
        let alpha0 = Complex64::from_polar(
            0.9 * omega * rng.gen::<f64>(),
            rng.gen::<f64>() * std::f64::consts::TAU,
        );
        let alpha1 = Complex64::from_polar(
            0.9 * omega * rng.gen::<f64>(),
            rng.gen::<f64>() * std::f64::consts::TAU,
        );
        let step = alpha1 - alpha0;
        if step.norm() < 1e-3 {
            continue;
        }
        // Keep the carrier circle well-conditioned: b not tiny relative to ω.
        let b = (step / step.norm()).conj() * alpha0;
        if b.im.abs() < 0.15 * omega {
            continue;
        }
        tested += 1;
        let path = adiabatic_path(omega, alpha0, alpha1, 101).unwrap();
        assert!(path.max_carrier_residual() <= 1e-12);
        match path.carrier {
            GeneralizedCircle::Circle { center, radius } => {
                assert!(
                    (center.norm_sqr() - (1.0 + radius * radius)).abs() <= 1e-12
                        * (1.0 + radius * radius)
                );
            }
            GeneralizedCircle::Line { point, .. } => assert!(point.norm() < 1e-12),
        }
    }
}
