//! Verification suites: closed forms against the truncated Fock oracle,
//! Möbius flows against matrix evolution, the metric-convergence check, and
//! the control sampling oracles. Deterministic for a fixed seed.

use std::path::PathBuf;
use std::process::ExitCode;

use num_complex::Complex64;
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use disk_squeeze_core::control::{
    bang_bang_bounds, closed_form_max_radius, simulate_pulses, synthesize_pulses, PulseSequence,
};
use disk_squeeze_core::dynamics::{evolve, QuadraticHamiltonian, SpectralClass};
use disk_squeeze_core::fock;
use disk_squeeze_core::geometry::DiskPoint;
use disk_squeeze_core::json::JsonValue;

use crate::report::{check_entry, emit, new_report};
use crate::VerifySuite;

struct Tolerances {
    entries: Vec<(&'static str, f64)>,
}

impl Tolerances {
    fn new(defaults: &[(&'static str, f64)], overrides: &[String]) -> Result<Self, String> {
        let mut entries: Vec<(&'static str, f64)> = defaults.to_vec();
        for spec in overrides {
            let (name, value) = spec
                .split_once('=')
                .ok_or_else(|| format!("--tol expects NAME=VALUE, got {spec:?}"))?;
            let value: f64 = value
                .parse()
                .map_err(|_| format!("--tol {name}: {value:?} is not a number"))?;
            let slot = entries
                .iter_mut()
                .find(|(n, _)| *n == name)
                .ok_or_else(|| format!("unknown tolerance {name:?} for this suite"))?;
            slot.1 = value;
        }
        Ok(Tolerances { entries })
    }

    fn get(&self, name: &str) -> f64 {
        self.entries
            .iter()
            .find(|(n, _)| *n == name)
            .expect("tolerance name is declared")
            .1
    }

    fn to_json(&self) -> JsonValue {
        let mut doc = JsonValue::object();
        for (name, value) in &self.entries {
            doc.push(name, *value);
        }
        doc
    }
}

fn random_disk_point(rng: &mut impl Rng, max_mod: f64) -> DiskPoint {
    let r = rng.gen::<f64>() * max_mod;
    let th = rng.gen::<f64>() * std::f64::consts::TAU;
    DiskPoint::new(Complex64::from_polar(r, th)).unwrap()
}

pub fn run(
    suite: VerifySuite,
    n: usize,
    seed: u64,
    tol_overrides: &[String],
    out: &Option<PathBuf>,
) -> Result<ExitCode, String> {
    let (suite_name, defaults): (&str, &[(&'static str, f64)]) = match suite {
        VerifySuite::Overlap => (
            "overlap",
            &[("overlap_agreement", 1e-10), ("hs_agreement", 1e-9)],
        ),
        VerifySuite::Flow => ("flow", &[("flow_consistency", 1e-6)]),
        VerifySuite::Metric => ("metric", &[("shrink_deviation", 0.5)]),
        VerifySuite::Control => (
            "control",
            &[
                ("closed_form_agreement", 1e-12),
                ("soundness_slack", 1e-9),
                ("completeness_error", 1e-6),
                ("asymptotic_deviation", 0.01),
            ],
        ),
    };
    let tols = Tolerances::new(defaults, tol_overrides)?;

    let mut checks: Vec<JsonValue> = Vec::new();
    let mut all_pass = true;
    let mut push = |entry: (JsonValue, bool), all_pass: &mut bool| {
        *all_pass &= entry.1;
        checks.push(entry.0);
    };

    let mut extra_outputs = JsonValue::object();
    match suite {
        VerifySuite::Overlap => {
            if n < 4 {
                return Err("--n must be at least 4".into());
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut overlap_res: f64 = 0.0;
            let mut hs_res: f64 = 0.0;
            for _ in 0..1000 {
                let z = random_disk_point(&mut rng, 0.8);
                let w = random_disk_point(&mut rng, 0.8);
                let psi_z = fock::squeezed_state_vector(z, n).unwrap();
                let psi_w = fock::squeezed_state_vector(w, n).unwrap();
                let truncated = psi_z.inner(&psi_w);
                overlap_res = overlap_res.max((truncated - fock::overlap(z, w)).norm());
                let hs_truncated = 2.0 - 2.0 * truncated.norm_sqr();
                hs_res = hs_res.max((fock::hs_distance_sq(z, w) - hs_truncated).abs());
            }
            push(
                check_entry("overlap_agreement", overlap_res, tols.get("overlap_agreement")),
                &mut all_pass,
            );
            push(
                check_entry("hs_agreement", hs_res, tols.get("hs_agreement")),
                &mut all_pass,
            );
        }
        VerifySuite::Flow => {
            if n < 4 {
                return Err("--n must be at least 4".into());
            }
            let regimes: [(&str, f64, Complex64, f64); 3] = [
                (
                    "stable_flow",
                    2.0,
                    Complex64::new(1.0, 0.0),
                    std::f64::consts::PI / 3.0f64.sqrt(),
                ),
                ("free_flow", 1.0, Complex64::new(1.0, 0.0), 4.0 / 3.0),
                ("unstable_flow", 0.0, Complex64::new(1.0, 0.0), 0.8f64.atanh()),
            ];
            for (name, omega, alpha, t_span) in regimes {
                let h = QuadraticHamiltonian::new(omega, alpha).unwrap();
                let hm = fock::hamiltonian_matrix(&h, n).unwrap();
                let psi0 = fock::squeezed_state_vector(DiskPoint::origin(), n).unwrap();
                let mut residual: f64 = 0.0;
                for i in 0..20 {
                    let t = t_span * i as f64 / 19.0;
                    let expected = evolve(&h, DiskPoint::origin(), t);
                    let psi_t = fock::evolve_vector(&hm, &psi0, t).unwrap();
                    let extracted = fock::extract_disk_point(&psi_t)
                        .map_err(|e| format!("{name}: {e}"))?;
                    residual = residual.max((extracted.value() - expected.value()).norm());
                }
                push(
                    check_entry(name, residual, tols.get("flow_consistency")),
                    &mut all_pass,
                );
            }
        }
        VerifySuite::Metric => {
            let points = [
                ("shrink_at_origin", Complex64::new(0.0, 0.0)),
                ("shrink_at_half", Complex64::new(0.5, 0.0)),
                ("shrink_at_half_i", Complex64::new(0.0, 0.5)),
            ];
            let mut table: Vec<JsonValue> = Vec::new();
            for (name, z) in points {
                let z = DiskPoint::new(z).unwrap();
                let e1 = (fock::fubini_study_ratio(z, Complex64::new(1e-2, 0.0)).unwrap() - 1.0)
                    .abs();
                let e2 = (fock::fubini_study_ratio(z, Complex64::new(5e-3, 0.0)).unwrap() - 1.0)
                    .abs();
                let shrink = e1 / e2;
                let mut row = JsonValue::object();
                row.push("z", JsonValue::complex(z.value()))
                    .push("deviation_1e-2", e1)
                    .push("deviation_5e-3", e2)
                    .push("shrink_factor", shrink);
                table.push(row);
                push(
                    check_entry(name, (shrink - 4.0).abs(), tols.get("shrink_deviation")),
                    &mut all_pass,
                );
            }
            extra_outputs.push("convergence_table", JsonValue::Array(table));
        }
        VerifySuite::Control => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);

            // Closed form against the recursion, k ≤ 64.
            let mut cf_res: f64 = 0.0;
            for _ in 0..100 {
                let z0 = rng.gen::<f64>() * 0.95;
                let xi = rng.gen::<f64>() * 0.95;
                let bounds = bang_bang_bounds(z0, xi, 64);
                for k in 0..=64 {
                    cf_res = cf_res
                        .max((closed_form_max_radius(z0, xi, k) - bounds.max_radius(k)).abs());
                }
            }
            push(
                check_entry("closed_form_agreement", cf_res, tols.get("closed_form_agreement")),
                &mut all_pass,
            );

            // Soundness: random pulse trains stay inside the Theorem-2 interval.
            let mut violation: f64 = 0.0;
            for _ in 0..10_000 {
                let omega0 = 0.5 + 2.0 * rng.gen::<f64>();
                let xi_mod = 0.1 + 0.7 * rng.gen::<f64>();
                let omega1 = 0.5 + 2.0 * rng.gen::<f64>();
                let alpha_mod = 2.0 * omega1 * xi_mod / (1.0 + xi_mod * xi_mod);
                let h0 = QuadraticHamiltonian::new(omega0, Complex64::new(0.0, 0.0)).unwrap();
                let h1 = QuadraticHamiltonian::new(
                    omega1,
                    Complex64::from_polar(alpha_mod, rng.gen::<f64>() * std::f64::consts::TAU),
                )
                .unwrap();
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
                let m = simulate_pulses(z0, &h0, &h1, &pulses).modulus();
                let bounds = bang_bang_bounds(z0.modulus(), xi_mod, k);
                violation = violation
                    .max(bounds.min_radius(k) - m)
                    .max(m - bounds.max_radius(k));
            }
            push(
                check_entry(
                    "soundness_violation",
                    violation.max(0.0),
                    tols.get("soundness_slack"),
                ),
                &mut all_pass,
            );

            // Completeness: synthesized pulses hit random feasible targets.
            let mut synth_err: f64 = 0.0;
            for _ in 0..1000 {
                let h0 =
                    QuadraticHamiltonian::new(0.5 + 2.0 * rng.gen::<f64>(), Complex64::new(0.0, 0.0))
                        .unwrap();
                let xi_mod = 0.1 + 0.7 * rng.gen::<f64>();
                let omega1 = 0.5 + 2.0 * rng.gen::<f64>();
                let alpha_mod = 2.0 * omega1 * xi_mod / (1.0 + xi_mod * xi_mod);
                let h1 = QuadraticHamiltonian::new(
                    omega1,
                    Complex64::from_polar(alpha_mod, rng.gen::<f64>() * std::f64::consts::TAU),
                )
                .unwrap();
                let z0 = random_disk_point(&mut rng, 0.9);
                let k = rng.gen_range(0..4usize);
                let bounds = bang_bang_bounds(z0.modulus(), xi_mod, k);
                let m = bounds.min_radius(k)
                    + (bounds.max_radius(k) - bounds.min_radius(k)) * rng.gen::<f64>();
                let zf = DiskPoint::new(Complex64::from_polar(
                    m.min(0.999_999),
                    rng.gen::<f64>() * std::f64::consts::TAU,
                ))
                .unwrap();
                let pulses = synthesize_pulses(z0, zf, k, &h0, &h1).map_err(|e| e.to_string())?;
                let endpoint = simulate_pulses(z0, &h0, &h1, &pulses);
                synth_err = synth_err.max((endpoint.value() - zf.value()).norm());
            }
            push(
                check_entry("completeness_error", synth_err, tols.get("completeness_error")),
                &mut all_pass,
            );

            // Asymptotics of the maximum radius defect.
            let mut asym_dev: f64 = 0.0;
            for _ in 0..10 {
                let z0 = rng.gen::<f64>() * 0.9;
                let xi = 0.2 + 0.6 * rng.gen::<f64>();
                let delta: f64 = (1.0 - xi) / (1.0 + xi);
                let k = (1..500)
                    .find(|&k| delta.powi(2 * k) <= 1e-4)
                    .expect("Δ^{2k} decays");
                let r = closed_form_max_radius(z0, xi, k as usize);
                let predicted = 2.0 * ((1.0 - z0) / (1.0 + z0)) * delta.powi(2 * k);
                asym_dev = asym_dev.max(((1.0 - r) / predicted - 1.0).abs());
            }
            push(
                check_entry("asymptotic_deviation", asym_dev, tols.get("asymptotic_deviation")),
                &mut all_pass,
            );
        }
    }

    let mut inputs = JsonValue::object();
    inputs
        .push("suite", suite_name)
        .push("n", n)
        .push("seed", JsonValue::Int(seed as i64));

    let mut doc = new_report("verify");
    doc.push("inputs", inputs)
        .push("tolerances", tols.to_json())
        .push("checks", JsonValue::Array(checks))
        .push("pass", all_pass);
    if let JsonValue::Object(entries) = &extra_outputs {
        if !entries.is_empty() {
            doc.push("outputs", extra_outputs);
        }
    }
    emit(out, &doc.to_string())?;
    Ok(if all_pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}
