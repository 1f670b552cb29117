use std::path::PathBuf;
use std::process::ExitCode;

use num_complex::Complex64;

use disk_squeeze_core::control::{
    bang_bang_bounds, bang_bang_feasible, min_switches, simulate_pulses, synthesize_pulses,
};
use disk_squeeze_core::dynamics::SpectralClass;
use disk_squeeze_core::json::JsonValue;

use crate::report::{emit, new_report};
use crate::BangbangMode;

#[allow(clippy::too_many_arguments)]
pub fn run(
    z0: Complex64,
    zf: Complex64,
    omega0: f64,
    omega1: f64,
    alpha1: Complex64,
    mode: BangbangMode,
    k: Option<usize>,
    out: &Option<PathBuf>,
) -> Result<ExitCode, String> {
    let z0 = super::disk_point(z0, "--z0")?;
    let zf = super::disk_point(zf, "--zf")?;
    let h0 = super::hamiltonian(omega0, Complex64::new(0.0, 0.0))?;
    let h1 = super::hamiltonian(omega1, alpha1)?;
    let SpectralClass::Stable { lambda } = h1.classify() else {
        return Err("H1 must be stable: omega1 > |alpha1|".into());
    };
    let xi_mod = alpha1.norm() / (omega1 + lambda);

    let mut inputs = JsonValue::object();
    inputs
        .push("z0", JsonValue::complex(z0.value()))
        .push("zf", JsonValue::complex(zf.value()))
        .push("omega0", omega0)
        .push("omega1", omega1)
        .push("alpha1", JsonValue::complex(alpha1))
        .push("xi_mod", xi_mod);

    let mut outputs = JsonValue::object();
    match mode {
        BangbangMode::Feasible => {
            let k = k.ok_or("--k is required for mode=feasible")?;
            let feasible = bang_bang_feasible(z0, zf, k, &h1).map_err(|e| e.to_string())?;
            let bounds = bang_bang_bounds(z0.modulus(), xi_mod, k);
            outputs
                .push("mode", "feasible")
                .push("k", k)
                .push("feasible", feasible)
                .push("min_radius", bounds.min_radius(k))
                .push("max_radius", bounds.max_radius(k));
        }
        BangbangMode::MinSwitches => {
            let k = min_switches(z0, zf, &h1).map_err(|e| e.to_string())?;
            outputs.push("mode", "min-switches").push("k", k);
        }
        BangbangMode::Synthesize => {
            let k = match k {
                Some(k) => k,
                None => min_switches(z0, zf, &h1).map_err(|e| e.to_string())?,
            };
            let pulses = synthesize_pulses(z0, zf, k, &h0, &h1).map_err(|e| e.to_string())?;
            let endpoint = simulate_pulses(z0, &h0, &h1, &pulses);
            let error = (endpoint.value() - zf.value()).norm();
            outputs
                .push("mode", "synthesize")
                .push("k", k)
                .push("pulses", pulses.to_json())
                .push("total_duration", pulses.total_duration())
                .push("endpoint", JsonValue::complex(endpoint.value()))
                .push("endpoint_error", error);
        }
    }

    let mut tolerances = JsonValue::object();
    tolerances.push("endpoint_tol", 1e-6).push("feasibility_slack", 1e-12);

    let mut doc = new_report("bangbang");
    doc.push("inputs", inputs)
        .push("tolerances", tolerances)
        .push("outputs", outputs);
    emit(out, &doc.to_string())?;
    Ok(ExitCode::SUCCESS)
}
