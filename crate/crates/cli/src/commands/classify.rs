use std::path::PathBuf;
use std::process::ExitCode;

use num_complex::Complex64;

use disk_squeeze_core::dynamics::SpectralClass;
use disk_squeeze_core::json::JsonValue;

use crate::report::{emit, extended_json, new_report};

pub fn run(omega: f64, alpha: Complex64, out: &Option<PathBuf>) -> Result<ExitCode, String> {
    let h = super::hamiltonian(omega, alpha)?;
    let (xi_minus, xi_plus) = h.fixed_points().map_err(|e| e.to_string())?;
    let class = h.classify();

    let mut inputs = JsonValue::object();
    inputs
        .push("omega", omega)
        .push("alpha", JsonValue::complex(alpha));

    let mut outputs = JsonValue::object();
    outputs.push("class", class.as_str());
    match class {
        SpectralClass::Stable { lambda } => {
            outputs.push("lambda", lambda);
        }
        SpectralClass::Unstable { gamma } => {
            outputs.push("gamma", gamma);
        }
        SpectralClass::Free => {}
    }
    outputs
        .push("xi_minus", extended_json(xi_minus))
        .push("xi_plus", extended_json(xi_plus))
        .push("spectrum", h.spectrum_description());

    let mut doc = new_report("classify");
    doc.push("inputs", inputs).push("outputs", outputs);
    emit(out, &doc.to_string())?;
    Ok(ExitCode::SUCCESS)
}
