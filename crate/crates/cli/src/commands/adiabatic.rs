use std::path::PathBuf;
use std::process::ExitCode;

use num_complex::Complex64;

use disk_squeeze_core::control::adiabatic_path;
use disk_squeeze_core::json::JsonValue;

use crate::report::{emit, new_report};
use crate::svg::SvgCanvas;
use crate::OutputFormat;

pub fn run(
    omega: f64,
    alpha0: Complex64,
    alpha1: Complex64,
    samples: usize,
    format: OutputFormat,
    out: &Option<PathBuf>,
) -> Result<ExitCode, String> {
    if samples == 0 {
        return Err("--samples must be positive".into());
    }
    if !(omega > 0.0) {
        return Err("--omega must be positive".into());
    }
    let path = adiabatic_path(omega, alpha0, alpha1, samples).map_err(|e| e.to_string())?;

    let mut inputs = JsonValue::object();
    inputs
        .push("omega", omega)
        .push("alpha0", JsonValue::complex(alpha0))
        .push("alpha1", JsonValue::complex(alpha1))
        .push("samples", samples);

    let mut tolerances = JsonValue::object();
    tolerances.push("carrier_residual_tol", 1e-12);

    let mut outputs = path.to_json();
    outputs.push("max_carrier_residual", path.max_carrier_residual());

    let mut doc = new_report("adiabatic");
    doc.push("inputs", inputs)
        .push("tolerances", tolerances)
        .push("outputs", outputs);

    match format {
        OutputFormat::Json => emit(out, &doc.to_string())?,
        OutputFormat::Svg => {
            let mut canvas = SvgCanvas::new();
            canvas.stroke_curve(&path.carrier, "#1f77b4");
            let zs: Vec<Complex64> = path.samples.iter().map(|(_, p)| p.value()).collect();
            canvas.polyline(&zs, "#d62728");
            if let Some((_, first)) = path.samples.first() {
                canvas.dot(first.value(), "#2ca02c");
            }
            if let Some((_, last)) = path.samples.last() {
                canvas.dot(last.value(), "#9467bd");
            }
            emit(out, &canvas.render(&doc))?;
        }
    }
    Ok(ExitCode::SUCCESS)
}
