use std::path::PathBuf;
use std::process::ExitCode;

use num_complex::Complex64;

use disk_squeeze_core::dynamics::{evolve, is_stationary, trajectory_curve};
use disk_squeeze_core::geometry::EPS_GEO;
use disk_squeeze_core::json::JsonValue;

use crate::report::{emit, extended_json, new_report};
use crate::svg::SvgCanvas;
use crate::OutputFormat;

#[allow(clippy::too_many_arguments)]
pub fn run(
    omega: f64,
    alpha: Complex64,
    z0: Complex64,
    t_max: f64,
    samples: usize,
    format: OutputFormat,
    out: &Option<PathBuf>,
) -> Result<ExitCode, String> {
    let h = super::hamiltonian(omega, alpha)?;
    let z0 = super::disk_point(z0, "--z0")?;
    if samples == 0 {
        return Err("--samples must be positive".into());
    }
    if is_stationary(&h, z0) {
        let fixed = h
            .fixed_points()
            .map(|(xi, _)| format!("{:?}", xi))
            .unwrap_or_else(|_| "every point (zero Hamiltonian)".into());
        return Err(format!(
            "z0 is a fixed point of the flow: stationary at {fixed}"
        ));
    }
    let (carrier, class) = trajectory_curve(&h, z0).map_err(|e| e.to_string())?;

    let points: Vec<(f64, Complex64)> = (0..samples)
        .map(|i| {
            let t = if samples == 1 {
                0.0
            } else {
                t_max * i as f64 / (samples - 1) as f64
            };
            (t, evolve(&h, z0, t).value())
        })
        .collect();

    let mut inputs = JsonValue::object();
    inputs
        .push("omega", omega)
        .push("alpha", JsonValue::complex(alpha))
        .push("z0", JsonValue::complex(z0.value()))
        .push("t_max", t_max)
        .push("samples", samples);

    let mut carrier_doc = carrier.to_json();
    carrier_doc.push("class", class.as_str());

    let mut outputs = JsonValue::object();
    outputs
        .push("regime", h.classify().as_str())
        .push("carrier", carrier_doc)
        .push(
            "trajectory",
            JsonValue::Array(
                points
                    .iter()
                    .map(|(t, z)| {
                        let mut entry = JsonValue::object();
                        entry.push("t", *t).push("z", JsonValue::complex(*z));
                        entry
                    })
                    .collect(),
            ),
        );
    if let Ok(fp) = h.fixed_points() {
        outputs
            .push("xi_minus", extended_json(fp.0))
            .push("xi_plus", extended_json(fp.1));
    }

    let mut tolerances = JsonValue::object();
    tolerances.push("eps_geo", EPS_GEO);

    let mut doc = new_report("trajectory");
    doc.push("inputs", inputs)
        .push("tolerances", tolerances)
        .push("outputs", outputs);

    match format {
        OutputFormat::Json => emit(out, &doc.to_string())?,
        OutputFormat::Svg => {
            let mut canvas = SvgCanvas::new();
            canvas.stroke_curve(&carrier, "#1f77b4");
            let zs: Vec<Complex64> = points.iter().map(|(_, z)| *z).collect();
            canvas.polyline(&zs, "#d62728");
            canvas.dot(z0.value(), "#2ca02c");
            emit(out, &canvas.render(&doc))?;
        }
    }
    Ok(ExitCode::SUCCESS)
}
