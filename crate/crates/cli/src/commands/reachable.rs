use std::path::PathBuf;
use std::process::ExitCode;

use num_complex::Complex64;

use disk_squeeze_core::control::{free_reachable_set, unstable_reachable_set, ReachableSet};
use disk_squeeze_core::geometry::EPS_GEO;
use disk_squeeze_core::json::JsonValue;

use crate::report::{emit, new_report};
use crate::svg::SvgCanvas;
use crate::{OutputFormat, ReachableCase};

#[allow(clippy::too_many_arguments)]
pub fn run(
    case: ReachableCase,
    omega0: f64,
    alpha0: Complex64,
    omega1: f64,
    alpha1: Complex64,
    z0: Complex64,
    steps: u8,
    format: OutputFormat,
    out: &Option<PathBuf>,
) -> Result<ExitCode, String> {
    let z0 = super::disk_point(z0, "--z0")?;
    let h0 = super::hamiltonian(omega0, alpha0)?;
    let h1 = super::hamiltonian(omega1, alpha1)?;

    let (case_name, set) = match case {
        ReachableCase::Free => {
            if !(1..=3).contains(&steps) {
                return Err("--steps must be 1, 2 or 3".into());
            }
            let set = free_reachable_set(z0, &h0, &h1, steps).map_err(|e| e.to_string())?;
            ("free", set)
        }
        ReachableCase::Unstable => {
            let set = unstable_reachable_set(z0, &h0, &h1).map_err(|e| e.to_string())?;
            ("unstable", set)
        }
    };

    let mut inputs = JsonValue::object();
    inputs
        .push("case", case_name)
        .push("omega0", omega0)
        .push("alpha0", JsonValue::complex(alpha0))
        .push("omega1", omega1)
        .push("alpha1", JsonValue::complex(alpha1))
        .push("z0", JsonValue::complex(z0.value()));
    if case == ReachableCase::Free {
        inputs.push("steps", steps as usize);
    }

    let mut tolerances = JsonValue::object();
    tolerances.push("eps_geo", EPS_GEO);

    let mut doc = new_report("reachable");
    doc.push("inputs", inputs)
        .push("tolerances", tolerances)
        .push("outputs", set.to_json());

    match format {
        OutputFormat::Json => emit(out, &doc.to_string())?,
        OutputFormat::Svg => {
            let mut canvas = SvgCanvas::new();
            canvas.fill_reachable(&set, "#1f77b4");
            if let ReachableSet::Region(polygon) = &set {
                for edge in &polygon.edges {
                    canvas.stroke_curve(&edge.carrier, "#aec7e8");
                }
            }
            canvas.dot(z0.value(), "#2ca02c");
            emit(out, &canvas.render(&doc))?;
        }
    }
    Ok(ExitCode::SUCCESS)
}
