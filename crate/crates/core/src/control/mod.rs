//! Control solvers on the squeezed-state disk: bang-bang reachability and
//! pulse synthesis between two stable Hamiltonians, arc-polygon reachable
//! sets for the free and unstable regimes, and the adiabatic fixed-point
//! path with its hyperbolic-line carrier.

use num_complex::Complex64;
use thiserror::Error;

use crate::json::JsonValue;

mod adiabatic;
mod bangbang;
mod reachable;

pub use adiabatic::{adiabatic_path, AdiabaticPath};
pub use bangbang::{
    bang_bang_bounds, bang_bang_feasible, closed_form_max_radius, min_switches, simulate_pulses,
    synthesize_pulses, PulseSequence, PulseStep, ReachabilityBounds,
};
pub use reachable::{
    free_reachable_set, free_two_step_contains, free_two_step_durations, unstable_reachable_set,
    ArcEdge, ArcPolygon, ReachableSet,
};

#[derive(Debug, Error, PartialEq)]
pub enum ControlError {
    #[error("H1 must be stable (omega > |alpha|)")]
    NotStable,
    #[error("H0 must be a pure oscillator (alpha = 0, omega > 0)")]
    NotOscillator,
    #[error("both Hamiltonians must be free (omega = |alpha|)")]
    NotFree,
    #[error("both Hamiltonians must be unstable (omega < |alpha|)")]
    NotUnstable,
    #[error("target unreachable: H1 adds no squeezing (|xi| = 0) and |zf| differs from |z0|")]
    NoSqueezing,
    #[error("target infeasible for k = {k}: need {r:.12} <= |zf| = {zf:.12} <= {cap_r:.12}")]
    Infeasible { k: usize, r: f64, cap_r: f64, zf: f64 },
    #[error("degenerate pair: the two fixed points coincide")]
    DegeneratePair,
    #[error("adiabatic gap closes at t = {t:.6}: omega^2 <= |alpha(t)|^2")]
    GapClosed { t: f64 },
    #[error("pulse steps must alternate H0, H1, H0, ... with nonnegative durations")]
    MalformedSequence,
}

/// Serialize a list of disk points as `[[re, im], ...]`.
pub(crate) fn points_json(points: &[Complex64]) -> JsonValue {
    JsonValue::Array(points.iter().map(|p| JsonValue::complex(*p)).collect())
}
