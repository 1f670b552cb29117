//! Adiabatic control: under the linear drive `α(t) = (1-t)α₀ + tα₁` with the
//! gap condition `ω² > |α(t)|²`, the ground-state point `ξ₋(t)` traces a
//! hyperbolic line segment. Rotating so the `α` segment is parallel to the
//! real axis and displaced by `ib`, the fixed points satisfy
//! `|ξ∓(t) + iω/b|² = ω²/b² - 1`, so the carrier circle has center `-iω/b`
//! and radius `√(ω²/b² - 1)`, which meets the unit circle orthogonally.

use num_complex::Complex64;

use crate::geometry::{DiskPoint, GeneralizedCircle};
use crate::json::JsonValue;

use super::ControlError;

/// The sampled curve `t ↦ ξ₋(t)` with its carrier hyperbolic line.
#[derive(Debug, Clone, PartialEq)]
pub struct AdiabaticPath {
    pub samples: Vec<(f64, DiskPoint)>,
    pub carrier: GeneralizedCircle,
}

impl AdiabaticPath {
    /// Largest deviation of the samples from the carrier.
    pub fn max_carrier_residual(&self) -> f64 {
        self.samples
            .iter()
            .map(|(_, p)| self.carrier.distance_to(p.value()))
            .fold(0.0, f64::max)
    }

    pub fn to_json(&self) -> JsonValue {
        let mut doc = JsonValue::object();
        doc.push(
            "samples",
            JsonValue::Array(
                self.samples
                    .iter()
                    .map(|(t, p)| {
                        let mut entry = JsonValue::object();
                        entry.push("t", *t).push("xi", JsonValue::complex(p.value()));
                        entry
                    })
                    .collect(),
            ),
        );
        doc.push("carrier", self.carrier.to_json());
        doc
    }
}

/// `ξ₋` of the stable Hamiltonian `(ω, α)`, in the cancellation-free form
/// `ᾱ/(ω + λ)` that stays smooth through `α = 0`.
fn xi_minus(omega: f64, alpha: Complex64) -> Complex64 {
    let lambda = (omega * omega - alpha.norm_sqr()).sqrt();
    alpha.conj() / (omega + lambda)
}

/// Samples of `ξ₋(t)` along the linear interpolation, with the carrier of
/// the traced hyperbolic line segment.
pub fn adiabatic_path(
    omega: f64,
    alpha0: Complex64,
    alpha1: Complex64,
    samples: usize,
) -> Result<AdiabaticPath, ControlError> {
    assert!(samples >= 1, "at least one sample required");
    if let Some(t) = gap_closure_time(omega, alpha0, alpha1) {
        return Err(ControlError::GapClosed { t });
    }

    let step = alpha1 - alpha0;
    let points: Vec<(f64, DiskPoint)> = (0..samples)
        .map(|j| {
            let t = if samples == 1 {
                0.0
            } else {
                j as f64 / (samples - 1) as f64
            };
            let alpha = alpha0 + step * t;
            let xi = DiskPoint::new(xi_minus(omega, alpha))
                .expect("the gap condition keeps ξ₋ inside the disk");
            (t, xi)
        })
        .collect();

    let carrier = if step.norm() <= 1e-15 {
        // Constant Hamiltonian: a single point; carry it on the diameter
        // through ξ₋(0) (any hyperbolic line through the point would do).
        let xi = points[0].1.value();
        let direction = if xi.norm() > 1e-15 {
            xi / xi.norm()
        } else {
            Complex64::new(1.0, 0.0)
        };
        GeneralizedCircle::line(Complex64::new(0.0, 0.0), direction)
            .expect("unit direction is nonzero")
    } else {
        // Rotate the frame so α(t) runs parallel to the real axis.
        let phase = step / step.norm();
        let b = (phase.conj() * alpha0).im;
        if b.abs() <= 1e-12 * omega {
            // The α segment points at the origin: ξ₋(t) runs on a diameter.
            GeneralizedCircle::line(Complex64::new(0.0, 0.0), phase.conj())
                .expect("unit direction is nonzero")
        } else {
            let center = phase.conj() * Complex64::new(0.0, -omega / b);
            let radius = (omega * omega / (b * b) - 1.0).sqrt();
            GeneralizedCircle::circle(center, radius).expect("gap condition gives ω² > b²")
        }
    };

    Ok(AdiabaticPath {
        samples: points,
        carrier,
    })
}

/// Earliest `t ∈ [0, 1]` where `|α(t)|² ≥ ω²`, if the gap closes. `|α(t)|²`
/// is convex in `t`, so a closure shows up as a sign change or a violated
/// endpoint.
fn gap_closure_time(omega: f64, alpha0: Complex64, alpha1: Complex64) -> Option<f64> {
    let d = alpha1 - alpha0;
    let a = d.norm_sqr();
    let b = 2.0 * (alpha0.conj() * d).re;
    let c = alpha0.norm_sqr() - omega * omega;
    if c >= 0.0 {
        return Some(0.0);
    }
    if a == 0.0 {
        return None;
    }
    // Convex with f(0) < 0: the positive root is the first crossing.
    let disc = b * b - 4.0 * a * c;
    let t = (-b + disc.sqrt()) / (2.0 * a);
    (0.0..=1.0).contains(&t).then_some(t)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn carrier_matches_the_rotated_frame_formula() {
        // ω = 2, α: 1+i → -1+i: carrier center -2i, radius √3.
        let path = adiabatic_path(2.0, Complex64::new(1.0, 1.0), Complex64::new(-1.0, 1.0), 101)
            .unwrap();
        match path.carrier {
            GeneralizedCircle::Circle { center, radius } => {
                assert!((center - Complex64::new(0.0, -2.0)).norm() < 1e-12);
                assert!((radius - 3.0f64.sqrt()).abs() < 1e-12);
                // orthogonality to the unit circle
                assert!((center.norm_sqr() - (1.0 + radius * radius)).abs() < 1e-12);
            }
            ref other => panic!("expected circle, got {other:?}"),
        }

        // ξ₋(0) = (2-√2)(1-i)/2 and the carrier identity |ξ+2i|² = 3.
        let xi0 = path.samples[0].1.value();
        let expected = (2.0 - 2.0f64.sqrt()) / 2.0 * Complex64::new(1.0, -1.0);
        assert!((xi0 - expected).norm() < 1e-12);
        assert!(((xi0 + Complex64::new(0.0, 2.0)).norm_sqr() - 3.0).abs() < 1e-12);

        assert!(path.max_carrier_residual() <= 1e-12);
        assert_eq!(path.samples.len(), 101);
        assert_eq!(path.samples[0].0, 0.0);
        assert_eq!(path.samples[100].0, 1.0);
    }

    #[test]
    fn constant_drive_gives_a_single_point() {
        let alpha = Complex64::new(0.7, 0.2);
        let path = adiabatic_path(2.0, alpha, alpha, 5).unwrap();
        let first = path.samples[0].1.value();
        for (_, p) in &path.samples {
            assert!((p.value() - first).norm() < 1e-15);
        }
        assert!(path.max_carrier_residual() <= 1e-12);
    }

    #[test]
    fn real_drive_runs_along_the_real_diameter() {
        let path =
            adiabatic_path(2.0, Complex64::new(0.5, 0.0), Complex64::new(1.0, 0.0), 11).unwrap();
        match path.carrier {
            GeneralizedCircle::Line { point, direction } => {
                assert!(point.norm() < 1e-15);
                assert!(direction.im.abs() < 1e-15);
            }
            ref other => panic!("expected line, got {other:?}"),
        }
        for (_, p) in &path.samples {
            assert!(p.value().im.abs() < 1e-15);
        }
        // ξ₋(1) = (2-√3)/1
        let last = path.samples[10].1.value();
        assert!((last.re - (2.0 - 3.0f64.sqrt())).abs() < 1e-12);
    }

    #[test]
    fn gap_closure_is_located() {
        // ω = 1, α: 0.9 → 1.1 crosses |α| = 1 at t = 0.5.
        let err = adiabatic_path(1.0, Complex64::new(0.9, 0.0), Complex64::new(1.1, 0.0), 3)
            .unwrap_err();
        match err {
            ControlError::GapClosed { t } => assert!((t - 0.5).abs() < 1e-12, "t = {t}"),
            other => panic!("expected GapClosed, got {other:?}"),
        }

        let err = adiabatic_path(0.5, Complex64::new(0.9, 0.0), Complex64::new(0.2, 0.0), 3)
            .unwrap_err();
        assert_eq!(err, ControlError::GapClosed { t: 0.0 });
    }

    #[test]
    fn path_through_zero_alpha_stays_on_the_diameter() {
        // α crosses 0 at t = 0.5; ξ₋ passes smoothly through the origin.
        let path =
            adiabatic_path(1.0, Complex64::new(-0.5, 0.0), Complex64::new(0.5, 0.0), 21).unwrap();
        assert!(path.max_carrier_residual() <= 1e-12);
        let mid = path.samples[10].1.value();
        assert!(mid.norm() < 1e-12);
    }
}
