//! Computational Poincaré-disk model.
//!
//! The open unit disk `D` carries the hyperbolic metric `4|dz|²/(1-|z|²)²`.
//! This module provides the distance in both of its closed forms, the
//! point-at-infinity arithmetic needed by Möbius transformations, disk
//! automorphisms with their fixed points / classification / normal forms,
//! and the Euclidean-circle representations of hyperbolic curves.

use num_complex::Complex64;
use thiserror::Error;

mod circle;
mod moebius;

pub use circle::{
    circle_circle_intersections, circumcircle_through, CurveClass, GeneralizedCircle,
};
pub use moebius::{invariant_curve, AutomorphismClass, MoebiusMap, NormalForm, NormalFormKind};

/// Module-wide tolerance for discontinuous classification tests
/// ("on the unit circle", "coincident fixed points", tangency).
pub const EPS_GEO: f64 = 1e-10;

#[derive(Debug, Error, PartialEq)]
pub enum GeometryError {
    #[error("point lies outside the open unit disk: |z| = {modulus}")]
    OutsideDisk { modulus: f64 },
    #[error("degenerate Möbius map: ad - bc = 0")]
    DegenerateMap,
    #[error("map is the identity: every point fixed")]
    IdentityMap,
    #[error("map is not an automorphism of the unit disk")]
    NotAutomorphism,
    #[error("degenerate circle: radius below tolerance")]
    DegenerateCircle,
    #[error("coincident points do not determine a circle")]
    CoincidentPoints,
    #[error("degenerate orbit: starting point is fixed by the map")]
    DegenerateOrbit,
}

/// A point of the Riemann sphere `ℂ ∪ {∞}`.
///
/// Infinity is a distinct variant, never encoded as large floats.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ExtendedComplex {
    Finite(Complex64),
    Infinity,
}

impl ExtendedComplex {
    pub fn is_infinity(&self) -> bool {
        matches!(self, ExtendedComplex::Infinity)
    }

    pub fn as_finite(&self) -> Option<Complex64> {
        match self {
            ExtendedComplex::Finite(z) => Some(*z),
            ExtendedComplex::Infinity => None,
        }
    }

    /// Chordal distance on the sphere; puts `∞` at finite distance so that
    /// approximate comparisons work uniformly.
    pub fn chordal_distance(&self, other: &ExtendedComplex) -> f64 {
        match (self, other) {
            (ExtendedComplex::Infinity, ExtendedComplex::Infinity) => 0.0,
            (ExtendedComplex::Finite(z), ExtendedComplex::Infinity)
            | (ExtendedComplex::Infinity, ExtendedComplex::Finite(z)) => {
                2.0 / (1.0 + z.norm_sqr()).sqrt()
            }
            (ExtendedComplex::Finite(z), ExtendedComplex::Finite(w)) => {
                2.0 * (z - w).norm() / ((1.0 + z.norm_sqr()) * (1.0 + w.norm_sqr())).sqrt()
            }
        }
    }

    pub fn approx_eq(&self, other: &ExtendedComplex, tol: f64) -> bool {
        self.chordal_distance(other) <= tol
    }
}

impl From<Complex64> for ExtendedComplex {
    fn from(z: Complex64) -> Self {
        ExtendedComplex::Finite(z)
    }
}

/// A point strictly inside the unit disk; the state space of the artifact.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiskPoint(Complex64);

impl DiskPoint {
    /// Rejects `|z| ≥ 1`.
    pub fn new(z: Complex64) -> Result<Self, GeometryError> {
        if z.norm_sqr() < 1.0 {
            Ok(DiskPoint(z))
        } else {
            Err(GeometryError::OutsideDisk { modulus: z.norm() })
        }
    }

    pub fn from_re_im(re: f64, im: f64) -> Result<Self, GeometryError> {
        DiskPoint::new(Complex64::new(re, im))
    }

    pub fn origin() -> Self {
        DiskPoint(Complex64::new(0.0, 0.0))
    }

    pub fn value(&self) -> Complex64 {
        self.0
    }

    pub fn modulus(&self) -> f64 {
        self.0.norm()
    }
}

/// `1/conj(z)` on the sphere, with `0 ↔ ∞`. Fixes the unit circle pointwise.
pub fn circle_inversion(z: ExtendedComplex) -> ExtendedComplex {
    match z {
        ExtendedComplex::Infinity => ExtendedComplex::Finite(Complex64::new(0.0, 0.0)),
        ExtendedComplex::Finite(z) if z == Complex64::new(0.0, 0.0) => ExtendedComplex::Infinity,
        ExtendedComplex::Finite(z) => ExtendedComplex::Finite(z.conj().inv()),
    }
}

/// Hyperbolic distance `d(z,w) = ln((|z̄w - 1| + |z - w|)/(|z̄w - 1| - |z - w|))`.
///
/// The denominator is rewritten through the identity
/// `|1 - z̄w|² = |z - w|² + (1 - |z|²)(1 - |w|²)` so the subtraction stays
/// accurate near the boundary, and the log goes through `ln_1p` so small
/// separations keep full relative accuracy.
pub fn hyperbolic_distance(z: DiskPoint, w: DiskPoint) -> f64 {
    let z = z.value();
    let w = w.value();
    let b = (z - w).norm();
    if b == 0.0 {
        return 0.0;
    }
    let a = (z.conj() * w - Complex64::new(1.0, 0.0)).norm();
    let diff = (1.0 - z.norm_sqr()) * (1.0 - w.norm_sqr()) / (a + b);
    (2.0 * b / diff).ln_1p()
}

/// The conformal invariant `δ(z,w) = |z-w|² / ((1-|z|²)(1-|w|²))`.
pub fn delta_invariant(z: DiskPoint, w: DiskPoint) -> f64 {
    let z = z.value();
    let w = w.value();
    (z - w).norm_sqr() / ((1.0 - z.norm_sqr()) * (1.0 - w.norm_sqr()))
}

/// Alternative distance formula `d(z,w) = arcosh(1 + 2δ(z,w))`.
pub fn hyperbolic_distance_arcosh(z: DiskPoint, w: DiskPoint) -> f64 {
    let d = delta_invariant(z, w);
    // arcosh(1 + 2δ) = ln(1 + 2δ + 2√(δ(1+δ)))
    (2.0 * d + 2.0 * (d * (1.0 + d)).sqrt()).ln_1p()
}

/// Signed hyperbolic coordinate of `m ∈ (-1, 1)` along a diameter,
/// i.e. `sgn(m)·d(0, |m|)`. Inverse of [`euclidean_radius`].
pub fn hyperbolic_radius(m: f64) -> f64 {
    debug_assert!(m.abs() < 1.0);
    ((1.0 + m) / (1.0 - m)).ln()
}

/// Euclidean radius with hyperbolic distance `x` from the origin (signed).
pub fn euclidean_radius(x: f64) -> f64 {
    (x / 2.0).tanh()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dp(re: f64, im: f64) -> DiskPoint {
        DiskPoint::from_re_im(re, im).unwrap()
    }

    #[test]
    fn construction_rejects_boundary_and_outside() {
        assert!(DiskPoint::from_re_im(1.0, 0.0).is_err());
        assert!(DiskPoint::from_re_im(0.8, 0.7).is_err());
        assert!(DiskPoint::from_re_im(0.999, 0.0).is_ok());
    }

    #[test]
    fn distance_zero_iff_coincident() {
        assert_eq!(hyperbolic_distance(dp(0.0, 0.0), dp(0.0, 0.0)), 0.0);
        assert!(hyperbolic_distance(dp(0.1, 0.2), dp(0.1, 0.2)) == 0.0);
        assert!(hyperbolic_distance(dp(0.0, 0.0), dp(1e-8, 0.0)) > 0.0);
    }

    #[test]
    fn distance_from_origin_is_log_ratio() {
        // d(0, 0.5) = ln 3
        let d = hyperbolic_distance(dp(0.0, 0.0), dp(0.5, 0.0));
        assert!((d - 3.0_f64.ln()).abs() < 1e-15, "d = {d}");
    }

    #[test]
    fn arcosh_form_matches_log_form() {
        // δ(0, 0.5) = 1/3 and arcosh(5/3) = ln 3
        let z = dp(0.0, 0.0);
        let w = dp(0.5, 0.0);
        assert!((delta_invariant(z, w) - 1.0 / 3.0).abs() < 1e-15);
        let d = hyperbolic_distance_arcosh(z, w);
        assert!((d - 3.0_f64.ln()).abs() < 1e-15, "d = {d}");
    }

    #[test]
    fn distance_is_symmetric() {
        let z = dp(0.3, -0.4);
        let w = dp(-0.7, 0.1);
        let d1 = hyperbolic_distance(z, w);
        let d2 = hyperbolic_distance(w, z);
        assert!((d1 - d2).abs() < 1e-15);
    }

    #[test]
    fn inversion_swaps_origin_and_infinity() {
        let half = ExtendedComplex::Finite(Complex64::new(0.5, 0.0));
        let two = circle_inversion(half);
        assert!(two.approx_eq(&ExtendedComplex::Finite(Complex64::new(2.0, 0.0)), 1e-15));

        let zero = ExtendedComplex::Finite(Complex64::new(0.0, 0.0));
        assert!(circle_inversion(zero).is_infinity());
        assert_eq!(circle_inversion(ExtendedComplex::Infinity), zero);

        // unit-modulus points are fixed
        let u = ExtendedComplex::Finite(Complex64::new(0.6, 0.8));
        assert!(circle_inversion(u).approx_eq(&u, 1e-15));
    }

    #[test]
    fn radius_coordinates_round_trip() {
        for &m in &[0.0, 0.3, -0.5, 0.95] {
            let x = hyperbolic_radius(m);
            assert!((euclidean_radius(x) - m).abs() < 1e-15);
        }
        assert!((hyperbolic_radius(0.5) - 3.0_f64.ln()).abs() < 1e-15);
    }
}
