//! Quadratic-Hamiltonian flows on the Poincaré disk.
//!
//! `H = ω a*a + (α/2) a² + (ᾱ/2) a*²` generates a one-parameter group of
//! disk automorphisms `M(t)`. The regime is decided by the sign of
//! `ω - |α|`: stable (elliptic motion on hyperbolic circles around the
//! in-disk fixed point), free (parabolic motion on horocycles) and unstable
//! (hyperbolic motion along hypercycles between two boundary fixed points).

use num_complex::Complex64;
use thiserror::Error;

use crate::geometry::{
    invariant_curve, CurveClass, DiskPoint, ExtendedComplex, GeneralizedCircle, GeometryError,
    MoebiusMap, EPS_GEO,
};

#[derive(Debug, Error, PartialEq)]
pub enum DynamicsError {
    #[error("frequency must be nonnegative, got {omega}")]
    NegativeFrequency { omega: f64 },
    #[error("zero Hamiltonian: fixed points are undefined")]
    ZeroHamiltonian,
    #[error("stationary ray/point: z0 = {z0} is fixed by the flow")]
    StationaryPoint { z0: Complex64 },
}

/// The pair `(ω, α)` parameterizing `H = ω a*a + (α/2) a² + (ᾱ/2) a*²`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadraticHamiltonian {
    omega: f64,
    alpha: Complex64,
}

/// Spectral regime, carrying the oscillation rate `λ = √(ω² - |α|²)` or the
/// squeezing rate `γ = √(|α|² - ω²)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SpectralClass {
    Stable { lambda: f64 },
    Free,
    Unstable { gamma: f64 },
}

impl SpectralClass {
    pub fn as_str(&self) -> &'static str {
        match self {
            SpectralClass::Stable { .. } => "stable",
            SpectralClass::Free => "free",
            SpectralClass::Unstable { .. } => "unstable",
        }
    }
}

/// The Möbius motion at a fixed time, with its regime metadata.
#[derive(Debug, Clone, Copy)]
pub struct FlowResult {
    pub map: MoebiusMap,
    pub class: SpectralClass,
    /// `(ξ₋, ξ₊)`; `None` only for the zero Hamiltonian, whose flow is the
    /// identity and fixes every point.
    pub fixed_points: Option<(ExtendedComplex, ExtendedComplex)>,
}

impl QuadraticHamiltonian {
    pub fn new(omega: f64, alpha: Complex64) -> Result<Self, DynamicsError> {
        if !(omega >= 0.0) {
            return Err(DynamicsError::NegativeFrequency { omega });
        }
        Ok(QuadraticHamiltonian { omega, alpha })
    }

    pub fn omega(&self) -> f64 {
        self.omega
    }

    pub fn alpha(&self) -> Complex64 {
        self.alpha
    }

    pub fn is_zero(&self) -> bool {
        self.omega == 0.0 && self.alpha == Complex64::new(0.0, 0.0)
    }

    /// Relative width of the band around `ω = |α|` treated as the free case.
    fn classification_band(&self) -> f64 {
        1e-12 * self.omega.max(self.alpha.norm()).max(1.0)
    }

    /// Spectral classification by the sign of `ω - |α|`.
    ///
    /// Rates are computed through `√(|ω - |α||·(ω + |α|))`, which stays
    /// accurate next to the classification boundary.
    pub fn classify(&self) -> SpectralClass {
        let a = self.alpha.norm();
        let gap = self.omega - a;
        if gap.abs() <= self.classification_band() {
            SpectralClass::Free
        } else if gap > 0.0 {
            SpectralClass::Stable {
                lambda: (gap * (self.omega + a)).sqrt(),
            }
        } else {
            SpectralClass::Unstable {
                gamma: (-gap * (self.omega + a)).sqrt(),
            }
        }
    }

    /// The spectrum of `H` in the given regime, as display text.
    pub fn spectrum_description(&self) -> String {
        match self.classify() {
            SpectralClass::Stable { lambda } => format!(
                "pure point: lambda*(n + 1/2) - omega/2 for n = 0, 1, 2, ... (lambda = {lambda:.12e})"
            ),
            SpectralClass::Free => format!(
                "absolutely continuous: [-omega, inf) (omega = {:.12e})",
                self.omega
            ),
            SpectralClass::Unstable { .. } => "absolutely continuous: (-inf, inf)".to_owned(),
        }
    }

    /// Fixed points `ξ∓ = (ω ∓ √(ω² - |α|²))/α` of the flow, ordered so that
    /// `ξ₋` is the in-disk point in the stable case and the `t → -∞` limit in
    /// the unstable case. `α = 0` gives `(0, ∞)`.
    pub fn fixed_points(
        &self,
    ) -> Result<(ExtendedComplex, ExtendedComplex), DynamicsError> {
        if self.is_zero() {
            return Err(DynamicsError::ZeroHamiltonian);
        }
        if self.alpha == Complex64::new(0.0, 0.0) {
            return Ok((
                ExtendedComplex::Finite(Complex64::new(0.0, 0.0)),
                ExtendedComplex::Infinity,
            ));
        }
        match self.classify() {
            SpectralClass::Stable { lambda } => {
                // (ω - λ)/α rewritten as ᾱ/(ω + λ) to avoid cancellation.
                let xi_minus = self.alpha.conj() / (self.omega + lambda);
                let xi_plus = Complex64::new(self.omega + lambda, 0.0) / self.alpha;
                Ok((
                    ExtendedComplex::Finite(xi_minus),
                    ExtendedComplex::Finite(xi_plus),
                ))
            }
            SpectralClass::Free => {
                let xi = Complex64::new(self.omega, 0.0) / self.alpha;
                Ok((ExtendedComplex::Finite(xi), ExtendedComplex::Finite(xi)))
            }
            SpectralClass::Unstable { gamma } => {
                let xi_minus = Complex64::new(self.omega, -gamma) / self.alpha;
                let xi_plus = Complex64::new(self.omega, gamma) / self.alpha;
                Ok((
                    ExtendedComplex::Finite(xi_minus),
                    ExtendedComplex::Finite(xi_plus),
                ))
            }
        }
    }

    /// The in-disk stable fixed point `ξ₋`, as a disk point.
    pub fn ground_state_point(&self) -> Result<DiskPoint, DynamicsError> {
        match self.classify() {
            SpectralClass::Stable { lambda } => {
                let xi = if self.alpha == Complex64::new(0.0, 0.0) {
                    Complex64::new(0.0, 0.0)
                } else {
                    self.alpha.conj() / (self.omega + lambda)
                };
                Ok(DiskPoint::new(xi).expect("stable ξ₋ lies inside the disk"))
            }
            _ => Err(DynamicsError::ZeroHamiltonian),
        }
    }
}

/// The Möbius map `z ↦ z(t)` of the flow, `M(0) = id`, with the group law
/// `flow(s) ∘ flow(t) ≡ flow(s + t)` up to projective scale.
pub fn flow(h: &QuadraticHamiltonian, t: f64) -> FlowResult {
    let class = h.classify();
    let omega = h.omega();
    let alpha = h.alpha();
    let map = if alpha == Complex64::new(0.0, 0.0) {
        // Pure oscillator: rotation z ↦ z e^{-2iωt}.
        MoebiusMap {
            a: Complex64::from_polar(1.0, -omega * t),
            b: Complex64::new(0.0, 0.0),
            c: Complex64::new(0.0, 0.0),
            d: Complex64::from_polar(1.0, omega * t),
        }
    } else {
        match class {
            SpectralClass::Stable { lambda } => {
                let co = lambda * (lambda * t).cos();
                let si = (lambda * t).sin();
                MoebiusMap {
                    a: Complex64::new(co, -omega * si),
                    b: Complex64::new(0.0, 1.0) * alpha.conj() * si,
                    c: Complex64::new(0.0, -1.0) * alpha * si,
                    d: Complex64::new(co, omega * si),
                }
            }
            SpectralClass::Free => MoebiusMap {
                a: Complex64::new(1.0, -omega * t),
                b: Complex64::new(0.0, 1.0) * alpha.conj() * t,
                c: Complex64::new(0.0, -1.0) * alpha * t,
                d: Complex64::new(1.0, omega * t),
            },
            SpectralClass::Unstable { gamma } => {
                let sh = (gamma * t).sinh();
                let ch = gamma * (gamma * t).cosh();
                MoebiusMap {
                    a: Complex64::new(-ch, omega * sh),
                    b: Complex64::new(0.0, -1.0) * alpha.conj() * sh,
                    c: Complex64::new(0.0, 1.0) * alpha * sh,
                    d: Complex64::new(-ch, -omega * sh),
                }
            }
        }
    };
    FlowResult {
        map,
        class,
        fixed_points: h.fixed_points().ok(),
    }
}

/// `z(t) = M(t) z₀`; stays strictly inside the disk.
pub fn evolve(h: &QuadraticHamiltonian, z0: DiskPoint, t: f64) -> DiskPoint {
    let w = flow(h, t).map.apply_finite(z0.value());
    DiskPoint::new(w).unwrap_or_else(|_| {
        // Rounding at the boundary can overshoot by an ulp; pull back inside.
        let n = w.norm();
        DiskPoint::new(w / n * (1.0 - 1e-15))
            .expect("rescaled point lies inside the disk")
    })
}

/// The invariant curve traced by the trajectory through `z0`: a hyperbolic
/// circle around `ξ₋` (stable), a horocycle at `ξ` (free), or a hypercycle
/// through `ξ∓` (unstable; the hyperbolic line through them when `z0` lies
/// on their axis).
pub fn trajectory_curve(
    h: &QuadraticHamiltonian,
    z0: DiskPoint,
) -> Result<(GeneralizedCircle, CurveClass), DynamicsError> {
    if h.is_zero() {
        return Err(DynamicsError::StationaryPoint { z0: z0.value() });
    }
    let rate = match h.classify() {
        SpectralClass::Stable { lambda } => lambda,
        SpectralClass::Free => 0.0,
        SpectralClass::Unstable { gamma } => gamma,
    };
    // Sample time keeping the three orbit points separated but distinct.
    let t_star = 0.1 * (1.0f64).min(1.0 / rate.max(h.omega()).max(1.0));
    let m = flow(h, t_star).map;
    invariant_curve(&m, z0).map_err(|e| match e {
        GeometryError::DegenerateOrbit | GeometryError::IdentityMap => {
            DynamicsError::StationaryPoint { z0: z0.value() }
        }
        other => panic!("flow map must be an automorphism: {other}"),
    })
}

/// Time of a full revolution, `π/λ`; only periodic in the stable regime.
pub fn period(h: &QuadraticHamiltonian) -> Option<f64> {
    match h.classify() {
        SpectralClass::Stable { lambda } if lambda > 0.0 => Some(std::f64::consts::PI / lambda),
        _ => None,
    }
}

/// Limits of `z(t)` as `t → ∓∞`, namely `(ξ₋, ξ₊)`; only the unstable flow
/// converges. Interior points are never fixed in this regime, so `z0` only
/// selects the trajectory.
pub fn asymptotic_limits(
    h: &QuadraticHamiltonian,
    _z0: DiskPoint,
) -> Option<(ExtendedComplex, ExtendedComplex)> {
    match h.classify() {
        SpectralClass::Unstable { .. } => h.fixed_points().ok(),
        _ => None,
    }
}

/// Whether `z0` is fixed by the flow of `h` (stationary trajectory).
pub fn is_stationary(h: &QuadraticHamiltonian, z0: DiskPoint) -> bool {
    if h.is_zero() {
        return true;
    }
    match h.fixed_points() {
        Ok((xi_minus, _)) => {
            ExtendedComplex::Finite(z0.value()).chordal_distance(&xi_minus) <= EPS_GEO
        }
        Err(_) => true,
    }
}
