//! Independent truncated Fock-space oracle.
//!
//! Squeezed states expand over the number basis as
//! `ψ(z) = (1-|z|²)^{1/4} Σₙ (-1/2)ⁿ zⁿ √((2n)!)/n! |2n⟩`, which gives exact
//! closed forms for overlaps and Hilbert-Schmidt distances. Truncating at
//! dimension `N` and evolving with the matrix of `H` gives a quantum-
//! mechanical check of the Möbius-flow picture that shares no code with it.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use thiserror::Error;

use crate::dynamics::QuadraticHamiltonian;
use crate::geometry::{hyperbolic_distance, DiskPoint};
use crate::json::JsonValue;

#[derive(Debug, Error, PartialEq)]
pub enum FockError {
    #[error("truncation dimension must be at least {min}, got {dim}")]
    DimensionTooSmall { dim: usize, min: usize },
    #[error("dimension mismatch: operator is {op}, state is {state}")]
    DimensionMismatch { op: usize, state: usize },
    #[error("vacuum amplitude too small for extraction (|c0| = {c0_norm:.3e}): state too squeezed for this truncation")]
    VacuumAmplitudeTooSmall { c0_norm: f64 },
    #[error("not a squeezed-family state: odd-level weight {odd_mass:.3e} above threshold")]
    NotSqueezedFamily { odd_mass: f64 },
    #[error("displacement must be nonzero")]
    ZeroDisplacement,
    #[error("displaced point leaves the unit disk")]
    LeavesDisk,
}

/// Amplitudes `c₀..c_{N-1}` over the number basis.
#[derive(Debug, Clone, PartialEq)]
pub struct FockVector {
    amplitudes: DVector<Complex64>,
}

/// Dense matrix acting on the truncated Fock space.
#[derive(Debug, Clone, PartialEq)]
pub struct FockOperator {
    matrix: DMatrix<Complex64>,
}

impl FockVector {
    pub fn from_amplitudes(amplitudes: Vec<Complex64>) -> Self {
        FockVector {
            amplitudes: DVector::from_vec(amplitudes),
        }
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn amplitude(&self, n: usize) -> Complex64 {
        self.amplitudes[n]
    }

    pub fn norm(&self) -> f64 {
        self.amplitudes.norm()
    }

    /// `⟨self|other⟩`, conjugate-linear in `self`.
    pub fn inner(&self, other: &FockVector) -> Complex64 {
        self.amplitudes.dotc(&other.amplitudes)
    }

    /// Total weight `Σ|c_{2k+1}|²` on odd levels.
    pub fn odd_mass(&self) -> f64 {
        self.amplitudes
            .iter()
            .skip(1)
            .step_by(2)
            .map(|c| c.norm_sqr())
            .sum()
    }

    /// `{"dim":N,"amplitudes":[[re,im],...]}` rendering for debugging dumps.
    pub fn to_json(&self) -> JsonValue {
        let mut doc = JsonValue::object();
        doc.push("dim", self.dim());
        doc.push(
            "amplitudes",
            JsonValue::Array(self.amplitudes.iter().map(|c| JsonValue::complex(*c)).collect()),
        );
        doc
    }
}

impl FockOperator {
    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn matrix(&self) -> &DMatrix<Complex64> {
        &self.matrix
    }

    /// Largest entry of `M - M†`; zero (to rounding) for Hamiltonians.
    pub fn hermiticity_defect(&self) -> f64 {
        let adj = self.matrix.adjoint();
        (&self.matrix - adj)
            .iter()
            .map(|c| c.norm())
            .fold(0.0, f64::max)
    }
}

/// Truncated amplitudes of the normalized squeezed state `ψ(z)`.
///
/// Built by the recurrence `c_{2n+2} = c_{2n} · (-z/2) √((2n+1)(2n+2))/(n+1)`,
/// which is the stable way to walk the series; odd entries are exactly zero.
pub fn squeezed_state_vector(z: DiskPoint, dim: usize) -> Result<FockVector, FockError> {
    if dim < 2 {
        return Err(FockError::DimensionTooSmall { dim, min: 2 });
    }
    let z = z.value();
    let mut amplitudes = vec![Complex64::new(0.0, 0.0); dim];
    let mut c = Complex64::new((1.0 - z.norm_sqr()).powf(0.25), 0.0);
    let mut level = 0usize;
    while 2 * level < dim {
        amplitudes[2 * level] = c;
        let n = level as f64;
        c *= -z / 2.0 * ((2.0 * n + 1.0) * (2.0 * n + 2.0)).sqrt() / (n + 1.0);
        level += 1;
    }
    Ok(FockVector::from_amplitudes(amplitudes))
}

/// Closed-form overlap
/// `⟨ψ(z)|ψ(w)⟩ = (1-|z|²)^{1/4} (1-|w|²)^{1/4} (1 - z̄w)^{-1/2}`
/// with the principal square-root branch (`Re(1 - z̄w) > 0` on `D×D`).
pub fn overlap(z: DiskPoint, w: DiskPoint) -> Complex64 {
    let z = z.value();
    let w = w.value();
    let norms = ((1.0 - z.norm_sqr()) * (1.0 - w.norm_sqr())).powf(0.25);
    let root = (Complex64::new(1.0, 0.0) - z.conj() * w).sqrt();
    norms / root
}

/// Hilbert-Schmidt distance `tr((P(z) - P(w))²) = 2(1 - (1 + δ(z,w))^{-1/2})`.
pub fn hs_distance_sq(z: DiskPoint, w: DiskPoint) -> f64 {
    let delta = crate::geometry::delta_invariant(z, w);
    2.0 * (1.0 - 1.0 / (1.0 + delta).sqrt())
}

/// Matrix of `H = ω a*a + (α/2) a² + (ᾱ/2) a*²` on the truncated space:
/// diagonal `ωn`, entry `(n-2, n) = (α/2)√(n(n-1))` and its conjugate below.
pub fn hamiltonian_matrix(
    h: &QuadraticHamiltonian,
    dim: usize,
) -> Result<FockOperator, FockError> {
    if dim < 4 {
        return Err(FockError::DimensionTooSmall { dim, min: 4 });
    }
    let mut m = DMatrix::from_element(dim, dim, Complex64::new(0.0, 0.0));
    let omega = h.omega();
    let alpha = h.alpha();
    for n in 0..dim {
        m[(n, n)] = Complex64::new(omega * n as f64, 0.0);
        if n >= 2 {
            let coupling = (n as f64 * (n as f64 - 1.0)).sqrt();
            m[(n - 2, n)] = alpha / 2.0 * coupling;
            m[(n, n - 2)] = alpha.conj() / 2.0 * coupling;
        }
    }
    Ok(FockOperator { matrix: m })
}

/// `e^{-itH} ψ` via eigendecomposition of the Hermitian matrix; unitary up to
/// rounding, so the norm is preserved.
pub fn evolve_vector(
    hm: &FockOperator,
    psi: &FockVector,
    t: f64,
) -> Result<FockVector, FockError> {
    if hm.dim() != psi.dim() {
        return Err(FockError::DimensionMismatch {
            op: hm.dim(),
            state: psi.dim(),
        });
    }
    let eig = hm.matrix.clone().symmetric_eigen();
    let coeffs = eig.eigenvectors.adjoint() * &psi.amplitudes;
    let phased = DVector::from_iterator(
        coeffs.len(),
        coeffs
            .iter()
            .zip(eig.eigenvalues.iter())
            .map(|(c, &e)| c * Complex64::from_polar(1.0, -e * t)),
    );
    Ok(FockVector {
        amplitudes: eig.eigenvectors * phased,
    })
}

/// Recover the disk point from the amplitude ratio the squeezed series
/// forces: `z = -√2 · c₂/c₀`.
pub fn extract_disk_point(psi: &FockVector) -> Result<DiskPoint, FockError> {
    let norm = psi.norm();
    let c0 = psi.amplitude(0) / norm;
    if c0.norm() <= 1e-8 {
        return Err(FockError::VacuumAmplitudeTooSmall { c0_norm: c0.norm() });
    }
    let odd = psi.odd_mass() / (norm * norm);
    if odd > 1e-6 {
        return Err(FockError::NotSqueezedFamily { odd_mass: odd });
    }
    let z = -(2.0f64).sqrt() * psi.amplitude(2) / norm / c0;
    DiskPoint::new(z).map_err(|_| FockError::NotSqueezedFamily { odd_mass: odd })
}

/// Residual `‖(a + z a*)ψ‖` with truncated ladder matrices, excluding the top
/// two rows where the truncation boundary corrupts `a*ψ`.
pub fn annihilator_residual(z: DiskPoint, psi: &FockVector) -> Result<f64, FockError> {
    let dim = psi.dim();
    if dim < 4 {
        return Err(FockError::DimensionTooSmall { dim, min: 4 });
    }
    let z = z.value();
    let mut sum = 0.0;
    for n in 0..dim - 2 {
        // row n of aψ: √(n+1) c_{n+1}; row n of a*ψ: √n c_{n-1}
        let mut r = ((n + 1) as f64).sqrt() * psi.amplitude(n + 1);
        if n >= 1 {
            r += z * (n as f64).sqrt() * psi.amplitude(n - 1);
        }
        sum += r.norm_sqr();
    }
    Ok(sum.sqrt())
}

/// `4·tr((P(z) - P(z+dz))²) / d(z, z+dz)²`; tends to 1 as `|dz| → 0`, which
/// is the isometric-immersion statement for the Fubini-Study metric.
pub fn fubini_study_ratio(z: DiskPoint, dz: Complex64) -> Result<f64, FockError> {
    if dz == Complex64::new(0.0, 0.0) {
        return Err(FockError::ZeroDisplacement);
    }
    let w = DiskPoint::new(z.value() + dz).map_err(|_| FockError::LeavesDisk)?;
    let hs = hs_distance_sq(z, w);
    let dh = hyperbolic_distance(z, w);
    Ok(4.0 * hs / (dh * dh))
}
