//! Squeezed states of a harmonic oscillator as points of the Poincaré disk.
//!
//! A squeezed state is annihilated by `a + z a*` for some `|z| < 1`, so the
//! family is parameterized by the open unit disk. Evolution under a quadratic
//! Hamiltonian `H = ω a*a + (α/2) a² + (ᾱ/2) a*²` pulls back to a Möbius
//! motion of the disk. This crate implements:
//!
//! - [`geometry`]: the computational Poincaré-disk model (distances, disk
//!   automorphisms, fixed points, normal forms, curve classification);
//! - [`dynamics`]: the closed-form flow `M(t)` in the stable, free and
//!   unstable spectral regimes, with trajectories and invariant curves;
//! - [`control`]: bang-bang reachability bounds and pulse synthesis,
//!   arc-polygon reachable sets, and the adiabatic fixed-point path;
//! - [`fock`]: an independent truncated Fock-space oracle (overlaps,
//!   Hilbert-Schmidt distances, matrix time evolution) used to cross-check
//!   the geometric picture;
//! - [`json`]: a small deterministic JSON emitter used by the CLI.

pub mod control;
pub mod dynamics;
pub mod fock;
pub mod geometry;
pub mod json;

pub use geometry::{DiskPoint, ExtendedComplex, GeneralizedCircle, MoebiusMap};
