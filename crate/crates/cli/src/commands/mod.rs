pub mod adiabatic;
pub mod bangbang;
pub mod classify;
pub mod reachable;
pub mod trajectory;
pub mod verify;

use num_complex::Complex64;

use disk_squeeze_core::dynamics::QuadraticHamiltonian;
use disk_squeeze_core::geometry::DiskPoint;

pub(crate) fn hamiltonian(omega: f64, alpha: Complex64) -> Result<QuadraticHamiltonian, String> {
    QuadraticHamiltonian::new(omega, alpha).map_err(|e| e.to_string())
}

pub(crate) fn disk_point(z: Complex64, name: &str) -> Result<DiskPoint, String> {
    DiskPoint::new(z).map_err(|e| format!("{name}: {e}"))
}
