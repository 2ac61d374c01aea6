//! Dense complex linear algebra for small bipartite systems.
//!
//! Vectors and matrices are plain row-major `Vec<C64>` wrappers. Sizes in
//! this crate never exceed a few hundred, so nothing here is blocked or
//! vectorised; the priority is determinism.

mod eig;
mod matrix;
mod vector;

pub use eig::{hermitian_eig, top_eigenpair, Eigen};
pub use matrix::{partial_transpose, projector_from_states, ComplexMatrix};
pub use vector::{kron, ComplexVector};

pub type C64 = num_complex::Complex64;

pub(crate) const ZERO: C64 = C64::new(0.0, 0.0);
pub(crate) const ONE: C64 = C64::new(1.0, 0.0);

#[inline]
pub(crate) fn sqrt(x: f64) -> f64 {
    libm::sqrt(x)
}

/// `e^{i theta}`
#[inline]
pub fn phase(theta: f64) -> C64 {
    C64::new(libm::cos(theta), libm::sin(theta))
}
