use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Index, IndexMut};

use super::{sqrt, C64, ONE, ZERO};
use crate::{Error, Result};

/// A column vector of complex amplitudes.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexVector {
    entries: Vec<C64>,
}

impl ComplexVector {
    pub fn new(entries: Vec<C64>) -> Self {
        Self { entries }
    }

    pub fn zeros(dim: usize) -> Self {
        Self {
            entries: vec![ZERO; dim],
        }
    }

    /// The computational basis vector `|index>`.
    pub fn basis(dim: usize, index: usize) -> Result<Self> {
        if index >= dim {
            return Err(Error::IndexOutOfRange { index, dim });
        }
        let mut v = Self::zeros(dim);
        v.entries[index] = ONE;
        Ok(v)
    }

    pub fn from_real(values: &[f64]) -> Self {
        Self::new(values.iter().map(|&x| C64::new(x, 0.0)).collect())
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    #[inline]
    pub fn entries(&self) -> &[C64] {
        &self.entries
    }

    #[inline]
    pub fn entries_mut(&mut self) -> &mut [C64] {
        &mut self.entries
    }

    pub fn into_entries(self) -> Vec<C64> {
        self.entries
    }

    pub fn is_finite(&self) -> bool {
        self.entries
            .iter()
            .all(|z| z.re.is_finite() && z.im.is_finite())
    }

    pub fn norm_sqr(&self) -> f64 {
        self.entries.iter().map(|z| z.norm_sqr()).sum()
    }

    pub fn norm(&self) -> f64 {
        sqrt(self.norm_sqr())
    }

    /// `<self|other>`, antilinear in `self`.
    pub fn inner(&self, other: &Self) -> C64 {
        debug_assert_eq!(self.dim(), other.dim());
        self.entries
            .iter()
            .zip(&other.entries)
            .fold(ZERO, |acc, (a, b)| acc + a.conj() * b)
    }

    pub fn scaled(&self, factor: C64) -> Self {
        Self::new(self.entries.iter().map(|z| z * factor).collect())
    }

    /// Unit vector along `self`; `None` for the zero vector.
    pub fn normalized(&self) -> Option<Self> {
        let n = self.norm();
        if n == 0.0 || !n.is_finite() {
            return None;
        }
        Some(self.scaled(C64::new(1.0 / n, 0.0)))
    }

    pub fn is_unit(&self, tol: f64) -> bool {
        (self.norm() - 1.0).abs() <= tol
    }

    /// `self - other`
    pub fn sub(&self, other: &Self) -> Self {
        Self::new(
            self.entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }

    /// `self + factor * other`, in place.
    pub fn axpy(&mut self, factor: C64, other: &Self) {
        for (a, b) in self.entries.iter_mut().zip(&other.entries) {
            *a += factor * b;
        }
    }

    /// Cyclic relabelling `|x> -> |x + shift mod dim>`.
    pub fn cyclic_shift(&self, shift: isize) -> Self {
        let n = self.dim();
        let mut out = Self::zeros(n);
        if n == 0 {
            return out;
        }
        let s = shift.rem_euclid(n as isize) as usize;
        for (x, z) in self.entries.iter().enumerate() {
            out.entries[(x + s) % n] = *z;
        }
        out
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// Multiply by the phase that makes the first entry with modulus above
    /// `threshold` real and positive.
    pub fn phase_normalized(&self, threshold: f64) -> Self {
        match self.entries.iter().find(|z| z.norm() > threshold) {
            Some(z) => self.scaled(z.conj() / z.norm()),
            None => self.clone(),
        }
    }
}

impl Index<usize> for ComplexVector {
    type Output = C64;
    fn index(&self, i: usize) -> &C64 {
        &self.entries[i]
    }
}

impl IndexMut<usize> for ComplexVector {
    fn index_mut(&mut self, i: usize) -> &mut C64 {
        &mut self.entries[i]
    }
}

impl From<Vec<C64>> for ComplexVector {
    fn from(entries: Vec<C64>) -> Self {
        Self::new(entries)
    }
}

/// Tensor product `u ⊗ v`; entry `i * dim(v) + j` is `u_i v_j`.
pub fn kron(u: &ComplexVector, v: &ComplexVector) -> ComplexVector {
    let mut out = Vec::with_capacity(u.dim() * v.dim());
    for a in u.entries() {
        for b in v.entries() {
            out.push(a * b);
        }
    }
    ComplexVector::new(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kron_of_basis_vectors() {
        let u = ComplexVector::basis(2, 0).unwrap();
        let v = ComplexVector::basis(2, 1).unwrap();
        assert_eq!(
            kron(&u, &v),
            ComplexVector::from_real(&[0.0, 1.0, 0.0, 0.0])
        );
    }

    #[test]
    fn kron_dimension_law() {
        let u = ComplexVector::zeros(2);
        let v = ComplexVector::zeros(3);
        assert_eq!(kron(&u, &v).dim(), 6);
    }

    #[test]
    fn basis_out_of_range() {
        assert_eq!(
            ComplexVector::basis(3, 3),
            Err(Error::IndexOutOfRange { index: 3, dim: 3 })
        );
    }

    #[test]
    fn cyclic_shift_wraps() {
        let v = ComplexVector::from_real(&[1.0, 2.0, 3.0]);
        assert_eq!(
            v.cyclic_shift(1),
            ComplexVector::from_real(&[3.0, 1.0, 2.0])
        );
        assert_eq!(
            v.cyclic_shift(-1),
            ComplexVector::from_real(&[2.0, 3.0, 1.0])
        );
        assert_eq!(v.cyclic_shift(3), v);
    }

    #[test]
    fn phase_normalization_makes_leading_entry_positive() {
        let v = ComplexVector::new(vec![ZERO, C64::new(0.0, -2.0), C64::new(1.0, 0.0)]);
        let w = v.phase_normalized(1e-12);
        assert!((w[1] - C64::new(2.0, 0.0)).norm() < 1e-15);
        assert!((w[2] - C64::new(0.0, 1.0)).norm() < 1e-15);
    }
}
