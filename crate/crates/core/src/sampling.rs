//! Seeded random states and unitaries.
//!
//! All randomness in the crate flows through [`stream_rng`]: a ChaCha8
//! generator keyed by a 64-bit seed and addressed by a stream number, so
//! restart `r` of a run with seed `s` draws the same numbers no matter how
//! many other restarts ran before it.

use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::numkernel::{ComplexMatrix, ComplexVector, C64};

pub type SeededRng = ChaCha8Rng;

/// Generator for stream `stream` under `seed`.
pub fn stream_rng(seed: u64, stream: u64) -> SeededRng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

pub fn complex_normal<R: Rng + ?Sized>(rng: &mut R) -> C64 {
    let re: f64 = rng.sample(StandardNormal);
    let im: f64 = rng.sample(StandardNormal);
    C64::new(re, im)
}

/// Uniformly distributed unit vector (normalized complex Gaussian).
pub fn random_unit_vector<R: Rng + ?Sized>(rng: &mut R, dim: usize) -> ComplexVector {
    loop {
        let v = ComplexVector::new((0..dim).map(|_| complex_normal(rng)).collect());
        if let Some(u) = v.normalized() {
            return u;
        }
    }
}

/// Haar-distributed `dim x dim` unitary.
///
/// Modified Gram-Schmidt on the columns of a complex Ginibre matrix; the
/// implied triangular factor has a positive diagonal, which is exactly the
/// phase fix that makes the QR route Haar.
pub fn haar_unitary<R: Rng + ?Sized>(rng: &mut R, dim: usize) -> ComplexMatrix {
    loop {
        let columns: Vec<ComplexVector> = (0..dim)
            .map(|_| ComplexVector::new((0..dim).map(|_| complex_normal(rng)).collect()))
            .collect();
        if let Some(q) = orthonormalize(&columns) {
            return ComplexMatrix::from_columns(&q);
        }
    }
}

/// Modified Gram-Schmidt; `None` if the input is numerically rank deficient.
pub(crate) fn orthonormalize(columns: &[ComplexVector]) -> Option<Vec<ComplexVector>> {
    let mut out: Vec<ComplexVector> = Vec::with_capacity(columns.len());
    for col in columns {
        let mut v = col.clone();
        // Two passes keep the result orthonormal to machine precision.
        for _ in 0..2 {
            for q in &out {
                let proj = q.inner(&v);
                v.axpy(-proj, q);
            }
        }
        if v.norm() <= 1e-10 * col.norm().max(1e-300) {
            return None;
        }
        out.push(v.normalized()?);
    }
    Some(out)
}
