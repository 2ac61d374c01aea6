#![allow(dead_code)]

use prodbasis::numkernel::{ComplexMatrix, ComplexVector, C64};
use prodbasis::sampling::{complex_normal, haar_unitary, SeededRng};

pub fn random_hermitian(rng: &mut SeededRng, n: usize) -> ComplexMatrix {
    let g = ComplexMatrix::from_fn(n, n, |_, _| complex_normal(rng));
    g.add(&g.adjoint()).scaled(C64::new(0.5, 0.0))
}

/// Projector onto the span of the first `rank` columns of a Haar unitary.
pub fn random_projector(rng: &mut SeededRng, n: usize, rank: usize) -> ComplexMatrix {
    let u = haar_unitary(rng, n);
    let mut p = ComplexMatrix::zeros(n, n);
    for j in 0..rank {
        let v = u.column(j);
        p = p.add(&ComplexMatrix::outer(&v, &v));
    }
    p
}

/// Random density operator `G G^H / tr`.
pub fn random_density(rng: &mut SeededRng, n: usize) -> ComplexMatrix {
    let g = ComplexMatrix::from_fn(n, n, |_, _| complex_normal(rng));
    let m = g.matmul(&g.adjoint());
    let tr = m.trace().re;
    m.scaled(C64::new(1.0 / tr, 0.0))
}

pub fn bell_vector() -> ComplexVector {
    let h = 1.0 / 2f64.sqrt();
    ComplexVector::from_real(&[h, 0.0, 0.0, h])
}
