//! Cyclic Jacobi eigensolver for complex Hermitian matrices.
//!
//! Each rotation first removes the phase of the pivot `a_pq` with a diagonal
//! unitary and then applies a real Givens rotation, so the combined
//! transformation is unitary and the iteration stays on Hermitian matrices.
//! Sweeps visit pivots in a fixed order, which makes the output a pure
//! function of the input.

use alloc::vec::Vec;
use core::cmp::Ordering;

use super::{sqrt, ComplexMatrix, ComplexVector, C64, ZERO};
use crate::{Error, Result, Tolerances};

const MAX_SWEEPS: usize = 100;

/// Spectral decomposition with ascending eigenvalues.
#[derive(Debug, Clone, PartialEq)]
pub struct Eigen {
    pub values: Vec<f64>,
    pub vectors: Vec<ComplexVector>,
}

impl Eigen {
    /// `sum_i lambda_i |v_i><v_i|`
    pub fn reconstruct(&self) -> ComplexMatrix {
        let n = self.values.len();
        let mut m = ComplexMatrix::zeros(n, n);
        for (lambda, v) in self.values.iter().zip(&self.vectors) {
            for i in 0..n {
                for j in 0..n {
                    m[(i, j)] += v[i] * v[j].conj() * *lambda;
                }
            }
        }
        m
    }

    pub fn min(&self) -> f64 {
        self.values.first().copied().unwrap_or(f64::NAN)
    }

    pub fn max(&self) -> f64 {
        self.values.last().copied().unwrap_or(f64::NAN)
    }
}

/// Eigenvalues (ascending) and orthonormal eigenvectors of a Hermitian matrix.
pub fn hermitian_eig(m: &ComplexMatrix) -> Result<Eigen> {
    let n = m.rows();
    let deviation = m.hermiticity_deviation();
    let scale = m.max_abs().max(1.0);
    if deviation.is_nan() || deviation > Tolerances::DEFAULT.hermiticity * scale {
        return Err(Error::NotHermitian { deviation });
    }
    if n == 0 {
        return Ok(Eigen {
            values: Vec::new(),
            vectors: Vec::new(),
        });
    }

    // Work on the exactly Hermitian part.
    let mut a = ComplexMatrix::from_fn(n, n, |i, j| (m[(i, j)] + m[(j, i)].conj()) * 0.5);
    let mut v = ComplexMatrix::identity(n);

    let fro = a.frobenius_norm();
    for _ in 0..MAX_SWEEPS {
        let off: f64 = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| a[(i, j)].norm_sqr())
            .sum();
        if off == 0.0 || sqrt(off) <= 1e-15 * fro {
            break;
        }
        for p in 0..n - 1 {
            for q in p + 1..n {
                rotate(&mut a, &mut v, p, q);
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| {
        a[(i, i)]
            .re
            .partial_cmp(&a[(j, j)].re)
            .unwrap_or(Ordering::Equal)
            .then(i.cmp(&j))
    });
    Ok(Eigen {
        values: order.iter().map(|&i| a[(i, i)].re).collect(),
        vectors: order.iter().map(|&i| v.column(i)).collect(),
    })
}

fn rotate(a: &mut ComplexMatrix, v: &mut ComplexMatrix, p: usize, q: usize) {
    let n = a.rows();
    let b = a[(p, q)];
    let b_abs = b.norm();
    if b_abs == 0.0 {
        return;
    }
    let app = a[(p, p)].re;
    let aqq = a[(q, q)].re;
    // Negligible pivot relative to its diagonal pair.
    if b_abs <= f64::EPSILON * 1e-3 * (app.abs() + aqq.abs()) {
        a[(p, q)] = ZERO;
        a[(q, p)] = ZERO;
        return;
    }
    let w = b.conj() / b_abs;
    let theta = (aqq - app) / (2.0 * b_abs);
    let t = if theta.abs() > 1e150 {
        0.5 / theta
    } else {
        let t = 1.0 / (theta.abs() + sqrt(theta * theta + 1.0));
        if theta < 0.0 {
            -t
        } else {
            t
        }
    };
    let c = 1.0 / sqrt(1.0 + t * t);
    let s = t * c;

    let jqp = -w * s;
    let jqq = w * c;
    // A <- A J and V <- V J
    for k in 0..n {
        let (akp, akq) = (a[(k, p)], a[(k, q)]);
        a[(k, p)] = akp * c + akq * jqp;
        a[(k, q)] = akp * s + akq * jqq;
        let (vkp, vkq) = (v[(k, p)], v[(k, q)]);
        v[(k, p)] = vkp * c + vkq * jqp;
        v[(k, q)] = vkp * s + vkq * jqq;
    }
    // A <- J^H A
    let (hpq, hqq) = (jqp.conj(), jqq.conj());
    for k in 0..n {
        let (apk, aqk) = (a[(p, k)], a[(q, k)]);
        a[(p, k)] = apk * c + aqk * hpq;
        a[(q, k)] = apk * s + aqk * hqq;
    }
    a[(p, q)] = ZERO;
    a[(q, p)] = ZERO;
    a[(p, p)] = C64::new(a[(p, p)].re, 0.0);
    a[(q, q)] = C64::new(a[(q, q)].re, 0.0);
}

/// Largest eigenvalue and a matching unit eigenvector.
///
/// When the top eigenvalue is degenerate (within `1e-12`), every candidate is
/// phase-fixed so its first nonzero entry is real positive, and the one with
/// the lexicographically largest real parts wins.
pub fn top_eigenpair(m: &ComplexMatrix) -> Result<(f64, ComplexVector)> {
    let eig = hermitian_eig(m)?;
    let top = eig.max();
    let tie = 1e-12 * top.abs().max(1.0);
    let best = eig
        .values
        .iter()
        .zip(&eig.vectors)
        .filter(|(lambda, _)| top - **lambda <= tie)
        .map(|(_, vec)| vec.phase_normalized(1e-12))
        .max_by(lex_real_cmp)
        .ok_or_else(|| Error::InvalidDimension("empty matrix".into()))?;
    Ok((top, best))
}

fn lex_real_cmp(x: &ComplexVector, y: &ComplexVector) -> Ordering {
    for (a, b) in x.entries().iter().zip(y.entries()) {
        match a.re.partial_cmp(&b.re) {
            Some(Ordering::Equal) | None => continue,
            Some(ord) => return ord,
        }
    }
    Ordering::Equal
}
