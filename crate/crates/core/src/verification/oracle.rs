//! Brute-force lower bound on the product overlap for `dA <= 2`, `dB <= 3`.
//!
//! The A-side factor runs over a grid on the Bloch sphere. For each grid
//! point the best B-side factor is exact: the optimum is the largest
//! eigenvalue of the reduced `dB x dB` operator, evaluated in closed form so
//! the oracle shares no code with the Jacobi solver or the see-saw loop.

use core::f64::consts::PI;

use crate::numkernel::{phase, sqrt, ComplexMatrix, ComplexVector, C64};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OracleOutcome {
    /// Best objective over the grid; a lower bound on the true maximum.
    pub value: f64,
    /// Lipschitz bound on `true max - value`.
    pub gap_bound: f64,
}

/// Grid search over `a = (cos t, e^{i p} sin t)` with `resolution` points per angle.
pub fn grid_oracle_max_product_overlap(
    q: &ComplexMatrix,
    d_a: usize,
    d_b: usize,
    resolution: usize,
) -> Result<OracleOutcome> {
    if d_a > 2 || d_b > 3 || d_a == 0 || d_b == 0 {
        return Err(Error::DimensionTooLarge { d_a, d_b });
    }
    if q.rows() != d_a * d_b || q.cols() != d_a * d_b {
        return Err(Error::DimensionMismatch(alloc::format!(
            "{}x{} operator on a {d_a}x{d_b} space",
            q.rows(),
            q.cols()
        )));
    }
    let resolution = resolution.max(2);

    let evaluate = |a: &ComplexVector| largest_eigenvalue(&reduce_b_adjoint(q, d_a, d_b, a));
    if d_a == 1 {
        let a = ComplexVector::from_real(&[1.0]);
        return Ok(OracleOutcome {
            value: evaluate(&a),
            gap_bound: 0.0,
        });
    }

    let d_theta = 0.5 * PI / (resolution - 1) as f64;
    let d_phi = 2.0 * PI / resolution as f64;
    let mut best = f64::NEG_INFINITY;
    for t in 0..resolution {
        let theta = d_theta * t as f64;
        let (c, s) = (libm::cos(theta), libm::sin(theta));
        // phi is irrelevant at the poles.
        let phis = if t == 0 || t == resolution - 1 {
            1
        } else {
            resolution
        };
        for p in 0..phis {
            let a = ComplexVector::new(alloc::vec![C64::new(c, 0.0), phase(d_phi * p as f64) * s]);
            best = best.max(evaluate(&a));
        }
    }
    // |f(a) - f(a')| <= 2 ||Q|| ||a - a'|| and every unit a is within
    // d_theta/2 + d_phi/2 of a grid point (up to a global phase).
    let gap_bound = 2.0 * q.frobenius_norm() * 0.5 * (d_theta + d_phi);
    Ok(OracleOutcome {
        value: best,
        gap_bound,
    })
}

/// The reduced operator `M(a)_{jl} = sum_{ik} conj(a_i) a_k Q_{(ij),(kl)}` on the B side.
fn reduce_b_adjoint(q: &ComplexMatrix, d_a: usize, d_b: usize, a: &ComplexVector) -> ComplexMatrix {
    ComplexMatrix::from_fn(d_b, d_b, |j, l| {
        let mut acc = C64::new(0.0, 0.0);
        for i in 0..d_a {
            for k in 0..d_a {
                acc += a[i].conj() * a[k] * q[(i * d_b + j, k * d_b + l)];
            }
        }
        acc
    })
}

/// Largest eigenvalue of a Hermitian matrix of size at most 3, in closed form.
pub(crate) fn largest_eigenvalue(m: &ComplexMatrix) -> f64 {
    match m.rows() {
        1 => m[(0, 0)].re,
        2 => {
            let (a, d) = (m[(0, 0)].re, m[(1, 1)].re);
            let b = m[(0, 1)].norm();
            0.5 * (a + d) + sqrt(0.25 * (a - d) * (a - d) + b * b)
        }
        3 => {
            let p1 = m[(0, 1)].norm_sqr() + m[(0, 2)].norm_sqr() + m[(1, 2)].norm_sqr();
            let diag = [m[(0, 0)].re, m[(1, 1)].re, m[(2, 2)].re];
            let mean = (diag[0] + diag[1] + diag[2]) / 3.0;
            let p2 = diag.iter().map(|x| (x - mean) * (x - mean)).sum::<f64>() + 2.0 * p1;
            if p2 <= 0.0 {
                return mean;
            }
            let p = sqrt(p2 / 6.0);
            let shifted = ComplexMatrix::from_fn(3, 3, |i, j| {
                let z = m[(i, j)]
                    - if i == j {
                        C64::new(mean, 0.0)
                    } else {
                        C64::new(0.0, 0.0)
                    };
                z / p
            });
            let r = (det3(&shifted).re / 2.0).clamp(-1.0, 1.0);
            mean + 2.0 * p * libm::cos(libm::acos(r) / 3.0)
        }
        n => unreachable!("closed form only for n <= 3, got {n}"),
    }
}

fn det3(m: &ComplexMatrix) -> C64 {
    m[(0, 0)] * (m[(1, 1)] * m[(2, 2)] - m[(1, 2)] * m[(2, 1)])
        - m[(0, 1)] * (m[(1, 0)] * m[(2, 2)] - m[(1, 2)] * m[(2, 0)])
        + m[(0, 2)] * (m[(1, 0)] * m[(2, 1)] - m[(1, 1)] * m[(2, 0)])
}
