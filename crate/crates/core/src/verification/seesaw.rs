//! Alternating maximisation of `<a⊗b|Q|a⊗b>` over product states.
//!
//! With one factor fixed the objective is a Hermitian form in the other, so
//! each half-step is a top-eigenvector problem and the objective can never
//! decrease. Restarts are independent streams of one seeded generator.

use alloc::format;

use crate::constructions::ProductState;
use crate::numkernel::{hermitian_eig, top_eigenpair, ComplexMatrix, ComplexVector, ZERO};
use crate::sampling::{random_unit_vector, stream_rng};
use crate::{Error, Result};

/// Knobs for [`seesaw_max_product_overlap`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeesawOptions {
    pub restarts: usize,
    pub seed: u64,
    /// Stop a restart once one full iteration improves the objective by less than this.
    pub stop_tol: f64,
    pub max_iterations: usize,
}

impl Default for SeesawOptions {
    fn default() -> Self {
        Self {
            restarts: 500,
            seed: 0,
            stop_tol: 1e-12,
            max_iterations: 10_000,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SeesawOutcome {
    /// Best converged objective over all restarts.
    pub value: f64,
    pub witness: ProductState,
    /// Restart that produced `value` (lowest index among exact ties).
    pub best_restart: usize,
    pub restarts_used: usize,
    pub iterations_total: usize,
    /// Largest decrease of the objective seen in any half-step; zero up to rounding.
    pub max_monotonicity_violation: f64,
}

/// Operator bound used to accept `Q` as `0 <= Q <= I`.
const PSD_SLACK: f64 = 1e-8;

/// Largest `<a⊗b|Q|a⊗b>` found by see-saw iteration from random starts.
///
/// `Q` must be Hermitian with spectrum in `[0, 1]` (within `1e-8`); anything
/// else is rejected as [`Error::InvalidProjector`].
pub fn seesaw_max_product_overlap(
    q: &ComplexMatrix,
    d_a: usize,
    d_b: usize,
    opts: &SeesawOptions,
) -> Result<SeesawOutcome> {
    let d = d_a * d_b;
    if d == 0 || q.rows() != d || q.cols() != d {
        return Err(Error::DimensionMismatch(format!(
            "{}x{} operator on a {d_a}x{d_b} space",
            q.rows(),
            q.cols()
        )));
    }
    if opts.restarts == 0 {
        return Err(Error::InvalidDimension(
            "see-saw needs at least one restart".into(),
        ));
    }
    let spectrum = hermitian_eig(q).map_err(|e| Error::InvalidProjector(format!("{e}")))?;
    if spectrum.min() < -PSD_SLACK || spectrum.max() > 1.0 + PSD_SLACK {
        return Err(Error::InvalidProjector(format!(
            "spectrum [{:.3e}, {:.3e}] outside [0, 1]",
            spectrum.min(),
            spectrum.max()
        )));
    }

    let mut best: Option<(f64, ComplexVector, ComplexVector, usize)> = None;
    let mut iterations_total = 0;
    let mut violation: f64 = 0.0;
    for restart in 0..opts.restarts {
        let mut rng = stream_rng(opts.seed, restart as u64);
        let mut a = random_unit_vector(&mut rng, d_a);
        let mut b = random_unit_vector(&mut rng, d_b);
        let mut value = reduce_b(q, d_a, d_b, &b).sandwich(&a, &a).re;
        for _ in 0..opts.max_iterations {
            let (la, na) = top_eigenpair(&reduce_b(q, d_a, d_b, &b))?;
            violation = violation.max(value - la);
            a = na;
            let (lb, nb) = top_eigenpair(&reduce_a(q, d_a, d_b, &a))?;
            violation = violation.max(la - lb);
            b = nb;
            iterations_total += 1;
            let improvement = lb - value;
            value = lb;
            if improvement < opts.stop_tol {
                break;
            }
        }
        if best.as_ref().is_none_or(|(v, ..)| value > *v) {
            best = Some((value, a, b, restart));
        }
    }
    debug_assert!(
        violation <= 1e-12,
        "see-saw objective decreased by {violation:e}"
    );

    let (value, a, b, best_restart) = best.expect("at least one restart");
    Ok(SeesawOutcome {
        value,
        witness: ProductState::new(a, b, "witness")?,
        best_restart,
        restarts_used: opts.restarts,
        iterations_total,
        max_monotonicity_violation: violation,
    })
}

/// `(I ⊗ <b|) Q (I ⊗ |b>)`, a `dA x dA` operator.
pub(crate) fn reduce_b(
    q: &ComplexMatrix,
    d_a: usize,
    d_b: usize,
    b: &ComplexVector,
) -> ComplexMatrix {
    let mut m = ComplexMatrix::zeros(d_a, d_a);
    for i in 0..d_a {
        for k in 0..d_a {
            let mut acc = ZERO;
            for j in 0..d_b {
                let bj = b[j].conj();
                if bj == ZERO {
                    continue;
                }
                let row = i * d_b + j;
                let mut inner = ZERO;
                for l in 0..d_b {
                    inner += q[(row, k * d_b + l)] * b[l];
                }
                acc += bj * inner;
            }
            m[(i, k)] = acc;
        }
    }
    m
}

/// `(<a| ⊗ I) Q (|a> ⊗ I)`, a `dB x dB` operator.
pub(crate) fn reduce_a(
    q: &ComplexMatrix,
    d_a: usize,
    d_b: usize,
    a: &ComplexVector,
) -> ComplexMatrix {
    let mut m = ComplexMatrix::zeros(d_b, d_b);
    for i in 0..d_a {
        let ai = a[i].conj();
        if ai == ZERO {
            continue;
        }
        for k in 0..d_a {
            let w = ai * a[k];
            if w == ZERO {
                continue;
            }
            for j in 0..d_b {
                for l in 0..d_b {
                    m[(j, l)] += w * q[(i * d_b + j, k * d_b + l)];
                }
            }
        }
    }
    m
}
