//! The mixed state on the complement of an unextendible product basis.
//!
//! `rho = (I - P_S) / (D - |S|)` has positive partial transpose because
//! `I - P_S` is a sum of identity minus product projectors, each mapped to a
//! product projector by partial transposition. Its range is the complement
//! of the basis span, which holds no product state, so the range criterion
//! detects entanglement. Together this is the numerical signature of bound
//! entanglement.

use alloc::format;
use alloc::vec::Vec;

use crate::constructions::ProductBasis;
use crate::numkernel::{hermitian_eig, partial_transpose, ComplexMatrix, ComplexVector, C64};
use crate::verification::{complement_projector, seesaw_max_product_overlap, SeesawOptions};
use crate::{Error, Result, Tolerances};

/// A unit-trace positive operator on `C^dA ⊗ C^dB`.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    matrix: ComplexMatrix,
    d_a: usize,
    d_b: usize,
}

impl DensityMatrix {
    /// Checks hermiticity, trace and positivity against `1e-10`.
    pub fn new(matrix: ComplexMatrix, d_a: usize, d_b: usize) -> Result<Self> {
        let d = d_a * d_b;
        if matrix.rows() != d || matrix.cols() != d {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} matrix for a {d_a}x{d_b} system",
                matrix.rows(),
                matrix.cols()
            )));
        }
        let tol = 1e-10;
        let deviation = matrix.hermiticity_deviation();
        if deviation > tol {
            return Err(Error::NotHermitian { deviation });
        }
        let trace = matrix.trace();
        if (trace.re - 1.0).abs() > tol || trace.im.abs() > tol {
            return Err(Error::InvalidDensity(format!("trace {trace}")));
        }
        let min = hermitian_eig(&matrix)?.min();
        if min < -tol {
            return Err(Error::InvalidDensity(format!(
                "negative eigenvalue {min:e}"
            )));
        }
        Ok(Self { matrix, d_a, d_b })
    }

    /// `|psi><psi| / <psi|psi>`
    pub fn pure(state: &ComplexVector, d_a: usize, d_b: usize) -> Result<Self> {
        let unit = state.normalized().ok_or(Error::ZeroState)?;
        Self::new(ComplexMatrix::outer(&unit, &unit), d_a, d_b)
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn d_a(&self) -> usize {
        self.d_a
    }

    pub fn d_b(&self) -> usize {
        self.d_b
    }
}

/// `(I - P_S) / (dA dB - |S|)` for an orthonormal product set `S`.
pub fn upb_density_state(basis: &ProductBasis) -> Result<DensityMatrix> {
    let rank = basis.dim() - basis.len().min(basis.dim());
    if rank == 0 {
        return Err(Error::CompleteBasisInput);
    }
    let q = complement_projector(basis)?;
    DensityMatrix::new(
        q.scaled(C64::new(1.0 / rank as f64, 0.0)),
        basis.d_a(),
        basis.d_b(),
    )
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PptCheck {
    pub ppt: bool,
    pub min_pt_eigenvalue: f64,
}

/// Positivity of the partial transpose, up to `tol`.
pub fn is_ppt(rho: &DensityMatrix, tol: f64) -> Result<PptCheck> {
    let pt = partial_transpose(rho.matrix(), rho.d_a, rho.d_b)?;
    let min = hermitian_eig(&pt)?.min();
    Ok(PptCheck {
        ppt: min >= -tol,
        min_pt_eigenvalue: min,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RangeVerdict {
    /// No product state in the range.
    Entangled,
    Inconclusive,
}

impl RangeVerdict {
    pub fn as_str(self) -> &'static str {
        match self {
            RangeVerdict::Entangled => "entangled (range criterion)",
            RangeVerdict::Inconclusive => "inconclusive",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RangeReport {
    pub rank: usize,
    pub max_product_overlap: f64,
    pub verdict: RangeVerdict,
}

/// Searches the range of `rho` for a product state.
pub fn range_criterion_report(
    rho: &DensityMatrix,
    opts: &SeesawOptions,
    tol: &Tolerances,
) -> Result<RangeReport> {
    let eig = hermitian_eig(rho.matrix())?;
    let top = eig.max();
    if top.is_nan() || top <= 0.0 {
        return Err(Error::ZeroState);
    }
    let cutoff = tol.range_cutoff * top;
    let range: Vec<&ComplexVector> = eig
        .values
        .iter()
        .zip(&eig.vectors)
        .filter(|(lambda, _)| **lambda > cutoff)
        .map(|(_, v)| v)
        .collect();
    let d = rho.matrix().rows();
    let mut r = ComplexMatrix::zeros(d, d);
    for v in &range {
        r = r.add(&ComplexMatrix::outer(v, v));
    }
    let found = seesaw_max_product_overlap(&r, rho.d_a, rho.d_b, opts)?;
    let verdict = if found.value < 1.0 - tol.upb_margin {
        RangeVerdict::Entangled
    } else {
        RangeVerdict::Inconclusive
    };
    Ok(RangeReport {
        rank: range.len(),
        max_product_overlap: found.value,
        verdict,
    })
}
