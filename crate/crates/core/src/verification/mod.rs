//! Numerical certification of product bases.
//!
//! A set of orthonormal product states is an unextendible product basis when
//! no product state lies in the orthogonal complement of its span. With `Q`
//! the projector onto that complement, this is `max <a⊗b|Q|a⊗b> < 1` over
//! unit product vectors. [`check_upb`] estimates the maximum with a seeded
//! see-saw search and turns it into a [`Verdict`].

mod oracle;
mod seesaw;

use alloc::vec::Vec;
use core::fmt;

use crate::constructions::{ProductBasis, ProductState};
use crate::numkernel::{projector_from_states, ComplexMatrix};
use crate::{Error, Result, Tolerances};

pub use oracle::{grid_oracle_max_product_overlap, OracleOutcome};
pub use seesaw::{seesaw_max_product_overlap, SeesawOptions, SeesawOutcome};

/// `G_ij = <a_i|a_j><b_i|b_j>`
pub fn gram_matrix(basis: &ProductBasis) -> ComplexMatrix {
    let states = basis.states();
    let n = states.len();
    let mut g = ComplexMatrix::zeros(n, n);
    for i in 0..n {
        for j in i..n {
            let z = states[i].overlap(&states[j]);
            g[(i, j)] = z;
            g[(j, i)] = z.conj();
        }
    }
    g
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Orthonormality {
    pub ok: bool,
    pub max_offdiag: f64,
    pub max_diag_error: f64,
}

impl Orthonormality {
    pub fn deviation(&self) -> f64 {
        self.max_offdiag.max(self.max_diag_error)
    }
}

/// `ok` iff `max |G - I| <= tol`.
pub fn check_orthonormal(basis: &ProductBasis, tol: f64) -> Orthonormality {
    let g = gram_matrix(basis);
    let mut max_offdiag: f64 = 0.0;
    let mut max_diag_error: f64 = 0.0;
    for i in 0..g.rows() {
        for j in 0..g.cols() {
            if i == j {
                max_diag_error =
                    max_diag_error.max((g[(i, i)].re - 1.0).abs().max(g[(i, i)].im.abs()));
            } else {
                max_offdiag = max_offdiag.max(g[(i, j)].norm());
            }
        }
    }
    let ok = max_offdiag <= tol && max_diag_error <= tol;
    Orthonormality {
        ok,
        max_offdiag,
        max_diag_error,
    }
}

/// `Q = I - sum_i |a_i b_i><a_i b_i|`.
pub fn complement_projector(basis: &ProductBasis) -> Result<ComplexMatrix> {
    let identity = ComplexMatrix::identity(basis.dim());
    if basis.is_empty() {
        return Ok(identity);
    }
    let p = projector_from_states(&basis.joint_states(), Tolerances::DEFAULT.orthonormality)?;
    Ok(identity.sub(&p))
}

/// Outcome classes of [`check_upb`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    /// The states span the whole space.
    CompleteBasis,
    /// Product overlap with the complement is bounded away from 1.
    UpbNumeric,
    /// A product state was found in the complement.
    Extendible,
    /// Overlap in `[1 - margin, 1 - 1e-8)`.
    Inconclusive,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::CompleteBasis => "CompleteBasis",
            Verdict::UpbNumeric => "UPB_Numeric",
            Verdict::Extendible => "Extendible",
            Verdict::Inconclusive => "Inconclusive",
        }
    }

    /// Verdict for a best product overlap, given the tolerance record.
    pub fn from_overlap(overlap: f64, tol: &Tolerances) -> Self {
        if overlap >= 1.0 - tol.extendible {
            Verdict::Extendible
        } else if overlap < 1.0 - tol.upb_margin {
            Verdict::UpbNumeric
        } else {
            Verdict::Inconclusive
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct UpbConfig {
    pub seesaw: SeesawOptions,
    pub tolerances: Tolerances,
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerificationReport {
    pub d_a: usize,
    pub d_b: usize,
    pub states: usize,
    pub gram_max_offdiag: f64,
    pub gram_max_diag_error: f64,
    pub span_rank: usize,
    pub complement_dim: usize,
    pub max_product_overlap: f64,
    pub witness_state: Option<ProductState>,
    pub verdict: Verdict,
    pub restarts_used: usize,
    pub iterations_total: usize,
    pub seed: u64,
}

/// Orthonormality, rank, complement and product-overlap search in one pass.
pub fn check_upb(basis: &ProductBasis, config: &UpbConfig) -> Result<VerificationReport> {
    let tol = &config.tolerances;
    let ortho = check_orthonormal(basis, tol.orthonormality);
    if !ortho.ok {
        return Err(Error::NonOrthonormalInput {
            deviation: ortho.deviation(),
        });
    }
    // Orthonormal states are linearly independent.
    let span_rank = basis.len();
    let complement_dim = basis.dim() - span_rank;
    let mut report = VerificationReport {
        d_a: basis.d_a(),
        d_b: basis.d_b(),
        states: basis.len(),
        gram_max_offdiag: ortho.max_offdiag,
        gram_max_diag_error: ortho.max_diag_error,
        span_rank,
        complement_dim,
        max_product_overlap: 0.0,
        witness_state: None,
        verdict: Verdict::CompleteBasis,
        restarts_used: 0,
        iterations_total: 0,
        seed: config.seesaw.seed,
    };
    if complement_dim == 0 {
        return Ok(report);
    }

    let q = complement_projector(basis)?;
    let found = seesaw_max_product_overlap(&q, basis.d_a(), basis.d_b(), &config.seesaw)?;
    report.max_product_overlap = found.value;
    report.verdict = Verdict::from_overlap(found.value, tol);
    report.witness_state = Some(found.witness);
    report.restarts_used = found.restarts_used;
    report.iterations_total = found.iterations_total;
    Ok(report)
}

/// A phase-insensitive matching between two bases.
#[derive(Debug, Clone, PartialEq)]
pub struct SetMatch {
    pub equal: bool,
    /// `permutation[i]` is the state of the second basis matched to state `i` of the first.
    pub permutation: Vec<usize>,
    /// Smallest `|<psi_i|phi_pi(i)>|` over the matching.
    pub min_overlap: f64,
}

/// Greedy matching on the `|overlap|` matrix; `equal` iff every matched pair
/// has `|<psi_i|phi_pi(i)>| >= 1 - tol`.
pub fn basis_set_equal_up_to_phase(
    b1: &ProductBasis,
    b2: &ProductBasis,
    tol: f64,
) -> Result<SetMatch> {
    if (b1.d_a(), b1.d_b()) != (b2.d_a(), b2.d_b()) {
        return Err(Error::DimensionMismatch(alloc::format!(
            "{}x{} vs {}x{}",
            b1.d_a(),
            b1.d_b(),
            b2.d_a(),
            b2.d_b()
        )));
    }
    if b1.len() != b2.len() {
        return Err(Error::CountMismatch {
            left: b1.len(),
            right: b2.len(),
        });
    }
    let n = b1.len();
    let mut used = alloc::vec![false; n];
    let mut permutation = Vec::with_capacity(n);
    let mut min_overlap: f64 = 1.0;
    for psi in b1.states() {
        let mut pick: Option<(usize, f64)> = None;
        for (j, phi) in b2.states().iter().enumerate() {
            if used[j] {
                continue;
            }
            let ov = psi.overlap(phi).norm();
            if pick.is_none_or(|(_, best)| ov > best) {
                pick = Some((j, ov));
            }
        }
        let (j, ov) = pick.expect("counts are equal");
        used[j] = true;
        permutation.push(j);
        min_overlap = min_overlap.min(ov);
    }
    if n == 0 {
        min_overlap = 1.0;
    }
    Ok(SetMatch {
        equal: min_overlap >= 1.0 - tol,
        permutation,
        min_overlap,
    })
}
