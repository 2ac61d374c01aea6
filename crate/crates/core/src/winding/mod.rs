//! Winding moves on complete product bases.
//!
//! A winding move picks local subspaces `A' ⊆ C^dA`, `B' ⊆ C^dB` such that
//! every basis state lies either inside `A' ⊗ B'` or in its orthogonal
//! complement, then rotates the inside states with a local unitary
//! `u_a ⊗ u_b` supported on `A' ⊗ B'`. Starting from a grid (Cartesian)
//! basis this produces complete product bases with non-commuting local
//! structure; [`unwind`] searches for the reverse sequence.

mod random;
mod rays;
mod unwind;

use alloc::format;
use alloc::vec::Vec;

use crate::constructions::{ProductBasis, ProductState};
use crate::numkernel::{ComplexMatrix, ComplexVector, ONE};
use crate::verification::check_orthonormal;
use crate::{Error, Result, Tolerances};

pub use random::{random_wound_basis, wind_randomly};
pub use rays::{group_rays, RayGroups};
pub use unwind::{unwind, unwind_candidates};

/// Local subspaces `A' ⊆ C^dA` and `B' ⊆ C^dB`, each given by an orthonormal basis.
#[derive(Debug, Clone, PartialEq)]
pub struct SubspacePair {
    pub a_basis: Vec<ComplexVector>,
    pub b_basis: Vec<ComplexVector>,
}

impl SubspacePair {
    pub fn new(a_basis: Vec<ComplexVector>, b_basis: Vec<ComplexVector>) -> Result<Self> {
        for (side, basis) in [("A", &a_basis), ("B", &b_basis)] {
            let Some(dim) = basis.first().map(ComplexVector::dim) else {
                return Err(Error::InvalidDimension(format!(
                    "empty {side}-side subspace"
                )));
            };
            if basis.len() > dim || basis.iter().any(|v| v.dim() != dim) {
                return Err(Error::DimensionMismatch(format!(
                    "{side}-side subspace basis"
                )));
            }
            for (i, u) in basis.iter().enumerate() {
                for (j, v) in basis.iter().enumerate() {
                    let expected = if i == j { 1.0 } else { 0.0 };
                    let deviation = (u.inner(v) - expected).norm();
                    if deviation > Tolerances::DEFAULT.orthonormality {
                        return Err(Error::NonOrthonormalInput { deviation });
                    }
                }
            }
        }
        Ok(Self { a_basis, b_basis })
    }

    /// The whole space on both sides.
    pub fn full(d_a: usize, d_b: usize) -> Self {
        Self {
            a_basis: standard_basis(d_a),
            b_basis: standard_basis(d_b),
        }
    }

    pub fn dim_a(&self) -> usize {
        self.a_basis.len()
    }

    pub fn dim_b(&self) -> usize {
        self.b_basis.len()
    }

    pub fn ambient(&self) -> (usize, usize) {
        (self.a_basis[0].dim(), self.b_basis[0].dim())
    }

    /// False for `(C^dA, C^dB)` itself, which would be a global local rotation.
    pub fn is_proper(&self) -> bool {
        let (d_a, d_b) = self.ambient();
        (self.dim_a(), self.dim_b()) != (d_a, d_b)
    }

    pub fn projector_a(&self) -> ComplexMatrix {
        projector(&self.a_basis)
    }

    pub fn projector_b(&self) -> ComplexMatrix {
        projector(&self.b_basis)
    }

    /// Coordinates of `v` in the A-side basis.
    pub fn local_a(&self, v: &ComplexVector) -> ComplexVector {
        local(&self.a_basis, v)
    }

    pub fn local_b(&self, v: &ComplexVector) -> ComplexVector {
        local(&self.b_basis, v)
    }

    /// Same subspaces, compared through their projectors.
    pub fn same_subspaces(&self, other: &Self, tol: f64) -> bool {
        self.ambient() == other.ambient()
            && self.dim_a() == other.dim_a()
            && self.dim_b() == other.dim_b()
            && self.projector_a().max_abs_diff(&other.projector_a()) <= tol
            && self.projector_b().max_abs_diff(&other.projector_b()) <= tol
    }

    /// Embed a pair of subspaces given in local coordinates of `self`.
    pub(crate) fn embed(&self, inner: &SubspacePair) -> SubspacePair {
        SubspacePair {
            a_basis: inner
                .a_basis
                .iter()
                .map(|v| combine(&self.a_basis, v))
                .collect(),
            b_basis: inner
                .b_basis
                .iter()
                .map(|v| combine(&self.b_basis, v))
                .collect(),
        }
    }
}

pub(crate) fn standard_basis(dim: usize) -> Vec<ComplexVector> {
    (0..dim)
        .map(|i| ComplexVector::basis(dim, i).expect("index below dim"))
        .collect()
}

fn projector(basis: &[ComplexVector]) -> ComplexMatrix {
    let d = basis[0].dim();
    let mut p = ComplexMatrix::zeros(d, d);
    for v in basis {
        p = p.add(&ComplexMatrix::outer(v, v));
    }
    p
}

fn local(basis: &[ComplexVector], v: &ComplexVector) -> ComplexVector {
    ComplexVector::new(basis.iter().map(|e| e.inner(v)).collect())
}

/// `sum_i coeffs_i basis_i`
fn combine(basis: &[ComplexVector], coeffs: &ComplexVector) -> ComplexVector {
    let mut out = ComplexVector::zeros(basis[0].dim());
    for (e, c) in basis.iter().zip(coeffs.entries()) {
        out.axpy(*c, e);
    }
    out
}

/// A split together with the unitaries applied on it. `u_a` acts in the
/// coordinates of `split.a_basis`, `u_b` in those of `split.b_basis`.
#[derive(Debug, Clone, PartialEq)]
pub struct WindingMove {
    pub split: SubspacePair,
    pub u_a: ComplexMatrix,
    pub u_b: ComplexMatrix,
}

impl WindingMove {
    pub fn new(split: SubspacePair, u_a: ComplexMatrix, u_b: ComplexMatrix) -> Result<Self> {
        for (u, k) in [(&u_a, split.dim_a()), (&u_b, split.dim_b())] {
            if u.rows() != k || u.cols() != k {
                return Err(Error::DimensionMismatch(format!(
                    "{}x{} unitary on a {k}-dimensional subspace",
                    u.rows(),
                    u.cols()
                )));
            }
            let deviation = u.unitarity_deviation();
            if deviation > Tolerances::DEFAULT.orthonormality {
                return Err(Error::NotUnitary { deviation });
            }
        }
        Ok(Self { split, u_a, u_b })
    }

    pub fn identity(split: SubspacePair) -> Self {
        let (ka, kb) = (split.dim_a(), split.dim_b());
        Self {
            split,
            u_a: ComplexMatrix::identity(ka),
            u_b: ComplexMatrix::identity(kb),
        }
    }

    /// `I + E (u - I) E^H` on the A side.
    pub fn lifted_a(&self) -> ComplexMatrix {
        lift(&self.split.a_basis, &self.u_a)
    }

    pub fn lifted_b(&self) -> ComplexMatrix {
        lift(&self.split.b_basis, &self.u_b)
    }
}

fn lift(basis: &[ComplexVector], u: &ComplexMatrix) -> ComplexMatrix {
    let d = basis[0].dim();
    let e = ComplexMatrix::from_columns(basis);
    let delta = u.sub(&ComplexMatrix::identity(u.rows()));
    let mut out = e.matmul(&delta).matmul(&e.adjoint());
    for i in 0..d {
        out[(i, i)] += ONE;
    }
    out
}

/// Same split, adjoint unitaries.
pub fn inverse_move(mv: &WindingMove) -> WindingMove {
    WindingMove {
        split: mv.split.clone(),
        u_a: mv.u_a.adjoint(),
        u_b: mv.u_b.adjoint(),
    }
}

/// Position of one basis state relative to a split.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StateClass {
    /// `a ∈ A'` and `b ∈ B'`.
    Inside,
    /// `a ⊗ b ⊥ A' ⊗ B'`.
    Outside,
    Unclassified,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SplitValidation {
    pub valid: bool,
    pub classes: Vec<StateClass>,
}

impl SplitValidation {
    pub fn inside(&self) -> Vec<usize> {
        self.indices(StateClass::Inside)
    }

    pub fn outside(&self) -> Vec<usize> {
        self.indices(StateClass::Outside)
    }

    fn indices(&self, class: StateClass) -> Vec<usize> {
        self.classes
            .iter()
            .enumerate()
            .filter(|(_, c)| **c == class)
            .map(|(i, _)| i)
            .collect()
    }
}

pub(crate) fn require_complete(basis: &ProductBasis) -> Result<()> {
    if basis.is_complete() {
        Ok(())
    } else {
        Err(Error::IncompleteBasis {
            states: basis.len(),
            dim: basis.dim(),
        })
    }
}

/// Classify every state as inside or outside `split`.
///
/// A split is valid when every state is classified and exactly
/// `dim A' * dim B'` of them are inside, which completeness forces.
pub fn validate_split(basis: &ProductBasis, split: &SubspacePair) -> Result<SplitValidation> {
    require_complete(basis)?;
    if split.ambient() != (basis.d_a(), basis.d_b()) {
        return Err(Error::DimensionMismatch(format!(
            "split on {:?}, basis on {}x{}",
            split.ambient(),
            basis.d_a(),
            basis.d_b()
        )));
    }
    let tol = Tolerances::DEFAULT;
    let classes: Vec<StateClass> = basis
        .states()
        .iter()
        .map(|s| {
            let (la, lb) = (split.local_a(&s.a), split.local_b(&s.b));
            let (wa, wb) = (la.norm_sqr(), lb.norm_sqr());
            let residual_a = s.a.sub(&combine(&split.a_basis, &la)).norm();
            let residual_b = s.b.sub(&combine(&split.b_basis, &lb)).norm();
            if residual_a <= tol.inside_residual && residual_b <= tol.inside_residual {
                StateClass::Inside
            } else if wa * wb <= tol.outside_weight {
                StateClass::Outside
            } else {
                StateClass::Unclassified
            }
        })
        .collect();
    let inside = classes.iter().filter(|c| **c == StateClass::Inside).count();
    let valid = classes.iter().all(|c| *c != StateClass::Unclassified)
        && inside == split.dim_a() * split.dim_b();
    Ok(SplitValidation { valid, classes })
}

/// Rotate the inside states of a valid split; outside states are untouched.
pub fn apply_winding_move(basis: &ProductBasis, mv: &WindingMove) -> Result<ProductBasis> {
    let validation = validate_split(basis, &mv.split)?;
    if !validation.valid {
        return Err(Error::InvalidSplit);
    }
    let (ua, ub) = (mv.lifted_a(), mv.lifted_b());
    let mut states = Vec::with_capacity(basis.len());
    for (s, class) in basis.states().iter().zip(&validation.classes) {
        if *class == StateClass::Inside {
            let mut rotated =
                ProductState::new(ua.mul_vec(&s.a), ub.mul_vec(&s.b), s.label.clone())?;
            if s.tile_cells.is_some() {
                let cells = rotated.support_cells(1e-12);
                rotated = rotated.with_tile_cells(cells);
            }
            states.push(rotated);
        } else {
            states.push(s.clone());
        }
    }
    let mut out = basis.with_states(states);
    let check = check_orthonormal(&out, Tolerances::DEFAULT.orthonormality);
    if !check.ok {
        return Err(Error::NonOrthonormalInput {
            deviation: check.deviation(),
        });
    }
    out.provenance.push(mv.clone());
    Ok(out)
}

/// Whether the basis is a grid `{|e_i> ⊗ |f_j>}` for some local orthonormal bases.
///
/// The A-side factors must fall into exactly `dA` mutually orthogonal rays
/// (likewise for B), and every (A-ray, B-ray) pair must occur exactly once.
pub fn is_cartesian(basis: &ProductBasis, tol: f64) -> Result<bool> {
    require_complete(basis)?;
    let a: Vec<&ComplexVector> = basis.states().iter().map(|s| &s.a).collect();
    let b: Vec<&ComplexVector> = basis.states().iter().map(|s| &s.b).collect();
    let ga = group_rays(&a, tol);
    let gb = group_rays(&b, tol);
    if ga.reps.len() != basis.d_a() || gb.reps.len() != basis.d_b() {
        return Ok(false);
    }
    if !ga.mutually_orthogonal(tol) || !gb.mutually_orthogonal(tol) {
        return Ok(false);
    }
    let mut seen = alloc::vec![false; basis.dim()];
    for (x, y) in ga.assignment.iter().zip(&gb.assignment) {
        let cell = x * basis.d_b() + y;
        if seen[cell] {
            return Ok(false);
        }
        seen[cell] = true;
    }
    Ok(true)
}

/// Candidate proper splits of a complete basis.
///
/// On each side the distinct rays form a graph with an edge between every
/// non-orthogonal pair. Any union of connected components spans a subspace
/// that every state of that side either lies in or is orthogonal to, so
/// `(span, full)` and `(full, span)` are splits. Products of one A-side and
/// one B-side candidate are kept when they validate.
pub fn enumerate_splits(basis: &ProductBasis) -> Result<Vec<SubspacePair>> {
    require_complete(basis)?;
    let tol = Tolerances::DEFAULT;
    let (d_a, d_b) = (basis.d_a(), basis.d_b());
    let a: Vec<&ComplexVector> = basis.states().iter().map(|s| &s.a).collect();
    let b: Vec<&ComplexVector> = basis.states().iter().map(|s| &s.b).collect();
    let a_spans = group_rays(&a, tol.ray).component_spans(tol.ray);
    let b_spans = group_rays(&b, tol.ray).component_spans(tol.ray);

    let mut candidates: Vec<SubspacePair> = Vec::new();
    let push = |pair: SubspacePair, candidates: &mut Vec<SubspacePair>| -> Result<()> {
        if !pair.is_proper()
            || candidates
                .iter()
                .any(|c| c.same_subspaces(&pair, tol.orthonormality))
        {
            return Ok(());
        }
        if validate_split(basis, &pair)?.valid {
            candidates.push(pair);
        }
        Ok(())
    };
    for span in &a_spans {
        push(
            SubspacePair {
                a_basis: span.clone(),
                b_basis: standard_basis(d_b),
            },
            &mut candidates,
        )?;
    }
    for span in &b_spans {
        push(
            SubspacePair {
                a_basis: standard_basis(d_a),
                b_basis: span.clone(),
            },
            &mut candidates,
        )?;
    }
    for sa in &a_spans {
        for sb in &b_spans {
            push(
                SubspacePair {
                    a_basis: sa.clone(),
                    b_basis: sb.clone(),
                },
                &mut candidates,
            )?;
        }
    }
    Ok(candidates)
}
