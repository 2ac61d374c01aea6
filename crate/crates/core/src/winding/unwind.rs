//! Depth-bounded search for a move sequence that returns a basis to grid form.
//!
//! Candidate moves come from the splits of [`enumerate_splits`]. When the
//! inside block of a split is itself a grid, the candidates align its local
//! rays with orthonormal families read off the outside states (or leave a
//! side alone). When the block is not a grid, the search recurses into the
//! block, treated as a complete product basis of `A' ⊗ B'`, and lifts the
//! block's candidates back. A returned sequence is always re-applied to the
//! input and checked; `None` only means nothing was found within the depth.

use alloc::vec::Vec;

use super::rays::{group_rays, span_basis};
use super::{
    apply_winding_move, enumerate_splits, is_cartesian, require_complete, validate_split,
    SubspacePair, WindingMove,
};
use crate::constructions::{Family, ProductBasis, ProductState};
use crate::numkernel::{ComplexMatrix, ComplexVector};
use crate::{Result, Tolerances};

/// Shortest certified sequence of at most `max_depth` moves ending in a grid
/// basis; ties are broken by split order, then candidate order.
pub fn unwind(basis: &ProductBasis, max_depth: usize) -> Result<Option<Vec<WindingMove>>> {
    require_complete(basis)?;
    let ray_tol = Tolerances::DEFAULT.ray;
    for depth in 0..=max_depth {
        let mut path = Vec::new();
        if search(basis, depth, &mut path, ray_tol)? {
            // Independent re-application from the input.
            let mut replay = basis.clone();
            for mv in &path {
                replay = apply_winding_move(&replay, mv)?;
            }
            if is_cartesian(&replay, ray_tol)? {
                return Ok(Some(path));
            }
            debug_assert!(false, "unwinding path failed certification");
        }
    }
    Ok(None)
}

fn search(
    basis: &ProductBasis,
    depth: usize,
    path: &mut Vec<WindingMove>,
    tol: f64,
) -> Result<bool> {
    if is_cartesian(basis, tol)? {
        return Ok(true);
    }
    if depth == 0 {
        return Ok(false);
    }
    for mv in unwind_candidates(basis)? {
        let Ok(next) = apply_winding_move(basis, &mv) else {
            continue;
        };
        path.push(mv);
        if search(&next, depth - 1, path, tol)? {
            return Ok(true);
        }
        path.pop();
    }
    Ok(false)
}

/// Candidate moves at one node of the search, in deterministic order.
pub fn unwind_candidates(basis: &ProductBasis) -> Result<Vec<WindingMove>> {
    require_complete(basis)?;
    let tol = Tolerances::DEFAULT;
    let mut out = Vec::new();
    for split in enumerate_splits(basis)? {
        let validation = validate_split(basis, &split)?;
        let inside = validation.inside();
        let outside = validation.outside();
        let block = local_block(basis, &split, &inside)?;

        if is_cartesian(&block, tol.ray)? {
            let a_rays = block_rays(block.states().iter().map(|s| &s.a), tol.ray);
            let b_rays = block_rays(block.states().iter().map(|s| &s.b), tol.ray);
            let a_targets = target_families(
                outside.iter().map(|&i| split.local_a(&basis.states()[i].a)),
                split.dim_a(),
                tol.ray,
            );
            let b_targets = target_families(
                outside.iter().map(|&i| split.local_b(&basis.states()[i].b)),
                split.dim_b(),
                tol.ray,
            );
            for ta in core::iter::once(None).chain(a_targets.iter().map(Some)) {
                for tb in core::iter::once(None).chain(b_targets.iter().map(Some)) {
                    if ta.is_none() && tb.is_none() {
                        continue;
                    }
                    let u_a = ta.map_or_else(
                        || ComplexMatrix::identity(split.dim_a()),
                        |t| align(&a_rays, t),
                    );
                    let u_b = tb.map_or_else(
                        || ComplexMatrix::identity(split.dim_b()),
                        |t| align(&b_rays, t),
                    );
                    out.push(WindingMove {
                        split: split.clone(),
                        u_a,
                        u_b,
                    });
                }
            }
        } else {
            for inner in unwind_candidates(&block)? {
                out.push(WindingMove {
                    split: split.embed(&inner.split),
                    u_a: inner.u_a,
                    u_b: inner.u_b,
                });
            }
        }
    }
    Ok(out)
}

/// Inside states in the coordinates of the split.
fn local_block(
    basis: &ProductBasis,
    split: &SubspacePair,
    inside: &[usize],
) -> Result<ProductBasis> {
    let states = inside
        .iter()
        .map(|&i| {
            let s = &basis.states()[i];
            let a = split.local_a(&s.a);
            let b = split.local_b(&s.b);
            ProductState::new(
                a.normalized().unwrap_or(a),
                b.normalized().unwrap_or(b),
                s.label.clone(),
            )
        })
        .collect::<Result<Vec<_>>>()?;
    ProductBasis::new(split.dim_a(), split.dim_b(), states, Family::Custom)
}

fn block_rays<'a>(
    vectors: impl Iterator<Item = &'a ComplexVector>,
    tol: f64,
) -> Vec<ComplexVector> {
    let v: Vec<&ComplexVector> = vectors.collect();
    group_rays(&v, tol).reps
}

/// Orthonormal families of size `dim` among the (normalized) projections of
/// the outside factors, built greedily from each starting ray.
fn target_families(
    projections: impl Iterator<Item = ComplexVector>,
    dim: usize,
    tol: f64,
) -> Vec<Vec<ComplexVector>> {
    let rays: Vec<ComplexVector> = projections
        .filter(|p| p.norm() > 1e-6)
        .filter_map(|p| p.normalized())
        .collect();
    let refs: Vec<&ComplexVector> = rays.iter().collect();
    let reps = group_rays(&refs, tol).reps;

    let mut families: Vec<Vec<ComplexVector>> = Vec::new();
    for start in 0..reps.len() {
        let mut family = alloc::vec![reps[start].clone()];
        for r in reps.iter().skip(start + 1).chain(reps.iter().take(start)) {
            if family.len() == dim {
                break;
            }
            if family.iter().all(|f| f.inner(r).norm() <= tol) {
                family.push(r.clone());
            }
        }
        if family.len() != dim {
            continue;
        }
        let same_set = |other: &Vec<ComplexVector>| {
            other
                .iter()
                .all(|o| family.iter().any(|f| f.inner(o).norm() >= 1.0 - tol))
        };
        if !families.iter().any(same_set) {
            families.push(family);
        }
    }
    families
}

/// Unitary mapping the orthonormal `from` onto the orthonormal `to`, pairwise.
fn align(from: &[ComplexVector], to: &[ComplexVector]) -> ComplexMatrix {
    // Re-orthonormalize both sides so rounding cannot break unitarity.
    let from = span_basis(from.iter());
    let to = span_basis(to.iter());
    let f = ComplexMatrix::from_columns(&from);
    let t = ComplexMatrix::from_columns(&to);
    t.matmul(&f.adjoint())
}
