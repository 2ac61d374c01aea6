use alloc::vec::Vec;

use rand::Rng;

use super::{apply_winding_move, enumerate_splits, WindingMove};
use crate::constructions::{cartesian_basis, ProductBasis};
use crate::sampling::{haar_unitary, stream_rng};
use crate::{Error, Result};

/// Apply `k_moves` random moves: each split is drawn uniformly from
/// [`enumerate_splits`] of the current basis, each unitary from the Haar measure.
pub fn wind_randomly<R: Rng + ?Sized>(
    basis: &ProductBasis,
    k_moves: usize,
    rng: &mut R,
) -> Result<(ProductBasis, Vec<WindingMove>)> {
    let mut current = basis.clone();
    let mut moves = Vec::with_capacity(k_moves);
    for applied in 0..k_moves {
        let splits = enumerate_splits(&current)?;
        if splits.is_empty() {
            return Err(Error::NoValidSplit { applied });
        }
        let split = splits[rng.random_range(0..splits.len())].clone();
        let u_a = haar_unitary(rng, split.dim_a());
        let u_b = haar_unitary(rng, split.dim_b());
        let mv = WindingMove { split, u_a, u_b };
        current = apply_winding_move(&current, &mv)?;
        moves.push(mv);
    }
    Ok((current, moves))
}

/// A grid basis wound by `k_moves` random moves, with the moves used.
pub fn random_wound_basis(
    d_a: usize,
    d_b: usize,
    k_moves: usize,
    seed: u64,
) -> Result<(ProductBasis, Vec<WindingMove>)> {
    let start = cartesian_basis(d_a, d_b)?;
    wind_randomly(&start, k_moves, &mut stream_rng(seed, 0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::winding::{inverse_move, is_cartesian};

    #[test]
    fn zero_moves_is_the_grid() {
        let (b, moves) = random_wound_basis(2, 3, 0, 1).unwrap();
        assert!(moves.is_empty());
        assert_eq!(b, cartesian_basis(2, 3).unwrap());
    }

    #[test]
    fn single_move_round_trip() {
        let (b, moves) = random_wound_basis(2, 2, 1, 11).unwrap();
        let back = apply_winding_move(&b, &inverse_move(&moves[0])).unwrap();
        for (x, y) in back
            .states()
            .iter()
            .zip(cartesian_basis(2, 2).unwrap().states())
        {
            assert!(x.joint().max_abs_diff(&y.joint()) < 1e-12);
        }
        assert!(is_cartesian(&back, 1e-8).unwrap());
    }

    #[test]
    fn seeded_runs_are_identical() {
        let first = random_wound_basis(3, 3, 3, 42).unwrap();
        let second = random_wound_basis(3, 3, 3, 42).unwrap();
        assert_eq!(first, second);
    }
}
