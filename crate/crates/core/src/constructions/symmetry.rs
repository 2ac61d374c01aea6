//! Relabellings of the local bases that map tile sets onto themselves.

use alloc::format;
use alloc::vec::Vec;

use super::{Cell, ProductBasis, ProductState};
use crate::{Error, Result};

fn require_square(basis: &ProductBasis) -> Result<usize> {
    if basis.d_a() != basis.d_b() {
        return Err(Error::DimensionMismatch(format!(
            "relabelling needs dA = dB, got {}x{}",
            basis.d_a(),
            basis.d_b()
        )));
    }
    Ok(basis.d_a())
}

fn shift_index(x: usize, s: isize, n: usize) -> usize {
    (x as isize + s).rem_euclid(n as isize) as usize
}

fn map_cells(cells: &Option<Vec<Cell>>, f: impl Fn(Cell) -> Cell) -> Option<Vec<Cell>> {
    cells.as_ref().map(|cells| {
        let mut out: Vec<Cell> = cells.iter().map(|&c| f(c)).collect();
        out.sort_unstable();
        out
    })
}

/// Simultaneous relabelling `|x> -> |x + s mod n>` on both sides.
pub fn cyclic_shift_basis(basis: &ProductBasis, s: isize) -> Result<ProductBasis> {
    let n = require_square(basis)?;
    let states = basis
        .states()
        .iter()
        .map(|st| ProductState {
            a: st.a.cyclic_shift(s),
            b: st.b.cyclic_shift(s),
            label: st.label.clone(),
            tile_cells: map_cells(&st.tile_cells, |(c, r)| {
                (shift_index(c, s, n), shift_index(r, s, n))
            }),
        })
        .collect();
    Ok(basis.with_states(states))
}

/// How the A/B interchange is combined with the unit shift.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SwapShift {
    /// `|x, y> -> |y - 1, x>`: swap the factors, then shift the new A side down by one.
    #[default]
    ShiftAfterSwap,
    /// `|x, y> -> |y, x + 1>`: shift A up by one, then swap the factors.
    ShiftBeforeSwap,
}

impl SwapShift {
    pub fn describe(self) -> &'static str {
        match self {
            SwapShift::ShiftAfterSwap => "|x,y> -> |y-1 mod n, x>",
            SwapShift::ShiftBeforeSwap => "|x,y> -> |y, x+1 mod n>",
        }
    }
}

/// Interchange of A and B combined with a unit shift, using [`SwapShift::default`].
pub fn swap_shift_basis(basis: &ProductBasis) -> Result<ProductBasis> {
    swap_shift_basis_with(basis, SwapShift::default())
}

pub fn swap_shift_basis_with(basis: &ProductBasis, convention: SwapShift) -> Result<ProductBasis> {
    let n = require_square(basis)?;
    let states = basis
        .states()
        .iter()
        .map(|st| match convention {
            SwapShift::ShiftAfterSwap => ProductState {
                a: st.b.cyclic_shift(-1),
                b: st.a.clone(),
                label: st.label.clone(),
                tile_cells: map_cells(&st.tile_cells, |(c, r)| (shift_index(r, -1, n), c)),
            },
            SwapShift::ShiftBeforeSwap => ProductState {
                a: st.b.clone(),
                b: st.a.cyclic_shift(1),
                label: st.label.clone(),
                tile_cells: map_cells(&st.tile_cells, |(c, r)| (r, shift_index(c, 1, n))),
            },
        })
        .collect();
    Ok(basis.with_states(states))
}
