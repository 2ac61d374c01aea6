//! Product states, product bases, and the tile constructions.

mod symmetry;
mod tiles;

use alloc::string::String;
use alloc::vec::Vec;
use alloc::{format, vec};
use core::fmt;
use core::str::FromStr;

use crate::numkernel::{kron, ComplexVector, C64};
use crate::winding::WindingMove;
use crate::{Error, Result};

pub use symmetry::{cyclic_shift_basis, swap_shift_basis, swap_shift_basis_with, SwapShift};
pub use tiles::{cartesian_basis, fourier_local_state, gen_tiles1, gen_tiles2, root_of_unity};

/// Norm tolerance for the local factors of a product state.
pub const UNIT_NORM_TOL: f64 = 1e-12;

/// A grid cell `(column, row)`: column is the A-side index, row the B-side index.
pub type Cell = (usize, usize);

/// `|a> ⊗ |b>` with a label and, for tile constructions, its grid support.
#[derive(Debug, Clone, PartialEq)]
pub struct ProductState {
    pub a: ComplexVector,
    pub b: ComplexVector,
    pub label: String,
    /// Sorted cells where the product amplitude is nonzero.
    pub tile_cells: Option<Vec<Cell>>,
}

impl ProductState {
    /// Both local factors must be unit vectors.
    pub fn new(a: ComplexVector, b: ComplexVector, label: impl Into<String>) -> Result<Self> {
        for (side, v) in [("A", &a), ("B", &b)] {
            if v.dim() == 0 || !v.is_finite() || !v.is_unit(UNIT_NORM_TOL) {
                return Err(Error::InvalidDimension(format!(
                    "{side}-side factor has norm {} (dimension {})",
                    v.norm(),
                    v.dim()
                )));
            }
        }
        Ok(Self {
            a,
            b,
            label: label.into(),
            tile_cells: None,
        })
    }

    pub fn with_tile_cells(mut self, mut cells: Vec<Cell>) -> Self {
        cells.sort_unstable();
        cells.dedup();
        self.tile_cells = Some(cells);
        self
    }

    /// The joint vector `a ⊗ b`.
    pub fn joint(&self) -> ComplexVector {
        kron(&self.a, &self.b)
    }

    /// `<self|other> = <a|a'><b|b'>`
    pub fn overlap(&self, other: &Self) -> C64 {
        self.a.inner(&other.a) * self.b.inner(&other.b)
    }

    /// Cells where `|a_x b_y| > threshold`.
    pub fn support_cells(&self, threshold: f64) -> Vec<Cell> {
        let mut cells = Vec::new();
        for (x, ax) in self.a.entries().iter().enumerate() {
            for (y, by) in self.b.entries().iter().enumerate() {
                if (ax * by).norm() > threshold {
                    cells.push((x, y));
                }
            }
        }
        cells
    }
}

/// Which construction a basis came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    GenTiles1,
    GenTiles2,
    Cartesian,
    Custom,
}

impl Family {
    pub fn as_str(self) -> &'static str {
        match self {
            Family::GenTiles1 => "gentiles1",
            Family::GenTiles2 => "gentiles2",
            Family::Cartesian => "cartesian",
            Family::Custom => "custom",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "gentiles1" => Ok(Family::GenTiles1),
            "gentiles2" => Ok(Family::GenTiles2),
            "cartesian" => Ok(Family::Cartesian),
            "custom" => Ok(Family::Custom),
            other => Err(Error::InvalidDimension(format!("unknown family {other:?}"))),
        }
    }
}

/// An ordered set of product states on `C^dA ⊗ C^dB`.
///
/// Construction only checks shapes; orthonormality is a property that
/// [`crate::verification::check_orthonormal`] reports on.
#[derive(Debug, Clone, PartialEq)]
pub struct ProductBasis {
    d_a: usize,
    d_b: usize,
    states: Vec<ProductState>,
    family: Family,
    /// Winding moves that produced this basis from its parent, in order.
    pub provenance: Vec<WindingMove>,
}

impl ProductBasis {
    pub fn new(d_a: usize, d_b: usize, states: Vec<ProductState>, family: Family) -> Result<Self> {
        if d_a == 0 || d_b == 0 {
            return Err(Error::InvalidDimension(format!(
                "local dimensions {d_a}x{d_b}"
            )));
        }
        for (i, s) in states.iter().enumerate() {
            if s.a.dim() != d_a || s.b.dim() != d_b {
                return Err(Error::DimensionMismatch(format!(
                    "state {i} ({}) has dims {}x{}, basis is {d_a}x{d_b}",
                    s.label,
                    s.a.dim(),
                    s.b.dim()
                )));
            }
            if let Some(cells) = &s.tile_cells {
                if let Some(&(c, r)) = cells.iter().find(|&&(c, r)| c >= d_a || r >= d_b) {
                    return Err(Error::IndexOutOfRange {
                        index: if c >= d_a { c } else { r },
                        dim: if c >= d_a { d_a } else { d_b },
                    });
                }
            }
        }
        Ok(Self {
            d_a,
            d_b,
            states,
            family,
            provenance: Vec::new(),
        })
    }

    #[inline]
    pub fn d_a(&self) -> usize {
        self.d_a
    }

    #[inline]
    pub fn d_b(&self) -> usize {
        self.d_b
    }

    /// Dimension of the joint space.
    #[inline]
    pub fn dim(&self) -> usize {
        self.d_a * self.d_b
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.states.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    /// As many states as the joint dimension.
    pub fn is_complete(&self) -> bool {
        self.len() == self.dim()
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn states(&self) -> &[ProductState] {
        &self.states
    }

    pub fn into_states(self) -> Vec<ProductState> {
        self.states
    }

    pub fn joint_states(&self) -> Vec<ComplexVector> {
        self.states.iter().map(ProductState::joint).collect()
    }

    pub fn has_tile_metadata(&self) -> bool {
        !self.states.is_empty() && self.states.iter().all(|s| s.tile_cells.is_some())
    }

    /// Same dims and provenance, new states.
    pub(crate) fn with_states(&self, states: Vec<ProductState>) -> Self {
        Self {
            d_a: self.d_a,
            d_b: self.d_b,
            states,
            family: self.family,
            provenance: self.provenance.clone(),
        }
    }

    /// Sub-list by index, keeping dims and family.
    pub fn select(&self, indices: &[usize]) -> Self {
        let states = indices.iter().map(|&i| self.states[i].clone()).collect();
        Self {
            provenance: vec![],
            ..self.with_states(states)
        }
    }
}
