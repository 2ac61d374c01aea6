//! Product bases on bipartite Hilbert spaces.
//!
//! This crate builds the two tile families of unextendible product bases
//! (`GenTiles1` on `n ⊗ n`, `GenTiles2` on `m ⊗ n`), certifies their
//! properties numerically, constructs the bound-entangled state supported on
//! their complement, and implements winding moves on complete product bases.
//!
//! The crate is `no_std` and only needs `alloc`. File formats and the command
//! line live in the `prodbasis-cli` companion crate.
//!
//! ```
//! use prodbasis::constructions::gen_tiles1;
//! use prodbasis::verification::check_orthonormal;
//!
//! let basis = gen_tiles1(6).unwrap();
//! assert_eq!(basis.len(), 25);
//! assert!(check_orthonormal(&basis, 1e-10).ok);
//! ```

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod boundent;
pub mod constructions;
mod error;
pub mod numkernel;
pub mod sampling;
mod tolerance;
pub mod verification;
pub mod winding;

pub use error::{Error, Result};
pub use numkernel::{ComplexMatrix, ComplexVector, C64};
pub use tolerance::Tolerances;
