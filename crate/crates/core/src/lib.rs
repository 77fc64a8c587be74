//! Exact combinatorics of the affine symmetric group: lengths, codes, Bruhat
//! order, affine Stanley symmetric functions, involution atoms, covering
//! transformations of involutions and transition formulas.

pub mod affine;
pub mod checks;
pub mod enumerate;
pub mod error;
pub mod involution;
pub mod notation;
pub mod partition;
pub mod search;
pub mod stanley;
pub mod symfunc;
pub mod tau;
pub mod virtual_perm;

pub use affine::{AffinePermutation, Code};
pub use error::{Error, Result};
pub use involution::AffineInvolution;
pub use partition::Partition;
pub use search::SearchOptions;
pub use symfunc::{MonomialExpansion, SchurExpansion};
