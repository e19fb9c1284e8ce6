//! Finite-group machinery for classifying separable commutative algebras in
//! categories of compact `G`-spectra and equivariant modules: subgroup
//! lattices, finite G-sets, tables of marks, families and filtrations,
//! pullbacks of groupoids, and the stage-wise conditions that decide whether
//! every separable algebra is standard.

pub mod burnside;
pub mod classifier;
pub mod cli;
pub mod conditions;
pub mod error;
pub mod families;
pub mod group_core;
pub mod groupoid_calc;
pub mod gset;

pub use error::{Error, Result};
