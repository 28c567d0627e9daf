//! Exact computational kernel for quantaloid-enriched category theory on
//! finite data: sup-lattices, quantaloids with residuation, enriched
//! categories and distributors, presheaf categories with weighted colimits,
//! cocompletion doctrines carved out by saturated weight classes, and the
//! Hausdorff and Cauchy constructions on generalized metric spaces and
//! preorders.
//!
//! All arithmetic is exact: lattice tables or extended nonnegative rationals.

pub mod error;
pub mod fixtures;
pub mod hausdorff;
pub mod lattice;
pub mod laws;
pub mod doctrine;
pub mod presheaf;
pub mod qcat;
pub mod quantaloid;
pub mod rational;
pub mod report;
pub mod workbench;

pub use error::{Error, Result};
