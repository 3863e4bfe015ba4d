//! Exhaustive generation up to isomorphism.

pub mod classify;
pub mod lattices;
pub mod quantales;

use thiserror::Error;

pub use classify::{census_strict, classify_lattices, classify_seven, CensusRow, ClassifyReport};
pub use lattices::{canonical_lattice, enumerate_lattices, MAX_LATTICE_SIZE};
pub use quantales::{enumerate_quantales, enumerate_tables, CatalogueEntry, Constraint, EnumOptions};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumError {
    #[error("lattice size must be positive")]
    Empty,
    #[error("lattice size {size} exceeds the supported maximum {max}")]
    TooLarge { size: usize, max: usize },
}
