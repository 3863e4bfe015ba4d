//! Finite lattices and quantales: order-theoretic predicates, isolated-unit
//! extensions, nuclei, and exhaustive enumeration up to isomorphism.

pub mod catalogue;
pub mod enumerate;
pub mod extension;
pub mod group;
pub mod io;
pub mod iso;
pub mod lattice;
pub mod named;
pub mod nucleus;
pub mod order;
pub mod patterns;
pub mod quantale;
pub mod set;

pub use lattice::{Lattice, LatticeError};
pub use quantale::{Quantale, QuantaleError, QuantaleProfile};
pub use set::ElemSet;
