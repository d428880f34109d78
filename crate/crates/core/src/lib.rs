//! Exact computer algebra for finite-dimensional Lie algebras over prime
//! fields and the rationals.
//!
//! The crate builds structure-constant Lie algebras, validates them against
//! the defining identities, and carries the machinery whose behaviour
//! separates characteristic 0 from characteristic p: Killing forms and both
//! Cartan criteria, Jordan-Chevalley decomposition over perfect fields,
//! representation theory with exhaustive invariant-subspace search, and
//! p-mappings of restricted Lie algebras including the Jacobson correction
//! terms. All arithmetic is exact; nothing is floating point.

pub mod error;
pub mod field;
pub mod jordan;
pub mod killing;
pub mod liealg;
pub mod linalg;
pub mod repr;
pub mod restricted;

#[cfg(test)]
pub(crate) mod testutil;

pub use error::{Error, Result};
