//! Finite-model workbench for rough-set Nelson algebras induced by quasiorders.
//!
//! The pipeline runs from a quasiorder on a small universe, through its
//! Alexandrov topologies and their Heyting structure, to the algebras of
//! rough sets and the constructive logic they interpret.

pub mod approx;
pub mod cli;
pub mod error;
pub mod export;
pub mod fixtures;
pub mod heyting;
pub mod lattice;
pub mod logic;
pub mod nelson;
pub mod relations;
pub mod report;
pub mod roughsets;
pub mod suite;

pub use error::{Error, Result};
pub use relations::{PointSet, QuasiOrder, Universe};
