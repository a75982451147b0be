//! Finite groups given by Cayley tables or as class-2 groups G(p, n, S), their
//! commuting graphs and centralizer graphs, and a checker that runs the
//! structural theorems about those graphs against concrete groups.

pub mod builders;
pub mod constructions;
pub mod error;
pub mod fp;
pub mod graph;
pub mod group;
pub mod verifier;

pub use error::{Error, Result};
