//! Exact influential-node ranking by node contraction.
//!
//! The agglomeration of a connected graph is `(n - 1) / Σd`, where `Σd` sums
//! shortest-path lengths over ordered node pairs. Contracting a node `v`
//! merges `v` with its open neighbourhood into one new node; the importance
//! of `v` is `1 - φ(G) / φ(G'(v))`. Everything here is computed over exact
//! rationals.
//!
//! The crate is `no_std` and only needs `alloc`. Text formats, reports and
//! the command-line front end live in the `agglo` crate.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod closed_forms;
pub mod contraction;
pub mod engine;
pub mod error;
pub mod families;
pub mod graph;
pub mod rational;
pub mod signature;

pub use contraction::{contract, ContractionResult};
pub use engine::{average_path_length, imc, imc_all, phi, ImcEntry, RankReport};
pub use error::{Error, Result};
pub use families::{generate, FamilySpec, LabeledGraph, NodeClass};
pub use graph::{DistanceRow, DistanceSum, Graph, NodeId};
pub use rational::Rational;
