//! Command-line front end and file formats for `agglo-core`.
//!
//! * [`edgelist`]: the edge-list text format, including the `# n=<order>`
//!   header and `# class <id> <name>` labels;
//! * [`report`]: table, CSV and JSON rendering of rankings;
//! * [`parallel`]: per-node fan-out of the ranking with deterministic output;
//! * [`verify`]: engine-versus-closed-form harness over parameter grids;
//! * [`cli`]: the `agglo` binary.

pub mod cli;
pub mod edgelist;
pub mod error;
pub mod parallel;
pub mod report;
pub mod verify;

pub use error::CliError;
