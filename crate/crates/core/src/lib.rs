//! Martin invariants of regular multigraphs.
//!
//! The crate computes the Martin polynomial and the Martin invariant by
//! vertex expansion over transition classes with a canonical-form cache,
//! checks them against brute-force counters, and derives permanent and
//! `c2` residues. A census layer batches these over graph files.

pub mod census;
pub mod error;
pub mod martin;
pub mod multigraph;
pub mod oracle;
pub mod residues;
pub mod structure;
pub mod verify;

pub use error::{Error, Result};
pub use multigraph::Multigraph;
