//! Rainbow vertex coloring toolkit.
//!
//! A vertex-colored graph is rainbow vertex-connected when every pair of
//! vertices is joined by a path whose internal vertices all have distinct
//! colors. This crate bundles:
//!
//! - constructive optimal colorings for permutation graphs (given an
//!   intersection model), powers of trees, and split strongly chordal
//!   graphs;
//! - exact brute-force solvers and verifiers for the rainbow and strong
//!   rainbow variants, usable as ground truth at small scale;
//! - seeded instance generators for each graph class;
//! - the split-graph reduction gadget from graph coloring, plus an induced
//!   sun search to check its structure;
//! - plain-text file formats and the `rvc` command-line tool.

pub mod error;
pub mod gadget;
pub mod generators;
pub mod graph;
pub mod io;
pub mod oracle;
pub mod perm;
pub mod splitsc;
pub mod treepow;

pub use error::{Error, Result};
pub use graph::{DistanceMatrix, Graph, VertexId};
pub use oracle::VertexColoring;
