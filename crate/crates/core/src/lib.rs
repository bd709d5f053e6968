//! Gallai colorings and odd-cycle Gallai-Ramsey numbers.
//!
//! The crate is organized bottom-up:
//!
//! - [`coloring`] and [`format`]: edge-colored complete graphs and their text
//!   interchange format;
//! - [`detect`]: detectors for rainbow triangles, monochromatic cycles and
//!   paths, Hamilton cycles under the Dirac condition, and the path lemmas,
//!   each returning a re-checkable [`Witness`];
//! - [`structure`]: Gallai partitions, reduced graphs and the partition lemmas;
//! - [`constructions`]: extremal colorings and closed-form bounds;
//! - [`search`]: isomorph-free exhaustive search for small Ramsey and
//!   Gallai-Ramsey numbers.
//!
//! Graph types are generic over the bitset word. [`Coloring`] (64 vertices)
//! is the default; [`WideColoring`] doubles the vertex limit.

pub mod bits;
pub mod coloring;
pub mod constructions;
pub mod detect;
pub mod error;
pub mod format;
pub mod graph;
pub mod search;
pub mod structure;
pub mod witness;

pub use bits::BitWord;
pub use coloring::{Color, ColorClassView, ColoredCompleteGraph, VertexSubset};
pub use error::{Error, Result};
pub use graph::SimpleGraph;
pub use witness::{Witness, WitnessKind};

/// Colorings on up to 64 vertices.
pub type Coloring = ColoredCompleteGraph<u64>;
/// Colorings on up to 128 vertices.
pub type WideColoring = ColoredCompleteGraph<u128>;
/// Vertex subsets of a [`Coloring`].
pub type Subset = VertexSubset<u64>;
/// Simple graphs on up to 64 vertices.
pub type Graph = SimpleGraph<u64>;
