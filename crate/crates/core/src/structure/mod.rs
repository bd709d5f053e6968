//! Gallai partitions, reduced graphs and the lemmas built on them.

mod lemmas;
mod partition;

pub use lemmas::{between_parts_cycle, recolor_small_parts};
pub use partition::{
    gallai_partition, induced_parts, reduced_graph, validate_partition, GallaiPartition, Violation,
};
