//! Invertible maps between card sequences and set partitions, ordered-subset
//! families and digraphs, covers and multigraphs, Dyck paths, and the
//! four-piece decomposition of sequences with two extra crossings.
//!
//! Blocks are ordered by their minima and symbols are relabelled by first
//! occurrence everywhere in this module.

mod cover;
mod family;
mod minimal;
mod partition;
mod plus_two;

pub use cover::{
    cover_initial_order, cover_partial_order, cover_to_multigraph, cover_to_sequence, multigraph_to_cover,
    CoverMatrix, Multigraph, VirtualOrder,
};
pub use family::{
    canonical_relabel, canonicalize_family, digraph_to_family, family_to_digraph, family_to_sequence,
    sequence_to_family, LabeledDigraph, OrderedSubsetFamily,
};
pub use minimal::{
    dyck_to_minimal, join_minimal, minimal_to_dyck, sequence_to_noncrossing_partition, split_minimal,
    DyckPath,
};
pub use partition::{partition_to_sequence, sequence_to_partition, SetPartition};
pub use plus_two::{compose_plus_two, decompose_plus_two, PlusTwoParts};
