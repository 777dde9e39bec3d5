//! Exhaustive generators and brute-force oracles: card sequences under a
//! query, set partitions, Dyck paths, 2-covers and labelled digraphs.
//!
//! Everything here is deterministic and restartable. Card sequences come out
//! in lexicographic order of the family's card list.

mod families;
mod search;
mod structures;

pub use families::{all_sequences, order_preserving_subsets, ordered_subsets, AllSequences, CardFamily};
pub use search::{brute_js, census, cycle_census, enumerate, enumerate_minimal, enumerate_plus, Query};
pub use structures::{
    enumerate_2covers, enumerate_dyck, enumerate_labeled_digraphs, enumerate_noncrossing,
    enumerate_set_partitions, geometric_crossings, restricted_growth_strings,
};
