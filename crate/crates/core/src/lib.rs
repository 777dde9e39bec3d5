//! Juggling card sequences.
//!
//! A card on `b` levels throws the bottom balls to chosen levels and lets the
//! rest fall. This crate models cards and their sequences, counts them by
//! permutation and crossing number, converts between sequences and the
//! partitions, digraphs, covers and Dyck paths they are in bijection with,
//! enumerates them exhaustively, and samples them at random.

pub mod bijections;
pub mod cards;
pub mod cli;
pub mod counting;
pub mod enumeration;
pub mod error;
pub mod render;
pub mod stochastic;

pub use cards::{Arrangement, Card, CardSequence, Permutation};
pub use error::{Error, Result};
