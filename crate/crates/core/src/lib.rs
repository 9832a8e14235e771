//! Platypus graphs: constructions, hamiltonicity predicates, graph
//! invariants, canonical labeling and isomorph-free generation.
//!
//! A platypus is a non-hamiltonian graph on at least three vertices in which
//! every vertex-deleted subgraph is traceable.
//!
//! The crate is `no_std` (with `alloc`). File IO, the parallel census driver
//! and the command line live in the `platykit` crate.

#![no_std]

extern crate alloc;

/// Runs `$body` with `$rows` bound to the graph's adjacency rows at their
/// native width.
macro_rules! dispatch {
    ($g:expr, |$rows:ident| $body:expr) => {
        match $g.rows_ref() {
            $crate::graph::RowsRef::Narrow($rows) => $body,
            $crate::graph::RowsRef::Wide($rows) => $body,
        }
    };
}

pub mod bitset;
pub mod constructions;
pub mod generation;
pub mod graph;
pub mod graph6;
pub mod hamiltonicity;
pub mod invariants;
pub mod isomorphism;
mod traversal;

pub use graph::{EdgeMultiset, Graph, GraphError, HamWitness, WitnessKind};
pub use hamiltonicity::{Evidence, PropertyReport};
