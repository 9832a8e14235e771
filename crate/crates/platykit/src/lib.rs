//! Standard-library companion to `platykit-core`: streaming graph6 IO,
//! parallel filtering, the sharded census driver, JSON manifests and the
//! `platykit` command line.

pub mod census;
pub mod cli;
pub mod filter;
pub mod io;
pub mod manifest;
