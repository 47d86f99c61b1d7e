//! A finite-scale laboratory for topological rings and groups.
//!
//! Everything here is exact and exhaustive: rings are explicit operation
//! tables, topologies on n points are explicit minimal-neighborhood systems,
//! and the structure theorems connecting them are checked by enumeration
//! rather than assumed. The crate is organized bottom-up:
//!
//! - [`set`], [`budget`], [`report`]: bit-set subsets, work-budget guards,
//!   and the shared report vocabulary.
//! - [`finring`]: finite commutative rings, ideals, units, quotients.
//! - [`fintop`]: finite topological spaces and continuous maps.
//! - [`topalg`]: topological groups and rings, adic topologies, and the
//!   structure-theorem checkers.
//! - [`search`]: corpus sweeps that verify the theorems across every
//!   constructed example and hunt for counterexamples.

pub mod budget;
pub mod finring;
pub mod fintop;
pub mod report;
pub mod search;
pub mod set;
pub mod topalg;
