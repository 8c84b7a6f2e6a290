//! Exact algorithms and reduction gadgets for fall coloring.
//!
//! A *fall k-coloring* of a graph partitions its vertices into `k`
//! independent dominating sets. Equivalently it is a proper coloring in which
//! every vertex sees every other color class in its neighborhood. The set of
//! all `k` admitting such a partition is the graph's *fall set*.
//!
//! The crate is organised in four layers:
//!
//! - [`graph`]: the immutable [`Graph`] carrier, bitset [`VertexSet`]s,
//!   deterministic generators and structural transforms (subdivision, power,
//!   products, line graph) plus a structural [`classify`](graph::classify).
//! - [`verify`]: certificate checkers for independence, domination, fall
//!   colorings and proper vertex/edge colorings.
//! - [`solve`]: exact deciders and counters for fall k-colorability, fall
//!   sets, chromatic number, edge colorability and disjoint independent
//!   dominating sets.
//! - [`reduce`]: instance transformers with traces and certificate lifting,
//!   and an equivalence harness that checks them against exact oracles.
//!
//! The crate is `no_std` and only needs `alloc`. File formats, timing and the
//! command-line front end live in the `fallkit` companion crate.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

mod error;
pub mod graph;
pub mod reduce;
pub mod solve;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};
pub use verify::{Coloring, EdgeColoring};
