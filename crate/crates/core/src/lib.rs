//! Rooted `K4`-minors versus color-avoiding 4-colorings.
//!
//! Given a graph `G` with `χ(G) <= 4` and a root set `S`, [`solver::solve`]
//! returns either four disjoint connected, pairwise adjacent branch sets that
//! each meet `S`, or a proper 4-coloring in which some color never appears on
//! `S`. Both outcomes carry certificates that are checked independently of the
//! code that produced them.

#![allow(clippy::needless_range_loop)]

pub mod coloring;
pub mod error;
pub mod gen;
pub mod graph;
pub mod minors;
pub mod planar;
pub mod solver;

pub use error::{Error, Result};
pub use graph::{Graph, IdMap, Path, Separation};
