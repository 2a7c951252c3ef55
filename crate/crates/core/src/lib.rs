//! Finite and truncated-infinite workbench for gammoids, transversal matroids
//! and their duality.
//!
//! The core objects are [`dimaze::Dimaze`] (a digraph with exit sinks) and
//! [`bimaze::Bimaze`] (a bipartite graph with a matching onto its right class).
//! Every matroid built from them is exposed as a [`matroid::IndependenceOracle`]
//! so results can be cross-checked by brute force.

pub mod bimaze;
pub mod cli;
pub mod demo;
pub mod dimaze;
pub mod duality;
pub mod error;
pub mod io;
pub mod lazy;
pub mod matroid;
pub mod pym;
pub mod random;
pub mod shift;
pub mod sweep;

pub use error::{Error, Result};
pub use matroid::{ElemSet, GroundSet, IndependenceOracle};

/// Enumeration cap from `GAMMOID_LAB_CAP`, falling back to [`matroid::DEFAULT_CAP`].
pub fn enumeration_cap() -> usize {
    std::env::var("GAMMOID_LAB_CAP")
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(matroid::DEFAULT_CAP)
}
