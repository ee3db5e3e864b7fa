//! Exact general position numbers of graphs.
//!
//! A set of vertices is in *general position* when no three of its members
//! lie on a common geodesic. This crate computes the largest such set — the
//! gp-number — exactly, and specializes the computation for cacti (via
//! block decomposition, cut-path distances and good/bad cycle
//! classification) and for wheels (closed form). A built-in audit harness
//! replays every closed form and bound against brute force on small
//! instances and reports counterexamples as replayable records.
//!
//! The accompanying guide in `book/` walks through the concepts; its code
//! snippets are compiled as doctests of this crate.

pub mod audit;
pub mod blocks;
pub mod cactus;
mod error;
pub mod families;
pub mod graph;
pub mod solver;

pub use error::{Error, Result};
pub use graph::{DistanceMatrix, Graph, VertexSet};
pub use solver::{GpCertificate, Method};

// Book chapters double as doctests so the guide can never drift from the
// API. `cfg(doctest)` keeps these modules out of the public surface.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    pub mod introduction {}
    #[doc = include_str!("../../../book/src/graphs.md")]
    pub mod graphs {}
    #[doc = include_str!("../../../book/src/general_position.md")]
    pub mod general_position {}
    #[doc = include_str!("../../../book/src/cactus.md")]
    pub mod cactus {}
    #[doc = include_str!("../../../book/src/families.md")]
    pub mod families {}
    #[doc = include_str!("../../../book/src/wheels.md")]
    pub mod wheels {}
    #[doc = include_str!("../../../book/src/auditing.md")]
    pub mod auditing {}
    #[doc = include_str!("../../../book/src/cli.md")]
    pub mod cli {}
}
