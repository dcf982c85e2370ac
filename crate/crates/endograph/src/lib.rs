//! Finite groups as explicit multiplication tables, exhaustive enumeration of
//! their endomorphism monoids, and the directed/undirected/compressed graphs
//! those monoids define on the group elements - together with the graph
//! invariants (cliques, coloring, planarity, connectivity) needed to check
//! the structural statements the library is built around.
//!
//! The layering is strictly bottom-up:
//!
//! * [`group`] - multiplication tables for the named families,
//! * [`hom`] - endomorphism/automorphism enumeration, reachability,
//!   orbit and indifference-class partitions,
//! * [`graph`] - digraph/graph/condensation construction, products,
//!   isomorphism,
//! * [`analytics`] - invariants with self-validating certificates,
//! * [`numtheory`] - the cyclic-group closed forms,
//! * [`power`] - directed power graphs and their comparison with
//!   endomorphism digraphs.

// index-driven loops over table rows and recurrences read better here
#![allow(clippy::needless_range_loop)]

pub mod analytics;
pub mod bits;
pub mod error;
pub mod graph;
pub mod group;
pub mod hom;
pub mod numtheory;
pub mod power;

pub use error::{Error, Result};
pub use group::{build_group, direct_product, FiniteGroup, GroupSpec};
