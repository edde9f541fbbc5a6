//! Maximum matching, König-Egerváry recognition and core computation for
//! simple undirected graphs.
//!
//! A graph is König-Egerváry (KE) when its independence number and matching
//! number add up to its order. For such graphs the intersection of all
//! maximum independent sets (the core) is computable in polynomial time by
//! deleting one vertex at a time and comparing matching numbers and KE-ness;
//! [`solver`] implements the general loop and its bipartite and
//! perfect-matching specializations.
//!
//! The crate is `no_std` and only needs `alloc`. The per-vertex loops are
//! generic over [`solver::VertexMap`], so a threaded executor can be plugged
//! in from outside.
#![no_std]

extern crate alloc;

pub mod fixtures;
pub mod generator;
pub mod graph;
pub mod ke;
pub mod matching;
pub mod oracle;
pub mod solver;
mod twosat;

pub use graph::{Bipartition, Graph, GraphError, Side, TwoColoring, Vertex, VertexSet};
pub use ke::{is_ke, ke_given_matching, KeVerdict, NotKeReason};
pub use matching::{maximum_matching, mu_after_delete, Matching, MatchingError};
pub use solver::{compute_core, Algorithm, CoreError, CoreResult, Mode, Sequential, VertexMap};
