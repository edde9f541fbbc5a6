//! Edge-list IO, a thread-pool executor for the per-vertex loops of
//! [`kegraph_core`], oracle verification reports and the `kegraph`
//! command-line front end.

pub mod cli;
pub mod edgelist;
pub mod parallel;
pub mod verify;

pub use parallel::Parallel;
