//! Minimum aged labeling of temporal graphs.
//!
//! A labeling assigns time labels to the edges of a graph; it is temporally
//! connected when every ordered pair of vertices is joined by a path whose
//! labels strictly increase. Its age is the largest label used. This crate
//! verifies labelings, computes small optima exactly, builds approximate
//! labelings under an age budget and generates the gadget graphs that
//! connect the problem to set cover and diameter-constrained subgraphs.

pub mod approx;
pub mod bench;
pub mod bridge;
pub mod dominating;
pub mod error;
pub mod exact;
pub mod folklore;
pub mod generate;
pub mod graph;
pub mod io;
pub mod par;
pub mod reductions;
pub mod solve;
pub mod temporal;
pub mod variants;

pub use error::{Error, Result};
pub use graph::{Edge, Graph, Vertex};
pub use par::Parallelism;
pub use temporal::{Label, Labeling, TemporalGraph, Verdict};
