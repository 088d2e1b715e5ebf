//! Competition graphs of digraphs with bounded in- and outdegrees.
//!
//! A graph is an `<i,j>` competition graph when it is the competition graph
//! of a loopless digraph whose indegrees are at most `i` and outdegrees at
//! most `j`. This crate decides membership through edge clique covers and
//! systems of distinct representatives, studies chordality of such graphs,
//! links extremal cliques to block designs, and compares the families for
//! different bounds.

pub mod chordality;
pub mod cover;
pub mod designs;
mod error;
pub mod families;
pub mod graph;
pub mod io;
pub mod recognition;

pub use cover::{CliqueCover, HallViolation, SdrAssignment};
pub use error::{Error, Result};
pub use graph::{competition_graph, is_ij_digraph, DegreeBounds, Digraph, Graph};
pub use recognition::{recognize, RecognitionCertificate};
