//! Chordality of competition graphs through forbidden subdigraphs.
//!
//! A good subdigraph has every in- and outdegree equal to 0 or 2, no
//! `P(2,2)`, no triangle-inducing pattern, and at least one arc. Any hole in
//! `C(D)` produces one; when every outdegree of `D` is at most 2 the
//! converse holds too.

mod chordal;
mod good;
mod patterns;

use crate::error::{Error, Result};
use crate::graph::{competition_graph, is_ij_digraph, DegreeBounds, Digraph};

pub use chordal::{canonical_cycle, is_chordal, is_hole, maximum_cardinality_search, ChordalityReport};
pub use good::{
    find_good_subdigraph, find_good_subdigraph_exhaustive, is_good_subdigraph, GoodSubdigraphReport,
    GOOD_SEARCH_VERTEX_LIMIT,
};
pub use patterns::{contains_subdigraph, induces_triangle, is_irredundant, PatternLibrary};

/// Computes both sides of "`C(D)` is chordal iff `D` has no good
/// subdigraph" for an `<i,2>` digraph and fails if they disagree. Within
/// the exhaustive limit the good side never looks at `C(D)`.
pub fn chordal_iff_no_good(d: &Digraph, i: usize) -> Result<(bool, GoodSubdigraphReport)> {
    let b = DegreeBounds::new(i, 2)?;
    if !is_ij_digraph(d, b) {
        return Err(Error::Precondition(format!("digraph is not a {b} digraph")));
    }
    let chordal = is_chordal(&competition_graph(d)).chordal;
    let report = if d.vertex_count() <= GOOD_SEARCH_VERTEX_LIMIT {
        find_good_subdigraph_exhaustive(d)?
    } else {
        find_good_subdigraph(d)?
    };
    if chordal == report.found {
        return Err(Error::EquivalenceFailed(format!(
            "chordal = {chordal} but good subdigraph found = {}",
            report.found
        )));
    }
    Ok((chordal, report))
}

/// For a `<2,2>` digraph, `C(D)` has maximum degree 2, so it is interval
/// exactly when no component is a cycle longer than a triangle.
pub fn interval_22(d: &Digraph) -> Result<bool> {
    let b = DegreeBounds::new(2, 2)?;
    if !is_ij_digraph(d, b) {
        return Err(Error::Precondition("digraph is not a <2,2> digraph".into()));
    }
    let g = competition_graph(d);
    let interval = g.components().iter().all(|c| {
        let edges: usize = c.iter().map(|&v| g.degree(v)).sum::<usize>() / 2;
        edges != c.len() || c.len() == 3
    });
    match find_good_subdigraph(d) {
        Ok(report) if report.found == interval => Err(Error::EquivalenceFailed(format!(
            "interval = {interval} but good subdigraph found = {}",
            report.found
        ))),
        Ok(_) | Err(Error::TooLarge { .. }) => Ok(interval),
        Err(e) => Err(e),
    }
}
