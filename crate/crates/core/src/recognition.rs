//! Deciding whether a graph is the competition graph of an `<i,j>` digraph.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::cover::{repair_cover, search_cover, witness_digraph};
use crate::error::{Error, Result};
use crate::graph::{competition_graph, is_ij_digraph, necessary_conditions, DegreeBounds, Digraph, Graph, NecessaryCondition};

/// Why a graph is not in `G<i,j>`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Obstruction {
    IsK2,
    CompleteWithJ1,
    NecessaryConditionFailed(NecessaryCondition),
    NoCoverExists,
}

impl fmt::Display for Obstruction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::IsK2 => f.write_str("IsK2"),
            Self::CompleteWithJ1 => f.write_str("CompleteWithJ1"),
            Self::NecessaryConditionFailed(c) => write!(f, "NecessaryConditionFailed({c})"),
            Self::NoCoverExists => f.write_str("NoCoverExists"),
        }
    }
}

/// How a member witness was built.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Route {
    /// No arcs at all.
    Edgeless,
    /// The single nontrivial clique points at an isolated vertex.
    IsolatedSink,
    /// The explicit `<n-1,2>` digraph for `K_n`.
    CompleteGraph,
    /// Cover search, repair, then the SDR digraph.
    CoverRepair,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RecognitionCertificate {
    Member { witness: Digraph, route: Route },
    NonMember { obstruction: Obstruction },
}

impl RecognitionCertificate {
    pub fn is_member(&self) -> bool {
        matches!(self, Self::Member { .. })
    }

    pub fn witness(&self) -> Option<&Digraph> {
        match self {
            Self::Member { witness, .. } => Some(witness),
            Self::NonMember { .. } => None,
        }
    }

    pub fn obstruction(&self) -> Option<Obstruction> {
        match self {
            Self::Member { .. } => None,
            Self::NonMember { obstruction } => Some(*obstruction),
        }
    }
}

#[derive(Serialize)]
struct CertificateRepr<'a> {
    verdict: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<&'a Digraph>,
    #[serde(skip_serializing_if = "Option::is_none")]
    obstruction: Option<String>,
}

impl Serialize for RecognitionCertificate {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let repr = match self {
            Self::Member { witness, .. } => CertificateRepr { verdict: "member", witness: Some(witness), obstruction: None },
            Self::NonMember { obstruction } => CertificateRepr {
                verdict: "non-member",
                witness: None,
                obstruction: Some(obstruction.to_string()),
            },
        };
        repr.serialize(s)
    }
}

/// Arcs `(v_t, v_n)` for `t < n`, `(v_t, v_1)` for `t > 1`, and
/// `(v_1, v_2)`, `(v_n, v_2)`, with `v_t` stored as vertex `t - 1`. The
/// result is an `<n-1,2>` digraph whose competition graph is `K_n`.
pub fn complete_graph_witness(n: usize) -> Result<Digraph> {
    if n < 3 {
        return Err(Error::Precondition(format!("complete graph witness needs n >= 3, got {n}")));
    }
    let last = n - 1;
    let arcs = (0..last)
        .map(|t| (t, last))
        .chain((1..n).map(|t| (t, 0)))
        .chain([(0, 1), (last, 1)]);
    Digraph::from_arcs(n, arcs)
}

/// Full decision procedure. Member certificates are checked against both
/// the degree bounds and the competition graph before being returned.
pub fn recognize(g: &Graph, b: DegreeBounds) -> Result<RecognitionCertificate> {
    let non_member = |obstruction| Ok(RecognitionCertificate::NonMember { obstruction });
    let n = g.vertex_count();

    if n == 2 && g.edge_count() == 1 {
        return non_member(Obstruction::IsK2);
    }
    if b.j() == 1 && n >= 2 && g.is_complete() {
        return non_member(Obstruction::CompleteWithJ1);
    }
    if let Some(&failed) = necessary_conditions(g, b).first() {
        return non_member(Obstruction::NecessaryConditionFailed(failed));
    }

    let (witness, route) = if let Some(found) = closed_form(g, b)? {
        found
    } else {
        match search_cover(g, b)? {
            None => return non_member(Obstruction::NoCoverExists),
            Some(cover) => {
                let repaired = repair_cover(g, &cover, b)?;
                (witness_digraph(g, &repaired.cover, &repaired.sdr)?, Route::CoverRepair)
            }
        }
    };
    if !is_ij_digraph(&witness, b) {
        return Err(Error::EquivalenceFailed(format!("witness is not a {b} digraph")));
    }
    if competition_graph(&witness) != *g {
        return Err(Error::EquivalenceFailed("witness has the wrong competition graph".into()));
    }
    Ok(RecognitionCertificate::Member { witness, route })
}

/// The cases that need no search.
fn closed_form(g: &Graph, b: DegreeBounds) -> Result<Option<(Digraph, Route)>> {
    let n = g.vertex_count();
    if g.is_edgeless() {
        return Ok(Some((Digraph::empty(n), Route::Edgeless)));
    }
    let busy: Vec<usize> = (0..n).filter(|&v| g.degree(v) > 0).collect();
    if let Some(sink) = g.isolated_vertices().next() {
        if busy.len() <= b.i() && g.is_clique(&busy) {
            let d = Digraph::from_arcs(n, busy.iter().map(|&u| (u, sink)))?;
            return Ok(Some((d, Route::IsolatedSink)));
        }
    }
    if g.is_complete() && n >= 3 && b.j() >= 2 && b.i() >= n - 1 {
        return Ok(Some((complete_graph_witness(n)?, Route::CompleteGraph)));
    }
    Ok(None)
}

/// `G<1,j>` is exactly the edgeless graphs.
pub fn recognize_1j(g: &Graph) -> bool {
    g.is_edgeless()
}

/// `G<i,1>` is the trivial graph and disjoint unions of at least two
/// complete graphs of order at most `i`.
pub fn recognize_i1(g: &Graph, i: usize) -> bool {
    if g.vertex_count() <= 1 {
        return true;
    }
    let parts = g.components();
    parts.len() >= 2 && parts.iter().all(|c| c.len() <= i && g.is_clique(c))
}
