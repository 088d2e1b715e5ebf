//! Edge clique covers with bounded clique size, bounded vertex multiplicity
//! and at most `|V|` cliques, together with the SDR machinery that turns
//! such a cover into a witness digraph.

mod repair;
mod sdr;
mod search;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{DegreeBounds, Digraph, Graph};

pub use repair::{repair_cover, Repair, RepairStep};
pub use sdr::{find_sdr, subsets_lemma_index, HallViolation, SdrAssignment, SdrOutcome};
pub use search::{search_cover, CANDIDATE_LIMIT, SEARCH_VERTEX_LIMIT};

/// An ordered list of vertex sets `C_1..C_p`. Each set is stored sorted and
/// without repeats; the list itself keeps the caller's order.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(from = "CoverRepr", into = "CoverRepr")]
pub struct CliqueCover {
    cliques: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CoverRepr {
    cliques: Vec<Vec<usize>>,
}

impl From<CoverRepr> for CliqueCover {
    fn from(r: CoverRepr) -> Self {
        Self::new(r.cliques)
    }
}

impl From<CliqueCover> for CoverRepr {
    fn from(c: CliqueCover) -> Self {
        Self { cliques: c.cliques }
    }
}

impl CliqueCover {
    pub fn new(cliques: Vec<Vec<usize>>) -> Self {
        let cliques = cliques
            .into_iter()
            .map(|mut c| {
                c.sort_unstable();
                c.dedup();
                c
            })
            .collect();
        Self { cliques }
    }

    pub fn cliques(&self) -> &[Vec<usize>] {
        &self.cliques
    }

    pub fn len(&self) -> usize {
        self.cliques.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cliques.is_empty()
    }

    /// `w(C) = Σ |C_t|`.
    pub fn weight(&self) -> usize {
        self.cliques.iter().map(Vec::len).sum()
    }

    /// Number of cliques containing `v`.
    pub fn multiplicity(&self, v: usize) -> usize {
        self.cliques.iter().filter(|c| c.binary_search(&v).is_ok()).count()
    }

    pub(crate) fn into_cliques(self) -> Vec<Vec<usize>> {
        self.cliques
    }
}

/// The first reason a cover falls outside `C(G, i, j)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum CoverDefect {
    VertexOutOfRange { clique: usize, vertex: usize },
    NotAClique { clique: usize },
    UncoveredEdge { u: usize, v: usize },
    /// Condition (i): a clique has more than `i` vertices.
    CliqueTooLarge { clique: usize, size: usize },
    /// Condition (ii): a vertex lies in more than `j` cliques.
    VertexOverused { vertex: usize, count: usize },
    /// Condition (iv): more cliques than vertices.
    TooManyCliques { count: usize },
}

impl fmt::Display for CoverDefect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::VertexOutOfRange { clique, vertex } => {
                write!(f, "clique {clique} names vertex {vertex}, which is out of range")
            }
            Self::NotAClique { clique } => write!(f, "set {clique} is not a clique"),
            Self::UncoveredEdge { u, v } => write!(f, "edge {u}-{v} is not covered"),
            Self::CliqueTooLarge { clique, size } => write!(f, "clique {clique} has {size} vertices"),
            Self::VertexOverused { vertex, count } => write!(f, "vertex {vertex} lies in {count} cliques"),
            Self::TooManyCliques { count } => write!(f, "{count} cliques exceed the vertex count"),
        }
    }
}

/// Checks that `c` covers every edge of `g` with cliques and satisfies the
/// size, multiplicity and count conditions for `b`.
pub fn check_cover(g: &Graph, c: &CliqueCover, b: DegreeBounds) -> Result<(), CoverDefect> {
    let n = g.vertex_count();
    let mut uses = vec![0usize; n];
    let mut covered = vec![Vec::new(); n];
    for (t, clique) in c.cliques().iter().enumerate() {
        if let Some(&vertex) = clique.iter().find(|&&v| v >= n) {
            return Err(CoverDefect::VertexOutOfRange { clique: t, vertex });
        }
        if !g.is_clique(clique) {
            return Err(CoverDefect::NotAClique { clique: t });
        }
        if clique.len() > b.i() {
            return Err(CoverDefect::CliqueTooLarge { clique: t, size: clique.len() });
        }
        for (a, &u) in clique.iter().enumerate() {
            uses[u] += 1;
            covered[u].extend_from_slice(&clique[a + 1..]);
        }
    }
    for list in &mut covered {
        list.sort_unstable();
        list.dedup();
    }
    if let Some((u, v)) = g.edges().find(|&(u, v)| covered[u].binary_search(&v).is_err()) {
        return Err(CoverDefect::UncoveredEdge { u, v });
    }
    if let Some((vertex, &count)) = uses.iter().enumerate().find(|(_, &k)| k > b.j()) {
        return Err(CoverDefect::VertexOverused { vertex, count });
    }
    if c.len() > n {
        return Err(CoverDefect::TooManyCliques { count: c.len() });
    }
    Ok(())
}

/// Whether `c` belongs to `C(G, i, j)`.
pub fn validate_cover(g: &Graph, c: &CliqueCover, b: DegreeBounds) -> bool {
    check_cover(g, c, b).is_ok()
}

/// The digraph with arcs `(v, v_t)` for every `v` in `C_t`. Its competition
/// graph is `g` whenever `c` covers `g`, and it is an `<i,j>` digraph for any
/// bounds `c` validates against.
pub fn witness_digraph(g: &Graph, c: &CliqueCover, s: &SdrAssignment) -> Result<Digraph> {
    let reps = s.representatives();
    if reps.len() != c.len() {
        return Err(Error::Precondition(format!(
            "{} representatives for {} cliques",
            reps.len(),
            c.len()
        )));
    }
    let n = g.vertex_count();
    if let Some(&vertex) = reps.iter().find(|&&v| v >= n) {
        return Err(Error::VertexOutOfRange { vertex, n });
    }
    let mut sorted = reps.to_vec();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::Precondition("representatives are not distinct".into()));
    }
    if let Some((t, _)) = c
        .cliques()
        .iter()
        .zip(reps)
        .enumerate()
        .find(|(_, (clique, rep))| clique.binary_search(rep).is_ok())
    {
        return Err(Error::Precondition(format!("representative of clique {t} lies inside it")));
    }
    let arcs = c
        .cliques()
        .iter()
        .zip(reps)
        .flat_map(|(clique, &rep)| clique.iter().map(move |&v| (v, rep)));
    Digraph::from_arcs(n, arcs)
}
