//! Separating gadgets and the containment relation between the families
//! `G<i,j>` of `<i,j>` competition graphs.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::cover::{repair_cover, validate_cover, witness_digraph, CliqueCover};
use crate::error::{Error, Result};
use crate::graph::{competition_graph, is_ij_digraph, DegreeBounds, Digraph, Graph};
use crate::recognition::{recognize, Obstruction, RecognitionCertificate};

/// `j` cliques of order `i` sharing the hub vertex 0. Clique `t` uses the
/// hub and vertices `1 + t(i-1) ..= (t+1)(i-1)`.
pub fn star_of_cliques(i: usize, j: usize) -> Result<Graph> {
    let cover = star_of_cliques_cover(i, j)?;
    Ok(graph_of_cover(j * (i - 1) + 1, &cover))
}

/// The cliques of [`star_of_cliques`], in order.
pub fn star_of_cliques_cover(i: usize, j: usize) -> Result<CliqueCover> {
    if i < 2 || j < 2 {
        return Err(Error::Precondition(format!("star of cliques needs i, j >= 2, got ({i},{j})")));
    }
    let cliques = (0..j)
        .map(|t| std::iter::once(0).chain(1 + t * (i - 1)..1 + (t + 1) * (i - 1)).collect())
        .collect();
    Ok(CliqueCover::new(cliques))
}

/// `K_i ∪ K_i` on vertices `0..i` and `i..2i`.
pub fn double_clique(i: usize) -> Result<Graph> {
    let cover = double_clique_cover(i)?;
    Ok(graph_of_cover(2 * i, &cover))
}

pub fn double_clique_cover(i: usize) -> Result<CliqueCover> {
    if i == 0 {
        return Err(Error::Precondition("double clique needs i >= 1".into()));
    }
    Ok(CliqueCover::new(vec![(0..i).collect(), (i..2 * i).collect()]))
}

/// Largest `k` accepted by [`hamming_graph`]; the graph has `(k+1)^k`
/// vertices.
pub const HAMMING_LIMIT: usize = 4;

/// Tuples in `{0..k}^k`, adjacent when they differ in one coordinate,
/// together with the cover by axis-parallel lines. Tuple `x` is vertex
/// `Σ x_t (k+1)^t`.
pub fn hamming_graph(k: usize) -> Result<(Graph, CliqueCover)> {
    if k < 2 {
        return Err(Error::Precondition(format!("hamming graph needs k >= 2, got {k}")));
    }
    if k > HAMMING_LIMIT {
        return Err(Error::TooLarge { guard: "hamming graph", actual: k, limit: HAMMING_LIMIT });
    }
    let m = k + 1;
    let n = m.pow(k as u32);
    let mut lines = Vec::with_capacity(k * n / m);
    for t in 0..k {
        let step = m.pow(t as u32);
        for u in (0..n).filter(|u| (u / step).is_multiple_of(m)) {
            lines.push((0..m).map(|a| u + a * step).collect());
        }
    }
    let cover = CliqueCover::new(lines);
    Ok((graph_of_cover(n, &cover), cover))
}

fn graph_of_cover(n: usize, cover: &CliqueCover) -> Graph {
    let mut adj = vec![Vec::new(); n];
    for clique in cover.cliques() {
        for &u in clique {
            adj[u].extend(clique.iter().copied().filter(|&v| v != u));
        }
    }
    for list in &mut adj {
        list.sort_unstable();
        list.dedup();
    }
    Graph::from_adjacency_unchecked(adj)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Relation {
    Equal,
    ProperSubset,
    /// Neither family contains the other.
    NotContained,
    Unknown,
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Equal => "Equal",
            Self::ProperSubset => "ProperSubset",
            Self::NotContained => "NotContained",
            Self::Unknown => "Unknown",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Gadget {
    StarOfCliques,
    DoubleClique,
    Hamming,
}

/// A graph in `G<member_of>` but not in `G<excluded_from>`, with both
/// sides checked.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Separation {
    pub member_of: DegreeBounds,
    pub excluded_from: DegreeBounds,
    pub gadget: Gadget,
    pub witness: Graph,
    /// A `<member_of>` digraph whose competition graph is the witness.
    pub member_digraph: Digraph,
    pub exclusion: Obstruction,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContainmentVerdict {
    pub relation: Relation,
    /// For `ProperSubset`, the bounds of the smaller family.
    pub subset: Option<DegreeBounds>,
    /// For `ProperSubset`, the bounds of the larger family.
    pub superset: Option<DegreeBounds>,
    pub separations: Vec<Separation>,
    pub rationale: String,
}

impl ContainmentVerdict {
    pub fn witness(&self) -> Option<&Graph> {
        self.separations.first().map(|s| &s.witness)
    }
}

#[derive(Serialize)]
struct VerdictRepr<'a> {
    relation: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<&'a Graph>,
    rationale: &'a str,
    #[serde(skip_serializing_if = "Option::is_none")]
    subset: Option<DegreeBounds>,
    #[serde(skip_serializing_if = "Option::is_none")]
    superset: Option<DegreeBounds>,
    separations: Vec<SeparationRepr>,
}

#[derive(Serialize)]
struct SeparationRepr {
    member_of: DegreeBounds,
    excluded_from: DegreeBounds,
    gadget: Gadget,
    exclusion: String,
}

impl Serialize for ContainmentVerdict {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        VerdictRepr {
            relation: self.relation.to_string(),
            witness: self.witness(),
            rationale: &self.rationale,
            subset: self.subset,
            superset: self.superset,
            separations: self
                .separations
                .iter()
                .map(|sep| SeparationRepr {
                    member_of: sep.member_of,
                    excluded_from: sep.excluded_from,
                    gadget: sep.gadget,
                    exclusion: sep.exclusion.to_string(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

/// Compares `G<b1>` with `G<b2>`. Every separation behind a strict or
/// failed containment is built and verified before returning.
pub fn containment(b1: DegreeBounds, b2: DegreeBounds) -> Result<ContainmentVerdict> {
    if b1 == b2 {
        return Ok(verdict(Relation::Equal, None, Vec::new(), "identical bounds"));
    }
    // (i,j) is the side with the larger indegree bound, then the larger outdegree bound
    let (big, small) = if (b1.i(), b1.j()) > (b2.i(), b2.j()) { (b1, b2) } else { (b2, b1) };
    let (i, j, k, l) = (big.i(), big.j(), small.i(), small.j());
    let proper = |sub: DegreeBounds, sup: DegreeBounds, why: &str| -> Result<ContainmentVerdict> {
        let sep = separation_witness(sup, sub)?
            .ok_or_else(|| Error::EquivalenceFailed(format!("no verified separation of {sup} from {sub}")))?;
        Ok(verdict(Relation::ProperSubset, Some((sub, sup)), vec![sep], why))
    };

    if i == k {
        if i == 1 {
            return Ok(verdict(Relation::Equal, None, Vec::new(), "indegree bound 1: both families are the edgeless graphs"));
        }
        return proper(small, big, "equal indegree bounds, larger outdegree bound gives the larger family");
    }
    if j > l {
        return proper(small, big, "both bounds larger: monotone containment, strict");
    }
    if j == l {
        return proper(small, big, "larger indegree bound, equal outdegree bound: monotone containment, strict");
    }
    // i > k and j < l
    if k == 1 {
        return proper(small, big, "indegree bound 1 gives only edgeless graphs, which every family contains");
    }
    if (i, j, k) == (3, 1, 2) || (i, j, k) == (4, 1, 3) {
        return proper(big, small, "disjoint unions of small cliques already lie in the other family");
    }
    let forward = separation_witness(small, big)?
        .ok_or_else(|| Error::EquivalenceFailed(format!("no verified separation of {small} from {big}")))?;
    let reverse_claimed = i > k * k - k + 1 || (i - 1) * j > (k - 1) * l || j >= k || (i, j, k, l) == (5, 1, 3, 2);
    if reverse_claimed {
        let backward = separation_witness(big, small)?
            .ok_or_else(|| Error::EquivalenceFailed(format!("no verified separation of {big} from {small}")))?;
        return Ok(verdict(
            Relation::NotContained,
            None,
            vec![forward, backward],
            "each family has a graph outside the other",
        ));
    }
    Ok(verdict(
        Relation::Unknown,
        None,
        vec![forward],
        "open region: the family with larger outdegree bound is not contained in the other, the reverse is undecided",
    ))
}

fn verdict(
    relation: Relation,
    order: Option<(DegreeBounds, DegreeBounds)>,
    separations: Vec<Separation>,
    rationale: &str,
) -> ContainmentVerdict {
    ContainmentVerdict {
        relation,
        subset: order.map(|o| o.0),
        superset: order.map(|o| o.1),
        separations,
        rationale: rationale.to_string(),
    }
}

/// A verified graph in `G<member> - G<excluded>` built from the first
/// applicable gadget, or `None` when no gadget applies.
pub fn separation_witness(member: DegreeBounds, excluded: DegreeBounds) -> Result<Option<Separation>> {
    let (i, j, k, l) = (member.i(), member.j(), excluded.i(), excluded.j());
    let mut candidates: Vec<(Gadget, Graph, CliqueCover)> = Vec::new();
    if i >= 2 && j >= 2 && (j > l || (i - 1) * j > (k - 1) * l) {
        candidates.push((Gadget::StarOfCliques, star_of_cliques(i, j)?, star_of_cliques_cover(i, j)?));
    }
    let double = i > k * k - k + 1 || (j == 1 && i - 1 > (k - 1) * l) || (i, j, k, l) == (5, 1, 3, 2);
    if i >= 2 && double {
        candidates.push((Gadget::DoubleClique, double_clique(i)?, double_clique_cover(i)?));
    }
    if j >= k && k >= 2 && i > k && k <= HAMMING_LIMIT {
        let (g, cover) = hamming_graph(k)?;
        candidates.push((Gadget::Hamming, g, cover));
    }
    for (gadget, witness, cover) in candidates {
        let member_digraph = certify_member(&witness, &cover, member)?;
        match recognize(&witness, excluded) {
            Ok(RecognitionCertificate::NonMember { obstruction }) => {
                return Ok(Some(Separation { member_of: member, excluded_from: excluded, gadget, witness, member_digraph, exclusion: obstruction }));
            }
            Ok(RecognitionCertificate::Member { .. }) => {
                return Err(Error::EquivalenceFailed(format!("{gadget:?} gadget lies in the {excluded} family")));
            }
            Err(Error::TooLarge { .. }) => continue,
            Err(e) => return Err(e),
        }
    }
    Ok(None)
}

/// Turns a cover into a checked witness digraph: validate, repair, build,
/// then confirm the degree bounds and the competition graph.
pub fn certify_member(g: &Graph, cover: &CliqueCover, b: DegreeBounds) -> Result<Digraph> {
    let d = if g.is_edgeless() {
        Digraph::empty(g.vertex_count())
    } else {
        if !validate_cover(g, cover, b) {
            return Err(Error::Precondition(format!("cover is not valid for {b}")));
        }
        let repaired = repair_cover(g, cover, b)?;
        witness_digraph(g, &repaired.cover, &repaired.sdr)?
    };
    if !is_ij_digraph(&d, b) || competition_graph(&d) != *g {
        return Err(Error::EquivalenceFailed(format!("member witness for {b} failed its checks")));
    }
    Ok(d)
}
