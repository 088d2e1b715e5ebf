use serde::{Deserialize, Serialize};

use super::chordal::is_chordal;
use super::patterns::{induces_triangle, is_irredundant};
use crate::error::{Error, Result};
use crate::graph::{competition_graph, Digraph};

/// Largest digraph the exhaustive good-subdigraph search accepts.
pub const GOOD_SEARCH_VERTEX_LIMIT: usize = 10;

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct GoodSubdigraphReport {
    pub found: bool,
    /// Vertices of the subdigraph, sorted.
    pub vertices: Vec<usize>,
    /// Arcs of the subdigraph in host labels, sorted.
    pub arcs: Vec<(usize, usize)>,
}

impl GoodSubdigraphReport {
    fn not_found() -> Self {
        Self::default()
    }

    fn from_arcs(mut arcs: Vec<(usize, usize)>) -> Self {
        arcs.sort_unstable();
        let mut vertices: Vec<usize> = arcs.iter().flat_map(|&(u, v)| [u, v]).collect();
        vertices.sort_unstable();
        vertices.dedup();
        Self { found: true, vertices, arcs }
    }
}

/// Whether the arcs form a good subdigraph of `host`: all arcs present,
/// every in- and outdegree 0 or 2, irredundant, no triangle pattern, and
/// at least one arc.
pub fn is_good_subdigraph(host: &Digraph, arcs: &[(usize, usize)]) -> bool {
    let n = host.vertex_count();
    if arcs.is_empty() || arcs.iter().any(|&(u, v)| u >= n || v >= n || !host.has_arc(u, v)) {
        return false;
    }
    let Ok(sub) = Digraph::from_arcs(n, arcs.iter().copied()) else {
        return false;
    };
    let degrees_ok = (0..n).all(|v| matches!(sub.outdegree(v), 0 | 2) && matches!(sub.indegree(v), 0 | 2));
    degrees_ok && is_irredundant(&sub) && !induces_triangle(&sub)
}

/// Looks for a good subdigraph. A hole `v_1..v_m` of the competition graph
/// yields one directly: pick a common out-neighbour `u_t` of `v_t` and
/// `v_{t+1}` and keep the arcs `(v_t, u_t)`, `(v_{t+1}, u_t)`. When the
/// competition graph is chordal the exhaustive search decides, within
/// [`GOOD_SEARCH_VERTEX_LIMIT`].
pub fn find_good_subdigraph(d: &Digraph) -> Result<GoodSubdigraphReport> {
    if let Some(hole) = is_chordal(&competition_graph(d)).hole {
        let m = hole.len();
        let arcs: Vec<(usize, usize)> = (0..m)
            .flat_map(|t| {
                let (a, b) = (hole[t], hole[(t + 1) % m]);
                let u = smallest_common_out(d, a, b).expect("adjacent vertices share an out-neighbour");
                [(a, u), (b, u)]
            })
            .collect();
        if is_good_subdigraph(d, &arcs) {
            return Ok(GoodSubdigraphReport::from_arcs(arcs));
        }
        return Err(Error::EquivalenceFailed("hole skeleton is not a good subdigraph".into()));
    }
    find_good_subdigraph_exhaustive(d)
}

fn smallest_common_out(d: &Digraph, a: usize, b: usize) -> Option<usize> {
    d.out_neighbors(a).iter().copied().find(|w| d.out_neighbors(b).binary_search(w).is_ok())
}

/// Exhaustive search over arc subsets. Each candidate is grown from its
/// smallest arc: while some vertex has exactly one in- or out-arc, the
/// missing partner arc must come from that vertex's remaining arcs.
/// `P(2,2)` and triangle patterns only appear as arcs are added, so either
/// one ends a branch.
pub fn find_good_subdigraph_exhaustive(d: &Digraph) -> Result<GoodSubdigraphReport> {
    let n = d.vertex_count();
    if d.arc_count() == 0 {
        return Ok(GoodSubdigraphReport::not_found());
    }
    if n > GOOD_SEARCH_VERTEX_LIMIT {
        return Err(Error::TooLarge { guard: "good-subdigraph search", actual: n, limit: GOOD_SEARCH_VERTEX_LIMIT });
    }
    let all: Vec<(usize, usize)> = d.arcs().collect();
    for (start, &first) in all.iter().enumerate() {
        let mut grow = Grow { n, allowed: &all[start..], chosen: vec![first] };
        if let Some(arcs) = grow.run() {
            let report = GoodSubdigraphReport::from_arcs(arcs);
            debug_assert!(is_good_subdigraph(d, &report.arcs));
            return Ok(report);
        }
    }
    Ok(GoodSubdigraphReport::not_found())
}

struct Grow<'a> {
    n: usize,
    /// Arcs not smaller than the starting arc.
    allowed: &'a [(usize, usize)],
    chosen: Vec<(usize, usize)>,
}

impl Grow<'_> {
    fn run(&mut self) -> Option<Vec<(usize, usize)>> {
        let sub = Digraph::from_arcs(self.n, self.chosen.iter().copied()).expect("chosen arcs are distinct");
        if !is_irredundant(&sub) || induces_triangle(&sub) {
            return None;
        }
        let deficit = (0..self.n).find_map(|v| {
            if sub.outdegree(v) == 1 {
                Some((v, true))
            } else if sub.indegree(v) == 1 {
                Some((v, false))
            } else {
                None
            }
        });
        let Some((v, outward)) = deficit else {
            return Some(self.chosen.clone());
        };
        let options: Vec<(usize, usize)> = self
            .allowed
            .iter()
            .copied()
            .filter(|&(a, b)| if outward { a == v } else { b == v })
            .filter(|&(a, b)| !sub.has_arc(a, b) && sub.outdegree(a) < 2 && sub.indegree(b) < 2)
            .collect();
        for arc in options {
            self.chosen.push(arc);
            if let Some(found) = self.run() {
                return Some(found);
            }
            self.chosen.pop();
        }
        None
    }
}
