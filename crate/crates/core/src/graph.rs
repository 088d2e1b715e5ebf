//! Simple graphs, loopless digraphs and the competition-graph map.
//!
//! Vertices are the dense integers `0..n`. Both types are immutable once
//! built; adjacency lists are kept sorted so that iteration order, and with
//! it every search built on top, is deterministic.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A simple undirected graph on the vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "crate::io::GraphRepr", into = "crate::io::GraphRepr")]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Self {
            adj: vec![Vec::new(); n],
        }
    }

    /// Builds a graph from an edge list, rejecting loops, out-of-range
    /// endpoints and repeated edges (in either orientation).
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            check_vertex(u, n)?;
            check_vertex(v, n)?;
            if u == v {
                return Err(Error::Loop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for (u, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::DuplicateEdge(u.min(w[0]), u.max(w[0])));
            }
        }
        Ok(Self { adj })
    }

    /// Builds a graph from raw adjacency lists that may contain repeats.
    /// Callers guarantee symmetry and the absence of loops.
    pub(crate) fn from_adjacency_unchecked(mut adj: Vec<Vec<usize>>) -> Self {
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        debug_assert!(adj
            .iter()
            .enumerate()
            .all(|(u, l)| !l.contains(&u) && l.iter().all(|&v| adj[v].binary_search(&u).is_ok())));
        Self { adj }
    }

    pub fn complete(n: usize) -> Self {
        Self::from_adjacency_unchecked(
            (0..n).map(|u| (0..n).filter(|&v| v != u).collect()).collect(),
        )
    }

    /// The cycle `0-1-...-(n-1)-0`. Requires `n >= 3`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least three vertices");
        Self::from_edges(n, (0..n).map(|t| (t, (t + 1) % n))).expect("cycle edges are simple")
    }

    /// The path `0-1-...-(n-1)`.
    pub fn path(n: usize) -> Self {
        Self::from_edges(n, (1..n).map(|t| (t - 1, t))).expect("path edges are simple")
    }

    /// The star `K_{1,t}` with centre `0` and leaves `1..=t`.
    pub fn star(t: usize) -> Self {
        Self::from_edges(t + 1, (1..=t).map(|leaf| (0, leaf))).expect("star edges are simple")
    }

    /// Disjoint union; the vertices of `other` are shifted past those of `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.vertex_count();
        let mut adj = self.adj.clone();
        adj.extend(
            other
                .adj
                .iter()
                .map(|list| list.iter().map(|&v| v + shift).collect::<Vec<_>>()),
        );
        Self { adj }
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.adj.len() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, list)| {
            list.iter().copied().filter(move |&v| u < v).map(move |v| (u, v))
        })
    }

    pub fn is_edgeless(&self) -> bool {
        self.adj.iter().all(Vec::is_empty)
    }

    pub fn is_complete(&self) -> bool {
        let n = self.vertex_count();
        self.adj.iter().all(|list| list.len() + 1 == n)
    }

    /// `true` when every pair of distinct vertices in `set` is adjacent.
    pub fn is_clique(&self, set: &[usize]) -> bool {
        set.iter().enumerate().all(|(a, &u)| {
            u < self.vertex_count() && set[a + 1..].iter().all(|&v| u != v && self.has_edge(u, v))
        })
    }

    pub fn isolated_vertices(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.vertex_count()).filter(|&v| self.adj[v].is_empty())
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut stack = vec![start];
            while let Some(u) = stack.pop() {
                for &v in &self.adj[u] {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                        stack.push(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// The subgraph induced by `vertices`, relabelled `0..vertices.len()` in
    /// the given order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.vertex_count()];
        for (t, &v) in vertices.iter().enumerate() {
            index[v] = t;
        }
        let adj = vertices
            .iter()
            .map(|&v| {
                self.adj[v]
                    .iter()
                    .filter(|&&w| index[w] != usize::MAX)
                    .map(|&w| index[w])
                    .collect()
            })
            .collect();
        Self::from_adjacency_unchecked(adj)
    }
}

/// A loopless digraph without parallel arcs on the vertices `0..n`.
/// Opposite arcs `(u, v)` and `(v, u)` may coexist.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "crate::io::DigraphRepr", into = "crate::io::DigraphRepr")]
pub struct Digraph {
    out: Vec<Vec<usize>>,
    inc: Vec<Vec<usize>>,
}

impl Digraph {
    pub fn empty(n: usize) -> Self {
        Self {
            out: vec![Vec::new(); n],
            inc: vec![Vec::new(); n],
        }
    }

    /// Builds a digraph from an arc list, rejecting loops, out-of-range
    /// endpoints and repeated arcs.
    pub fn from_arcs<I>(n: usize, arcs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut out = vec![Vec::new(); n];
        let mut inc = vec![Vec::new(); n];
        for (u, v) in arcs {
            check_vertex(u, n)?;
            check_vertex(v, n)?;
            if u == v {
                return Err(Error::Loop(u));
            }
            out[u].push(v);
            inc[v].push(u);
        }
        for (u, list) in out.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::DuplicateArc(u, w[0]));
            }
        }
        for list in &mut inc {
            list.sort_unstable();
        }
        Ok(Self { out, inc })
    }

    pub fn vertex_count(&self) -> usize {
        self.out.len()
    }

    pub fn arc_count(&self) -> usize {
        self.out.iter().map(Vec::len).sum()
    }

    pub fn out_neighbors(&self, v: usize) -> &[usize] {
        &self.out[v]
    }

    pub fn in_neighbors(&self, v: usize) -> &[usize] {
        &self.inc[v]
    }

    pub fn outdegree(&self, v: usize) -> usize {
        self.out[v].len()
    }

    pub fn indegree(&self, v: usize) -> usize {
        self.inc[v].len()
    }

    pub fn max_outdegree(&self) -> usize {
        self.out.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn max_indegree(&self) -> usize {
        self.inc.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        u < self.out.len() && self.out[u].binary_search(&v).is_ok()
    }

    /// Arcs in lexicographic order.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.out
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().map(move |&v| (u, v)))
    }

    /// Number of common out-neighbours of `u` and `v`.
    pub fn common_out_count(&self, u: usize, v: usize) -> usize {
        sorted_intersection_len(&self.out[u], &self.out[v])
    }
}

/// The pair `<i, j>`: indegree at most `i`, outdegree at most `j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "(usize, usize)", into = "(usize, usize)")]
pub struct DegreeBounds {
    i: usize,
    j: usize,
}

impl DegreeBounds {
    pub fn new(i: usize, j: usize) -> Result<Self> {
        if i == 0 || j == 0 {
            return Err(Error::InvalidBounds { i, j });
        }
        Ok(Self { i, j })
    }

    /// Maximum indegree.
    pub fn i(self) -> usize {
        self.i
    }

    /// Maximum outdegree.
    pub fn j(self) -> usize {
        self.j
    }
}

impl TryFrom<(usize, usize)> for DegreeBounds {
    type Error = Error;

    fn try_from((i, j): (usize, usize)) -> Result<Self> {
        Self::new(i, j)
    }
}

impl From<DegreeBounds> for (usize, usize) {
    fn from(b: DegreeBounds) -> Self {
        (b.i, b.j)
    }
}

impl fmt::Display for DegreeBounds {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{},{}>", self.i, self.j)
    }
}

/// `C(D)`: `u` and `v` are adjacent iff they share an out-neighbour.
pub fn competition_graph(d: &Digraph) -> Graph {
    let mut adj = vec![Vec::new(); d.vertex_count()];
    for w in 0..d.vertex_count() {
        let preds = d.in_neighbors(w);
        for (a, &u) in preds.iter().enumerate() {
            for &v in &preds[a + 1..] {
                adj[u].push(v);
                adj[v].push(u);
            }
        }
    }
    Graph::from_adjacency_unchecked(adj)
}

/// Whether every vertex has indegree at most `i` and outdegree at most `j`.
pub fn is_ij_digraph(d: &Digraph, b: DegreeBounds) -> bool {
    d.max_indegree() <= b.i() && d.max_outdegree() <= b.j()
}

/// The three cheap necessary conditions for membership in `G<i,j>`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum NecessaryCondition {
    /// `|E| <= (i-1) i / 2 * |V|`.
    EdgeCount,
    /// No induced `K_{1,j+1}`.
    StarFree,
    /// `Δ <= j (i-1)`.
    MaxDegree,
}

impl NecessaryCondition {
    pub const ALL: [NecessaryCondition; 3] = [Self::EdgeCount, Self::StarFree, Self::MaxDegree];

    pub fn name(self) -> &'static str {
        match self {
            Self::EdgeCount => "edge-count",
            Self::StarFree => "K1,j+1-free",
            Self::MaxDegree => "max-degree",
        }
    }
}

impl fmt::Display for NecessaryCondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Returns the conditions that fail. An empty list does not imply membership.
pub fn necessary_conditions(g: &Graph, b: DegreeBounds) -> Vec<NecessaryCondition> {
    let (i, j) = (b.i(), b.j());
    let mut failed = Vec::new();
    if 2 * g.edge_count() > (i - 1) * i * g.vertex_count() {
        failed.push(NecessaryCondition::EdgeCount);
    }
    if !is_k1t_free(g, j + 1) {
        failed.push(NecessaryCondition::StarFree);
    }
    if g.max_degree() > j * (i - 1) {
        failed.push(NecessaryCondition::MaxDegree);
    }
    failed
}

/// Whether `g` has no induced star `K_{1,t}`, i.e. no vertex has `t`
/// pairwise non-adjacent neighbours. With `t = 0` the star is a single
/// vertex, so only the empty graph qualifies.
pub fn is_k1t_free(g: &Graph, t: usize) -> bool {
    if t == 0 {
        return g.vertex_count() == 0;
    }
    (0..g.vertex_count()).all(|v| {
        let nbrs = g.neighbors(v);
        nbrs.len() < t || !has_independent_set(g, nbrs, t, &mut Vec::with_capacity(t))
    })
}

fn has_independent_set(g: &Graph, candidates: &[usize], t: usize, chosen: &mut Vec<usize>) -> bool {
    if chosen.len() == t {
        return true;
    }
    for (a, &u) in candidates.iter().enumerate() {
        if candidates.len() - a < t - chosen.len() {
            break;
        }
        if chosen.iter().all(|&w| !g.has_edge(u, w)) {
            chosen.push(u);
            if has_independent_set(g, &candidates[a + 1..], t, chosen) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

/// Exact maximum degree and clique number.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphStats {
    pub max_degree: usize,
    pub clique_number: usize,
}

/// Clique search works on 64-bit vertex masks.
pub const CLIQUE_VERTEX_LIMIT: usize = 64;

pub fn graph_stats(g: &Graph) -> Result<GraphStats> {
    Ok(GraphStats {
        max_degree: g.max_degree(),
        clique_number: max_clique(g)?.len(),
    })
}

/// A maximum clique, found by branch and bound with a greedy-colouring
/// bound. Ties are broken towards the clique discovered first.
pub fn max_clique(g: &Graph) -> Result<Vec<usize>> {
    let n = g.vertex_count();
    if n > CLIQUE_VERTEX_LIMIT {
        return Err(Error::TooLarge {
            guard: "clique number",
            actual: n,
            limit: CLIQUE_VERTEX_LIMIT,
        });
    }
    let masks: Vec<u64> = (0..n)
        .map(|u| g.neighbors(u).iter().fold(0u64, |m, &v| m | 1 << v))
        .collect();
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut best = Vec::new();
    let mut current = Vec::new();
    expand_clique(&masks, all, &mut current, &mut best);
    best.sort_unstable();
    Ok(best)
}

fn expand_clique(masks: &[u64], candidates: u64, current: &mut Vec<usize>, best: &mut Vec<usize>) {
    let (order, colours) = colour_sort(masks, candidates);
    let mut remaining = candidates;
    for idx in (0..order.len()).rev() {
        if current.len() + colours[idx] <= best.len() {
            return;
        }
        let v = order[idx];
        current.push(v);
        let next = remaining & masks[v];
        if next == 0 {
            if current.len() > best.len() {
                *best = current.clone();
            }
        } else {
            expand_clique(masks, next, current, best);
        }
        current.pop();
        remaining &= !(1u64 << v);
    }
}

/// Greedy sequential colouring; returns vertices in non-decreasing colour
/// order together with the colour count used up to each position.
fn colour_sort(masks: &[u64], candidates: u64) -> (Vec<usize>, Vec<usize>) {
    let mut order = Vec::with_capacity(candidates.count_ones() as usize);
    let mut colours = Vec::with_capacity(order.capacity());
    let mut uncoloured = candidates;
    let mut colour = 0;
    while uncoloured != 0 {
        colour += 1;
        let mut available = uncoloured;
        while available != 0 {
            let v = available.trailing_zeros() as usize;
            available &= !(1u64 << v) & !masks[v];
            uncoloured &= !(1u64 << v);
            order.push(v);
            colours.push(colour);
        }
    }
    (order, colours)
}

pub(crate) fn sorted_intersection_len(a: &[usize], b: &[usize]) -> usize {
    let (mut x, mut y, mut count) = (0, 0, 0);
    while x < a.len() && y < b.len() {
        match a[x].cmp(&b[y]) {
            std::cmp::Ordering::Less => x += 1,
            std::cmp::Ordering::Greater => y += 1,
            std::cmp::Ordering::Equal => {
                count += 1;
                x += 1;
                y += 1;
            }
        }
    }
    count
}

fn check_vertex(v: usize, n: usize) -> Result<()> {
    if v >= n {
        Err(Error::VertexOutOfRange { vertex: v, n })
    } else {
        Ok(())
    }
}
