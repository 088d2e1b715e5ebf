//! Balanced incomplete block designs and their link to extremal cliques.
//!
//! A `(b,v,r,k,1)`-design with `v = kr - r + 1` gives a bipartite `<k,r>`
//! digraph (variety `x` points at every block containing it) whose
//! competition graph has the varieties as a clique of the largest possible
//! size. Conversely such a clique forces a design.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{competition_graph, is_ij_digraph, DegreeBounds, Digraph};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Bibd {
    pub b: usize,
    pub v: usize,
    pub r: usize,
    pub k: usize,
    pub lambda: usize,
    pub blocks: Vec<Vec<usize>>,
}

impl Bibd {
    /// Builds a design from its blocks, reading the parameters off the
    /// first block and the first variety. Blocks are sorted.
    fn from_blocks(v: usize, lambda: usize, blocks: Vec<Vec<usize>>) -> Self {
        let k = blocks.first().map_or(0, Vec::len);
        let r = blocks.iter().filter(|blk| blk.contains(&0)).count();
        let mut design = Self { b: blocks.len(), v, r, k, lambda, blocks };
        design.canonicalize();
        design
    }

    /// Sorts each block, then the list of blocks.
    pub fn canonicalize(&mut self) {
        for blk in &mut self.blocks {
            blk.sort_unstable();
        }
        self.blocks.sort();
    }

    pub fn parameters(&self) -> (usize, usize, usize, usize, usize) {
        (self.b, self.v, self.r, self.k, self.lambda)
    }
}

/// The first invariant a block list breaks.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum BibdViolation {
    VarietyOutOfRange { block: usize, variety: usize },
    RepeatedVariety { block: usize, variety: usize },
    BlockSize { block: usize, size: usize },
    /// `k < v` fails.
    NotIncomplete,
    Replication { variety: usize, count: usize },
    PairCount { x: usize, y: usize, count: usize },
    BlockCount { count: usize },
    /// `bk = vr` fails.
    Counting,
}

impl fmt::Display for BibdViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::VarietyOutOfRange { block, variety } => write!(f, "block {block} names variety {variety}, out of range"),
            Self::RepeatedVariety { block, variety } => write!(f, "block {block} repeats variety {variety}"),
            Self::BlockSize { block, size } => write!(f, "block {block} has {size} varieties"),
            Self::NotIncomplete => f.write_str("block size is not below the variety count"),
            Self::Replication { variety, count } => write!(f, "variety {variety} lies in {count} blocks"),
            Self::PairCount { x, y, count } => write!(f, "pair {{{x},{y}}} lies in {count} blocks"),
            Self::BlockCount { count } => write!(f, "{count} blocks listed"),
            Self::Counting => f.write_str("bk = vr fails"),
        }
    }
}

pub fn verify_bibd(d: &Bibd) -> Result<(), BibdViolation> {
    for (block, blk) in d.blocks.iter().enumerate() {
        if let Some(&variety) = blk.iter().find(|&&x| x >= d.v) {
            return Err(BibdViolation::VarietyOutOfRange { block, variety });
        }
    }
    for (block, blk) in d.blocks.iter().enumerate() {
        let mut sorted = blk.clone();
        sorted.sort_unstable();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(BibdViolation::RepeatedVariety { block, variety: w[0] });
        }
    }
    if let Some((block, blk)) = d.blocks.iter().enumerate().find(|(_, blk)| blk.len() != d.k) {
        return Err(BibdViolation::BlockSize { block, size: blk.len() });
    }
    if d.k >= d.v {
        return Err(BibdViolation::NotIncomplete);
    }
    let mut count = vec![0usize; d.v];
    let mut pairs = vec![0usize; d.v * d.v];
    for blk in &d.blocks {
        for (a, &x) in blk.iter().enumerate() {
            count[x] += 1;
            for &y in &blk[a + 1..] {
                pairs[x.min(y) * d.v + x.max(y)] += 1;
            }
        }
    }
    if let Some((variety, &c)) = count.iter().enumerate().find(|(_, &c)| c != d.r) {
        return Err(BibdViolation::Replication { variety, count: c });
    }
    for x in 0..d.v {
        for y in x + 1..d.v {
            if pairs[x * d.v + y] != d.lambda {
                return Err(BibdViolation::PairCount { x, y, count: pairs[x * d.v + y] });
            }
        }
    }
    if d.blocks.len() != d.b {
        return Err(BibdViolation::BlockCount { count: d.blocks.len() });
    }
    if d.b * d.k != d.v * d.r {
        return Err(BibdViolation::Counting);
    }
    Ok(())
}

/// All 2-subsets of `{0..j}`: a `(j(j+1)/2, j+1, j, 2, 1)` design.
pub fn pair_design(j: usize) -> Result<Bibd> {
    if j == 0 {
        return Err(Error::Precondition("pair design needs j >= 1".into()));
    }
    let blocks = (0..=j).flat_map(|x| (x + 1..=j).map(move |y| vec![x, y])).collect();
    Ok(Bibd::from_blocks(j + 1, 1, blocks))
}

/// Largest order for which `steiner_triple` answers.
pub const STEINER_LIMIT: usize = 15;

/// A Steiner triple system on `n` points, or `None` when `n` is not 3 or
/// 1 or 3 mod 6.
pub fn steiner_triple(n: usize) -> Result<Option<Bibd>> {
    if n < 3 {
        return Err(Error::Precondition(format!("Steiner triple systems need n >= 3, got {n}")));
    }
    if n > STEINER_LIMIT {
        return Err(Error::TooLarge { guard: "Steiner triple systems", actual: n, limit: STEINER_LIMIT });
    }
    let cyclic = |n: usize, bases: &[[usize; 3]]| -> Vec<Vec<usize>> {
        (0..n).flat_map(|s| bases.iter().map(move |base| base.iter().map(|&x| (x + s) % n).collect())).collect()
    };
    let blocks: Vec<Vec<usize>> = match n {
        3 => vec![vec![0, 1, 2]],
        7 => cyclic(7, &[[0, 1, 3]]),
        9 => affine_plane_3(),
        13 => cyclic(13, &[[0, 1, 4], [0, 2, 7]]),
        // nonzero vectors of GF(2)^4, lines {a, b, a+b}
        15 => (1..16usize)
            .flat_map(|a| (a + 1..16).filter(move |&b| (a ^ b) > b).map(move |b| vec![a - 1, b - 1, (a ^ b) - 1]))
            .collect(),
        _ => return Ok(None),
    };
    Ok(Some(Bibd::from_blocks(n, 1, blocks)))
}

/// Lines of the affine plane over `Z_3`, with point `(x, y)` as `3x + y`.
fn affine_plane_3() -> Vec<Vec<usize>> {
    let directions = [(0, 1), (1, 0), (1, 1), (1, 2)];
    let mut lines = Vec::new();
    for (dx, dy) in directions {
        let mut seen = Vec::new();
        for start in 0..9usize {
            let (x, y) = (start / 3, start % 3);
            let mut line: Vec<usize> = (0..3).map(|t| 3 * ((x + t * dx) % 3) + (y + t * dy) % 3).collect();
            line.sort_unstable();
            if !seen.contains(&line) {
                seen.push(line);
            }
        }
        lines.extend(seen);
    }
    lines
}

/// `ij - j + 1`, the largest clique in a `<i,j>` competition graph.
pub fn clique_bound(b: DegreeBounds) -> usize {
    b.i() * b.j() - b.j() + 1
}

/// Fisher's inequality `b >= v`.
pub fn fisher_check(d: &Bibd) -> bool {
    d.b >= d.v
}

/// Varieties become vertices `0..v`, blocks become `v..v+b`, and variety
/// `x` points at every block containing it. The result is a `<k,r>`
/// digraph.
pub fn bibd_to_digraph(d: &Bibd) -> Result<Digraph> {
    if d.lambda != 1 {
        return Err(Error::Precondition(format!("design has lambda = {}, need 1", d.lambda)));
    }
    if d.blocks.len() != d.b {
        return Err(Error::Precondition(format!("{} blocks listed, b = {}", d.blocks.len(), d.b)));
    }
    if let Some(blk) = d.blocks.iter().find(|blk| blk.len() != d.k) {
        return Err(Error::Precondition(format!("block {blk:?} does not have {} varieties", d.k)));
    }
    let arcs = d.blocks.iter().enumerate().flat_map(|(l, blk)| blk.iter().map(move |&x| (x, d.v + l)));
    Digraph::from_arcs(d.v + d.b, arcs)
}

/// Reads a design off a clique of size `ij - j + 1` in `C(d)`. Every pair
/// of clique vertices must share exactly one out-neighbour, every such
/// out-neighbour must have exactly `i` in-neighbours, all inside the clique,
/// and every clique vertex must have outdegree `j`. The blocks are the
/// in-neighbourhoods, with varieties numbered in sorted clique order.
pub fn extract_bibd(d: &Digraph, b: DegreeBounds, clique: &[usize]) -> Result<Bibd> {
    let (i, j) = (b.i(), b.j());
    if !is_ij_digraph(d, b) {
        return Err(Error::Precondition(format!("digraph is not a {b} digraph")));
    }
    let mut k: Vec<usize> = clique.to_vec();
    k.sort_unstable();
    k.dedup();
    if let Some(&vertex) = k.iter().find(|&&v| v >= d.vertex_count()) {
        return Err(Error::VertexOutOfRange { vertex, n: d.vertex_count() });
    }
    if k.len() != clique_bound(b) {
        return Err(Error::Precondition(format!("clique has {} vertices, need {}", k.len(), clique_bound(b))));
    }
    if !competition_graph(d).is_clique(&k) {
        return Err(Error::Precondition("vertex set is not a clique of the competition graph".into()));
    }

    for (a, &u) in k.iter().enumerate() {
        for &v in &k[a + 1..] {
            let shared = d.common_out_count(u, v);
            if shared != 1 {
                return Err(Error::NotExtremal(format!("vertices {u} and {v} share {shared} out-neighbours")));
            }
        }
    }
    let mut sinks: Vec<usize> = k.iter().flat_map(|&u| d.out_neighbors(u).iter().copied()).collect();
    sinks.sort_unstable();
    sinks.dedup();
    for &w in &sinks {
        if let Some(&x) = d.in_neighbors(w).iter().find(|x| k.binary_search(x).is_err()) {
            return Err(Error::NotExtremal(format!("vertex {w} has in-neighbour {x} outside the clique")));
        }
        if d.indegree(w) != i {
            return Err(Error::NotExtremal(format!("vertex {w} has indegree {}, need {i}", d.indegree(w))));
        }
    }
    if let Some(&u) = k.iter().find(|&&u| d.outdegree(u) != j) {
        return Err(Error::NotExtremal(format!("vertex {u} has outdegree {}, need {j}", d.outdegree(u))));
    }

    let blocks: Vec<Vec<usize>> = sinks
        .iter()
        .map(|&w| d.in_neighbors(w).iter().map(|x| k.binary_search(x).unwrap()).collect())
        .collect();
    let mut design = Bibd { b: blocks.len(), v: k.len(), r: j, k: i, lambda: 1, blocks };
    design.canonicalize();
    match verify_bibd(&design) {
        // one block holding every variety: the degenerate case j = 1
        Ok(()) | Err(BibdViolation::NotIncomplete) => Ok(design),
        Err(violation) => Err(Error::NotExtremal(format!("blocks do not form a design: {violation}"))),
    }
}
