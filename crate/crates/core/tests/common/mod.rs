//! Brute-force oracles shared by the integration tests. Everything here is
//! written from the definitions alone and never calls the algorithms it is
//! used to check, apart from constructors.

#![allow(dead_code)]

use std::collections::HashSet;

use ijcomp_core::chordality::GoodSubdigraphReport;
use ijcomp_core::{Digraph, Graph};
use rand::Rng;

/// Unordered pairs `u < v` of `0..n` in lexicographic order; bit `t` of a
/// graph mask refers to `pairs(n)[t]`.
pub fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect()
}

/// Ordered pairs `u != v`; bit `t` of a digraph mask refers to `arcs(n)[t]`.
pub fn arcs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v))).collect()
}

pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let edges = pairs(n).into_iter().enumerate().filter(|(t, _)| mask >> t & 1 == 1).map(|(_, e)| e);
    Graph::from_edges(n, edges).unwrap()
}

pub fn digraph_from_mask(n: usize, mask: u64) -> Digraph {
    let a = arcs(n).into_iter().enumerate().filter(|(t, _)| mask >> t & 1 == 1).map(|(_, e)| e);
    Digraph::from_arcs(n, a).unwrap()
}

pub fn graph_mask(g: &Graph) -> u64 {
    pairs(g.vertex_count())
        .iter()
        .enumerate()
        .filter(|(_, &(u, v))| g.has_edge(u, v))
        .fold(0, |m, (t, _)| m | 1 << t)
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, left: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left.is_empty() {
            out.push(prefix.clone());
            return;
        }
        for a in 0..left.len() {
            let x = left.remove(a);
            prefix.push(x);
            go(prefix, left, out);
            prefix.pop();
            left.insert(a, x);
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut (0..n).collect(), &mut out);
    out
}

/// One representative (the smallest mask) of every isomorphism class of
/// graphs on `n` vertices.
pub fn nonisomorphic_graphs(n: usize) -> Vec<Graph> {
    let pr = pairs(n);
    let index = |u: usize, v: usize| {
        let (a, b) = if u < v { (u, v) } else { (v, u) };
        pr.iter().position(|&p| p == (a, b)).unwrap()
    };
    let perm_maps: Vec<Vec<usize>> =
        permutations(n).iter().map(|p| pr.iter().map(|&(u, v)| index(p[u], p[v])).collect()).collect();
    let mut seen = HashSet::new();
    let mut reps = Vec::new();
    for mask in 0u64..1 << pr.len() {
        let canon = perm_maps
            .iter()
            .map(|map| map.iter().enumerate().filter(|(t, _)| mask >> t & 1 == 1).fold(0u64, |m, (_, &s)| m | 1 << s))
            .min()
            .unwrap();
        if seen.insert(canon) {
            reps.push(graph_from_mask(n, canon));
        }
    }
    reps
}

/// For every digraph on `n <= 5` vertices, records its competition graph
/// (as a pair mask) under its largest indegree and outdegree. `reach(i, j)`
/// then answers which labelled graphs are `<i,j>` competition graphs on the
/// same vertex set.
pub struct DigraphOracle {
    n: usize,
    /// `by_degrees[a][b]` holds masks reached with max indegree `a`, max
    /// outdegree `b`.
    by_degrees: Vec<Vec<HashSet<u64>>>,
}

impl DigraphOracle {
    pub fn new(n: usize) -> Self {
        assert!(n <= 5, "2^(n(n-1)) digraphs");
        let arc_list = arcs(n);
        let pr = pairs(n);
        let mut by_degrees = vec![vec![HashSet::new(); n]; n];
        for mask in 0u64..1 << arc_list.len() {
            let mut out = [0u32; 8];
            let mut indeg = [0usize; 8];
            let mut outdeg = [0usize; 8];
            for (t, &(u, v)) in arc_list.iter().enumerate() {
                if mask >> t & 1 == 1 {
                    out[u] |= 1 << v;
                    indeg[v] += 1;
                    outdeg[u] += 1;
                }
            }
            let cg = pr
                .iter()
                .enumerate()
                .filter(|(_, &(u, v))| out[u] & out[v] != 0)
                .fold(0u64, |m, (t, _)| m | 1 << t);
            let a = indeg[..n].iter().copied().max().unwrap_or(0);
            let b = outdeg[..n].iter().copied().max().unwrap_or(0);
            by_degrees[a][b].insert(cg);
        }
        Self { n, by_degrees }
    }

    pub fn reach(&self, i: usize, j: usize) -> HashSet<u64> {
        let mut all = HashSet::new();
        for a in 0..self.n.min(i + 1) {
            for b in 0..self.n.min(j + 1) {
                all.extend(self.by_degrees[a][b].iter().copied());
            }
        }
        all
    }
}

/// All cliques of `g` with between 2 and `max` vertices, as sorted lists.
pub fn small_cliques(g: &Graph, max: usize) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    assert!(n <= 16);
    (0u32..1 << n)
        .map(|m| (0..n).filter(|v| m >> v & 1 == 1).collect::<Vec<_>>())
        .filter(|s| s.len() >= 2 && s.len() <= max && s.iter().all(|&u| s.iter().all(|&v| u == v || g.has_edge(u, v))))
        .collect()
}

/// Whether some family of at most `|V|` cliques, each of at most `i`
/// vertices, covers every edge while using every vertex at most `j` times.
/// Branches on the smallest uncovered edge over every clique containing it.
pub fn cover_exists(g: &Graph, i: usize, j: usize) -> bool {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    if edges.is_empty() {
        return true;
    }
    let cliques = small_cliques(g, i);
    let mut used = vec![0usize; g.vertex_count()];
    let mut chosen: Vec<&Vec<usize>> = Vec::new();

    fn go<'a>(
        edges: &[(usize, usize)],
        cliques: &'a [Vec<usize>],
        used: &mut [usize],
        chosen: &mut Vec<&'a Vec<usize>>,
        n: usize,
        j: usize,
    ) -> bool {
        let open = edges.iter().find(|&&(u, v)| !chosen.iter().any(|c| c.contains(&u) && c.contains(&v)));
        let Some(&(u, v)) = open else { return true };
        if chosen.len() == n {
            return false;
        }
        for c in cliques.iter().filter(|c| c.contains(&u) && c.contains(&v)) {
            if c.iter().any(|&x| used[x] == j) {
                continue;
            }
            c.iter().for_each(|&x| used[x] += 1);
            chosen.push(c);
            if go(edges, cliques, used, chosen, n, j) {
                return true;
            }
            chosen.pop();
            c.iter().for_each(|&x| used[x] -= 1);
        }
        false
    }
    go(&edges, &cliques, &mut used, &mut chosen, g.vertex_count(), j)
}

/// Whether distinct `v_t` with `v_t` not in `sets[t]` exist, by trying every
/// injective assignment.
pub fn sdr_exists(n: usize, sets: &[Vec<usize>]) -> bool {
    fn go(t: usize, n: usize, sets: &[Vec<usize>], taken: &mut Vec<bool>) -> bool {
        if t == sets.len() {
            return true;
        }
        for v in 0..n {
            if !taken[v] && !sets[t].contains(&v) {
                taken[v] = true;
                if go(t + 1, n, sets, taken) {
                    return true;
                }
                taken[v] = false;
            }
        }
        false
    }
    go(0, n, sets, &mut vec![false; n])
}

/// Vertex sets of all induced cycles with at least four vertices.
pub fn induced_holes(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    assert!(n <= 16);
    let mut holes = Vec::new();
    for m in 0u32..1 << n {
        if m.count_ones() < 4 {
            continue;
        }
        let s: Vec<usize> = (0..n).filter(|v| m >> v & 1 == 1).collect();
        let h = g.induced(&s);
        if (0..s.len()).all(|v| h.degree(v) == 2) && h.components().len() == 1 {
            holes.push(s);
        }
    }
    holes
}

/// Largest clique by trying every vertex subset.
pub fn clique_number(g: &Graph) -> usize {
    let n = g.vertex_count();
    assert!(n <= 20);
    (0u32..1 << n)
        .filter(|&m| {
            let s: Vec<usize> = (0..n).filter(|v| m >> v & 1 == 1).collect();
            s.iter().all(|&u| s.iter().all(|&v| u == v || g.has_edge(u, v)))
        })
        .map(u32::count_ones)
        .max()
        .unwrap_or(0) as usize
}

/// Competition graph computed pair by pair from the arc relation.
pub fn competition_oracle(d: &Digraph) -> Graph {
    let n = d.vertex_count();
    let edges = pairs(n).into_iter().filter(|&(u, v)| (0..n).any(|w| d.has_arc(u, w) && d.has_arc(v, w)));
    Graph::from_edges(n, edges).unwrap()
}

pub fn has_triangle(g: &Graph) -> bool {
    let n = g.vertex_count();
    (0..n).any(|a| (a + 1..n).any(|b| g.has_edge(a, b) && (b + 1..n).any(|c| g.has_edge(a, c) && g.has_edge(b, c))))
}

/// A random loopless digraph on `n` vertices with indegrees at most `i` and
/// outdegrees at most `j`: each ordered pair is offered once, in random
/// order, and kept with probability `density` when both degrees allow it.
pub fn random_ij_digraph(rng: &mut impl Rng, n: usize, i: usize, j: usize, density: f64) -> Digraph {
    let mut candidates = arcs(n);
    for a in (1..candidates.len()).rev() {
        candidates.swap(a, rng.gen_range(0..=a));
    }
    let mut indeg = vec![0; n];
    let mut outdeg = vec![0; n];
    let mut kept = Vec::new();
    for (u, v) in candidates {
        if outdeg[u] < j && indeg[v] < i && rng.gen_bool(density) {
            outdeg[u] += 1;
            indeg[v] += 1;
            kept.push((u, v));
        }
    }
    Digraph::from_arcs(n, kept).unwrap()
}

pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let edges: Vec<_> = pairs(n).into_iter().filter(|_| rng.gen_bool(p)).collect();
    Graph::from_edges(n, edges).unwrap()
}

/// The three degree-count conditions every `<i,j>` competition graph meets,
/// written out directly: `|E| <= C(i,2)|V|`, no induced `K_{1,j+1}`, and
/// `deg v <= (i-1)j`.
pub fn passes_counting_conditions(g: &Graph, i: usize, j: usize) -> bool {
    let n = g.vertex_count();
    let edges_ok = 2 * g.edge_count() <= i * (i - 1) * n;
    let degree_ok = (0..n).all(|v| g.degree(v) <= (i - 1) * j);
    edges_ok && degree_ok && star_free(g, j + 1)
}

/// No vertex has `t` pairwise non-adjacent neighbours.
pub fn star_free(g: &Graph, t: usize) -> bool {
    fn independent(g: &Graph, pool: &[usize], need: usize, picked: &mut Vec<usize>) -> bool {
        if need == 0 {
            return true;
        }
        for (a, &x) in pool.iter().enumerate() {
            if picked.iter().all(|&y| !g.has_edge(x, y)) {
                picked.push(x);
                if independent(g, &pool[a + 1..], need - 1, picked) {
                    return true;
                }
                picked.pop();
            }
        }
        false
    }
    (0..g.vertex_count()).all(|v| !independent(g, g.neighbors(v), t, &mut Vec::new()))
}

/// Checks a positive report from first principles: the arcs exist, every
/// in- and outdegree is 0 or 2, no two vertices share two out-neighbours,
/// and the competition graph of the subdigraph has no triangle.
pub fn verify_good(host: &Digraph, report: &GoodSubdigraphReport) -> Result<(), String> {
    if report.arcs.is_empty() {
        return Err("no arcs".into());
    }
    let n = host.vertex_count();
    if let Some(a) = report.arcs.iter().find(|&&(u, v)| !host.has_arc(u, v)) {
        return Err(format!("arc {a:?} missing from host"));
    }
    let sub = Digraph::from_arcs(n, report.arcs.iter().copied()).map_err(|e| e.to_string())?;
    for v in 0..n {
        if ![0, 2].contains(&sub.indegree(v)) || ![0, 2].contains(&sub.outdegree(v)) {
            return Err(format!("vertex {v} has degrees ({}, {})", sub.indegree(v), sub.outdegree(v)));
        }
    }
    for u in 0..n {
        for v in u + 1..n {
            let shared = (0..n).filter(|&w| sub.has_arc(u, w) && sub.has_arc(v, w)).count();
            if shared >= 2 {
                return Err(format!("{u} and {v} share {shared} out-neighbours"));
            }
        }
    }
    if has_triangle(&competition_oracle(&sub)) {
        return Err("subdigraph induces a triangle".into());
    }
    Ok(())
}
