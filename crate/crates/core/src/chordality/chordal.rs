use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::graph::Graph;

/// Chordality verdict; `hole` is an induced cycle of length at least 4,
/// present exactly when `chordal` is false.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChordalityReport {
    pub chordal: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub hole: Option<Vec<usize>>,
}

/// Decides chordality with maximum cardinality search and a perfect
/// elimination check, then extracts the shortest hole when one exists.
pub fn is_chordal(g: &Graph) -> ChordalityReport {
    if has_perfect_elimination_order(g) {
        return ChordalityReport { chordal: true, hole: None };
    }
    let hole = shortest_hole(g).expect("a graph without a perfect elimination order has a hole");
    ChordalityReport { chordal: false, hole: Some(hole) }
}

/// Visit order of maximum cardinality search, ties to the smallest vertex.
pub fn maximum_cardinality_search(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut weight = vec![0usize; n];
    let mut visited = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !visited[v])
            .max_by_key(|&v| (weight[v], std::cmp::Reverse(v)))
            .expect("unvisited vertex remains");
        visited[v] = true;
        order.push(v);
        for &w in g.neighbors(v) {
            if !visited[w] {
                weight[w] += 1;
            }
        }
    }
    order
}

/// The reverse of an MCS order is a perfect elimination order iff `g` is
/// chordal. Equivalently: for every vertex, its earlier-visited neighbours
/// other than the latest one must all be adjacent to that latest one.
fn has_perfect_elimination_order(g: &Graph) -> bool {
    let order = maximum_cardinality_search(g);
    let mut position = vec![0; g.vertex_count()];
    for (at, &v) in order.iter().enumerate() {
        position[v] = at;
    }
    order.iter().all(|&v| {
        let earlier: Vec<usize> = g.neighbors(v).iter().copied().filter(|&w| position[w] < position[v]).collect();
        match earlier.iter().max_by_key(|&&w| position[w]) {
            None => true,
            Some(&parent) => earlier.iter().all(|&w| w == parent || g.has_edge(w, parent)),
        }
    })
}

/// Every hole through `v` with hole-neighbours `x` and `y` is found by a
/// shortest `x`-`y` path avoiding the rest of `N[v]`; such a path together
/// with `v` is always an induced cycle.
fn shortest_hole(g: &Graph) -> Option<Vec<usize>> {
    let n = g.vertex_count();
    let mut best: Option<Vec<usize>> = None;
    for v in 0..n {
        let nbrs = g.neighbors(v);
        for (a, &x) in nbrs.iter().enumerate() {
            for &y in &nbrs[a + 1..] {
                if g.has_edge(x, y) {
                    continue;
                }
                let mut blocked = vec![false; n];
                blocked[v] = true;
                for &w in nbrs {
                    blocked[w] = w != x && w != y;
                }
                let Some(path) = bfs_path(g, x, y, &blocked) else { continue };
                let mut cycle = vec![v];
                cycle.extend(path);
                let cycle = canonical_cycle(&cycle);
                let better = match &best {
                    None => true,
                    Some(b) => (cycle.len(), &cycle) < (b.len(), b),
                };
                if better {
                    best = Some(cycle);
                }
            }
        }
    }
    best
}

fn bfs_path(g: &Graph, from: usize, to: usize, blocked: &[bool]) -> Option<Vec<usize>> {
    let mut parent = vec![usize::MAX; g.vertex_count()];
    parent[from] = from;
    let mut queue = VecDeque::from([from]);
    while let Some(u) = queue.pop_front() {
        if u == to {
            let mut path = vec![to];
            let mut at = to;
            while at != from {
                at = parent[at];
                path.push(at);
            }
            path.reverse();
            return Some(path);
        }
        for &w in g.neighbors(u) {
            if parent[w] == usize::MAX && !blocked[w] {
                parent[w] = u;
                queue.push_back(w);
            }
        }
    }
    None
}

/// Lexicographically least rotation or reflection of a cyclic sequence.
pub fn canonical_cycle(cycle: &[usize]) -> Vec<usize> {
    let m = cycle.len();
    let mut best: Option<Vec<usize>> = None;
    for start in 0..m {
        for forward in [true, false] {
            let seq: Vec<usize> = (0..m)
                .map(|k| if forward { cycle[(start + k) % m] } else { cycle[(start + m - k) % m] })
                .collect();
            if best.as_ref().is_none_or(|b| seq < *b) {
                best = Some(seq);
            }
        }
    }
    best.unwrap_or_default()
}

/// Whether `cycle` is a hole of `g`: at least four distinct vertices,
/// consecutive ones adjacent, no chords.
pub fn is_hole(g: &Graph, cycle: &[usize]) -> bool {
    let m = cycle.len();
    if m < 4 || cycle.iter().any(|&v| v >= g.vertex_count()) {
        return false;
    }
    let mut sorted = cycle.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != m {
        return false;
    }
    (0..m).all(|a| {
        (a + 1..m).all(|b| {
            let consecutive = b == a + 1 || (a == 0 && b == m - 1);
            g.has_edge(cycle[a], cycle[b]) == consecutive
        })
    })
}
