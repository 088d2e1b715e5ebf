use std::sync::OnceLock;

use crate::graph::Digraph;

/// The five triangle-inducing digraphs and `P(2,2)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PatternLibrary {
    pub triangle_patterns: [Digraph; 5],
    pub p22: Digraph,
}

impl PatternLibrary {
    pub fn get() -> &'static PatternLibrary {
        static LIBRARY: OnceLock<PatternLibrary> = OnceLock::new();
        LIBRARY.get_or_init(|| {
            let d = |n, arcs: &[(usize, usize)]| Digraph::from_arcs(n, arcs.iter().copied()).expect("fixed pattern");
            PatternLibrary {
                triangle_patterns: [
                    // three sources, each pair sharing its own sink
                    d(6, &[(0, 3), (0, 5), (1, 3), (1, 4), (2, 4), (2, 5)]),
                    // three sources, one common sink
                    d(4, &[(0, 3), (1, 3), (2, 3)]),
                    // the middle source is also a sink for both outer ones
                    d(5, &[(0, 3), (0, 1), (1, 3), (1, 4), (2, 1), (2, 4)]),
                    // three digons
                    d(3, &[(0, 1), (1, 0), (0, 2), (2, 0), (1, 2), (2, 1)]),
                    // one digon
                    d(4, &[(0, 3), (3, 0), (3, 1), (0, 1), (2, 3), (2, 0)]),
                ],
                p22: d(4, &[(0, 2), (0, 3), (1, 2), (1, 3)]),
            }
        })
    }
}

/// Whether `host` has a (not necessarily induced) subdigraph isomorphic to
/// `pattern`: an injective vertex map sending every pattern arc to a host arc.
pub fn contains_subdigraph(host: &Digraph, pattern: &Digraph) -> bool {
    let p = pattern.vertex_count();
    if p > host.vertex_count() || pattern.arc_count() > host.arc_count() {
        return false;
    }
    // place high-degree pattern vertices first
    let mut order: Vec<usize> = (0..p).collect();
    order.sort_by_key(|&x| std::cmp::Reverse(pattern.outdegree(x) + pattern.indegree(x)));
    let mut image = vec![usize::MAX; p];
    let mut taken = vec![false; host.vertex_count()];
    embed(host, pattern, &order, 0, &mut image, &mut taken)
}

fn embed(host: &Digraph, pattern: &Digraph, order: &[usize], depth: usize, image: &mut [usize], taken: &mut [bool]) -> bool {
    let Some(&x) = order.get(depth) else {
        return true;
    };
    for h in 0..host.vertex_count() {
        if taken[h] || host.outdegree(h) < pattern.outdegree(x) || host.indegree(h) < pattern.indegree(x) {
            continue;
        }
        let fits = pattern.out_neighbors(x).iter().all(|&y| image[y] == usize::MAX || host.has_arc(h, image[y]))
            && pattern.in_neighbors(x).iter().all(|&y| image[y] == usize::MAX || host.has_arc(image[y], h));
        if !fits {
            continue;
        }
        image[x] = h;
        taken[h] = true;
        if embed(host, pattern, order, depth + 1, image, taken) {
            return true;
        }
        taken[h] = false;
        image[x] = usize::MAX;
    }
    false
}

/// Whether `d` contains one of the five triangle patterns.
pub fn induces_triangle(d: &Digraph) -> bool {
    PatternLibrary::get().triangle_patterns.iter().any(|p| contains_subdigraph(d, p))
}

/// Whether no two distinct vertices have two common out-neighbours, i.e.
/// `d` has no `P(2,2)`.
pub fn is_irredundant(d: &Digraph) -> bool {
    let n = d.vertex_count();
    (0..n).all(|u| (u + 1..n).all(|v| d.common_out_count(u, v) < 2))
}
