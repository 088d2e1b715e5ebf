//! Seeded fixtures shared by the benchmarks.

use ijcomp_core::{DegreeBounds, Digraph, Graph};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// A random `<i,j>` digraph: ordered pairs are visited in random order and
/// each is kept with probability `density` while the bounds allow it.
pub fn random_ij_digraph(n: usize, b: DegreeBounds, density: f64, seed: u64) -> Digraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v))).collect();
    pairs.shuffle(&mut rng);
    let (mut out, mut inc) = (vec![0; n], vec![0; n]);
    let mut arcs = Vec::new();
    for (u, v) in pairs {
        if out[u] < b.j() && inc[v] < b.i() && rng.gen_bool(density) {
            out[u] += 1;
            inc[v] += 1;
            arcs.push((u, v));
        }
    }
    Digraph::from_arcs(n, arcs).expect("pairs are distinct and loopless")
}

/// `G(n, p)` with a fixed seed.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let edges: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let kept: Vec<(usize, usize)> = edges.into_iter().filter(|_| rng.gen_bool(p)).collect();
    Graph::from_edges(n, kept).expect("pairs are distinct and loopless")
}
