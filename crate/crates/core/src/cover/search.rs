use super::CliqueCover;
use crate::error::{Error, Result};
use crate::graph::{DegreeBounds, Graph};

/// Largest graph `search_cover` accepts.
pub const SEARCH_VERTEX_LIMIT: usize = 20;
/// Largest number of candidate cliques (size 2 to `i`) `search_cover` accepts.
pub const CANDIDATE_LIMIT: usize = 2000;

/// Exhaustive search for a member of `C(G, i, j)`.
///
/// Edges are handled in lexicographic order: the first uncovered edge must
/// lie in some clique of any cover, so the search branches over the candidate
/// cliques through it. Candidates are ordered by size (largest first), then
/// lexicographically, which makes the result deterministic. Singleton
/// cliques are never needed.
pub fn search_cover(g: &Graph, b: DegreeBounds) -> Result<Option<CliqueCover>> {
    let n = g.vertex_count();
    if n > SEARCH_VERTEX_LIMIT {
        return Err(Error::TooLarge { guard: "cover search (vertices)", actual: n, limit: SEARCH_VERTEX_LIMIT });
    }
    if g.is_edgeless() {
        return Ok(Some(CliqueCover::default()));
    }
    if b.i() < 2 {
        return Ok(None);
    }

    let candidates = candidate_cliques(g, b.i())?;
    let masks: Vec<u32> = candidates.iter().map(|c| c.iter().fold(0u32, |m, &v| m | 1 << v)).collect();
    let mut through = vec![Vec::new(); n * n];
    for (k, c) in candidates.iter().enumerate() {
        for (a, &u) in c.iter().enumerate() {
            for &v in &c[a + 1..] {
                through[u * n + v].push(k);
            }
        }
    }

    let mut search = Search {
        n,
        i: b.i(),
        j: b.j(),
        masks: &masks,
        through: &through,
        uncovered: (0..n).map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | 1 << w)).collect(),
        uncovered_count: g.edge_count(),
        used: vec![0; n],
        chosen: Vec::new(),
    };
    Ok(search.run().then(|| CliqueCover::new(search.chosen.iter().map(|&k| candidates[k].clone()).collect())))
}

/// All cliques with 2 to `max` vertices, largest first and lexicographic
/// within a size.
fn candidate_cliques(g: &Graph, max: usize) -> Result<Vec<Vec<usize>>> {
    let n = g.vertex_count();
    let mut out = Vec::new();
    let mut current = Vec::new();
    for v in 0..n {
        current.push(v);
        let later: Vec<usize> = g.neighbors(v).iter().copied().filter(|&w| w > v).collect();
        extend(g, &mut current, &later, max, &mut out)?;
        current.pop();
    }
    out.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
    Ok(out)
}

fn extend(g: &Graph, current: &mut Vec<usize>, pool: &[usize], max: usize, out: &mut Vec<Vec<usize>>) -> Result<()> {
    if current.len() >= 2 {
        out.push(current.clone());
        if out.len() > CANDIDATE_LIMIT {
            return Err(Error::TooLarge { guard: "cover search (candidate cliques)", actual: out.len(), limit: CANDIDATE_LIMIT });
        }
    }
    if current.len() == max {
        return Ok(());
    }
    for (a, &w) in pool.iter().enumerate() {
        let next: Vec<usize> = pool[a + 1..].iter().copied().filter(|&x| g.has_edge(w, x)).collect();
        current.push(w);
        extend(g, current, &next, max, out)?;
        current.pop();
    }
    Ok(())
}

struct Search<'a> {
    n: usize,
    i: usize,
    j: usize,
    masks: &'a [u32],
    through: &'a [Vec<usize>],
    /// Uncovered neighbours of each vertex.
    uncovered: Vec<u32>,
    uncovered_count: usize,
    used: Vec<usize>,
    chosen: Vec<usize>,
}

impl Search<'_> {
    fn run(&mut self) -> bool {
        let Some(u) = (0..self.n).find(|&v| self.uncovered[v] != 0) else {
            return true;
        };
        if !self.feasible() {
            return false;
        }
        let v = self.uncovered[u].trailing_zeros() as usize;
        for &k in &self.through[u * self.n + v] {
            let mask = self.masks[k];
            if ones(mask).any(|x| self.used[x] == self.j) {
                continue;
            }
            let removed = self.apply(mask);
            self.chosen.push(k);
            if self.run() {
                return true;
            }
            self.chosen.pop();
            self.undo(mask, &removed);
        }
        false
    }

    fn feasible(&self) -> bool {
        let remaining = self.n - self.chosen.len();
        let per_clique = self.i * (self.i - 1) / 2;
        if self.uncovered_count > remaining * per_clique {
            return false;
        }
        (0..self.n).all(|v| {
            let need = (self.uncovered[v].count_ones() as usize).div_ceil(self.i - 1);
            need <= self.j - self.used[v]
        })
    }

    /// Marks the clique's edges covered and returns what was uncovered before.
    fn apply(&mut self, mask: u32) -> Vec<u32> {
        let before: Vec<u32> = ones(mask).map(|x| self.uncovered[x]).collect();
        let newly: usize = before.iter().map(|&old| (old & mask).count_ones() as usize).sum();
        self.uncovered_count -= newly / 2;
        for x in ones(mask) {
            self.uncovered[x] &= !mask;
            self.used[x] += 1;
        }
        before
    }

    fn undo(&mut self, mask: u32, before: &[u32]) {
        let mut restored = 0;
        for (x, &old) in ones(mask).zip(before) {
            restored += (old & mask).count_ones() as usize;
            self.uncovered[x] = old;
            self.used[x] -= 1;
        }
        self.uncovered_count += restored / 2;
    }
}

fn ones(mut mask: u32) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        (mask != 0).then(|| {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            v
        })
    })
}
