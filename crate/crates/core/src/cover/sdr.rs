use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use super::CliqueCover;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Distinct vertices `v_1..v_p` with `v_t` outside `C_t`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SdrAssignment {
    representatives: Vec<usize>,
}

impl SdrAssignment {
    pub fn new(representatives: Vec<usize>) -> Self {
        Self { representatives }
    }

    pub fn representatives(&self) -> &[usize] {
        &self.representatives
    }
}

/// A family of complements `B_t = V - C_t` whose union is smaller than the
/// family: `|union| < |indices|`, so no SDR exists.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HallViolation {
    /// Cover indices `t_1..t_s`, sorted.
    pub indices: Vec<usize>,
    /// `B_{t_1} ∪ ... ∪ B_{t_s}`, sorted.
    pub union: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SdrOutcome {
    Sdr(SdrAssignment),
    Violation(HallViolation),
}

impl SdrOutcome {
    pub fn sdr(self) -> Option<SdrAssignment> {
        match self {
            Self::Sdr(s) => Some(s),
            Self::Violation(_) => None,
        }
    }
}

/// Finds an SDR of `{V - C_t}` by maximum bipartite matching between cover
/// indices and vertices. When the matching leaves an index unmatched, the
/// indices and vertices reachable from it along alternating paths form a
/// Hall violation: every reached vertex is matched to a reached index, and
/// the unmatched start has no partner.
pub fn find_sdr(g: &Graph, c: &CliqueCover) -> SdrOutcome {
    let n = g.vertex_count();
    let p = c.len();
    let allowed: Vec<Vec<usize>> = c
        .cliques()
        .iter()
        .map(|clique| (0..n).filter(|v| clique.binary_search(v).is_err()).collect())
        .collect();

    let mut rep_of: Vec<Option<usize>> = vec![None; p];
    let mut owner: Vec<Option<usize>> = vec![None; n];
    // greedy start, then augment
    for t in 0..p {
        if let Some(&v) = allowed[t].iter().find(|&&v| owner[v].is_none()) {
            rep_of[t] = Some(v);
            owner[v] = Some(t);
        }
    }
    for t in 0..p {
        if rep_of[t].is_none() {
            let mut seen = vec![false; n];
            augment(t, &allowed, &mut rep_of, &mut owner, &mut seen);
        }
    }

    match rep_of.iter().position(Option::is_none) {
        None => SdrOutcome::Sdr(SdrAssignment::new(rep_of.into_iter().map(Option::unwrap).collect())),
        Some(start) => {
            let mut index_seen = vec![false; p];
            let mut vertex_seen = vec![false; n];
            let mut queue = VecDeque::from([start]);
            index_seen[start] = true;
            while let Some(t) = queue.pop_front() {
                for &v in &allowed[t] {
                    if vertex_seen[v] {
                        continue;
                    }
                    vertex_seen[v] = true;
                    let next = owner[v].expect("a free vertex here would be an augmenting path");
                    if !index_seen[next] {
                        index_seen[next] = true;
                        queue.push_back(next);
                    }
                }
            }
            let indices: Vec<usize> = (0..p).filter(|&t| index_seen[t]).collect();
            let union: Vec<usize> = (0..n).filter(|&v| vertex_seen[v]).collect();
            debug_assert!(union.len() < indices.len());
            SdrOutcome::Violation(HallViolation { indices, union })
        }
    }
}

fn augment(
    t: usize,
    allowed: &[Vec<usize>],
    rep_of: &mut [Option<usize>],
    owner: &mut [Option<usize>],
    seen: &mut [bool],
) -> bool {
    for &v in &allowed[t] {
        if seen[v] {
            continue;
        }
        seen[v] = true;
        let free = match owner[v] {
            None => true,
            Some(other) => augment(other, allowed, rep_of, owner, seen),
        };
        if free {
            rep_of[t] = Some(v);
            owner[v] = Some(t);
            return true;
        }
    }
    false
}

/// Given more sets than ground elements, returns the smallest index `t` with
/// `S_t` contained in the union of the other sets.
///
/// A set fails exactly when it owns an element no other set has; distinct
/// sets own distinct elements, so at most `|ground|` sets can fail.
pub fn subsets_lemma_index(sets: &[Vec<usize>], ground: &[usize]) -> Result<usize> {
    if sets.len() <= ground.len() {
        return Err(Error::Precondition(format!(
            "{} sets over a ground set of {} elements",
            sets.len(),
            ground.len()
        )));
    }
    let slot = |x: usize| ground.iter().position(|&g| g == x);
    let mut count = vec![0usize; ground.len()];
    for set in sets {
        for &x in set {
            let at = slot(x).ok_or_else(|| Error::Precondition(format!("element {x} is outside the ground set")))?;
            count[at] += 1;
        }
    }
    let t = sets
        .iter()
        .position(|set| set.iter().all(|&x| count[slot(x).unwrap()] >= 2))
        .expect("pigeonhole guarantees a set without private elements");
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cover(sets: &[&[usize]]) -> CliqueCover {
        CliqueCover::new(sets.iter().map(|s| s.to_vec()).collect())
    }

    #[test]
    fn four_cycle_has_sdr() {
        let c4 = Graph::cycle(4);
        let c = cover(&[&[0, 1], &[1, 2], &[2, 3], &[0, 3]]);
        let SdrOutcome::Sdr(s) = find_sdr(&c4, &c) else { panic!("expected an SDR") };
        let reps = s.representatives();
        for (clique, rep) in c.cliques().iter().zip(reps) {
            assert!(!clique.contains(rep));
        }
        let mut sorted = reps.to_vec();
        sorted.sort_unstable();
        assert_eq!(sorted, vec![0, 1, 2, 3]);
    }

    #[test]
    fn single_edge_has_no_sdr() {
        let k2 = Graph::complete(2);
        assert_eq!(
            find_sdr(&k2, &cover(&[&[0, 1]])),
            SdrOutcome::Violation(HallViolation { indices: vec![0], union: vec![] })
        );
    }

    #[test]
    fn empty_cover_has_empty_sdr() {
        assert_eq!(
            find_sdr(&Graph::empty(4), &CliqueCover::default()),
            SdrOutcome::Sdr(SdrAssignment::new(vec![]))
        );
    }

    #[test]
    fn violation_needs_augmenting_search() {
        // B_0 = {3}, B_1 = {3}, B_2 = {2,3}: indices {0,1} share one vertex
        let g = Graph::from_edges(4, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3)]).unwrap();
        let c = cover(&[&[0, 1, 2], &[0, 1, 2], &[0, 1]]);
        let SdrOutcome::Violation(v) = find_sdr(&g, &c) else { panic!("expected a violation") };
        assert!(v.union.len() < v.indices.len());
        for &t in &v.indices {
            for x in 0..4 {
                if !c.cliques()[t].contains(&x) {
                    assert!(v.union.contains(&x));
                }
            }
        }
    }

    #[test]
    fn more_cliques_than_vertices_is_a_violation() {
        let g = Graph::path(2);
        let c = cover(&[&[0], &[0], &[1]]);
        assert!(matches!(find_sdr(&g, &c), SdrOutcome::Violation(_)));
    }

    #[test]
    fn subsets_lemma_examples() {
        assert_eq!(subsets_lemma_index(&[vec![], vec![1]], &[1]).unwrap(), 0);
        // {1} and {1,2} both qualify; the smallest index wins
        let sets = [vec![1], vec![2], vec![1, 2]];
        let t = subsets_lemma_index(&sets, &[1, 2]).unwrap();
        assert_eq!(t, 0);
        let others: Vec<usize> = sets.iter().enumerate().filter(|(s, _)| *s != 2).flat_map(|(_, x)| x.clone()).collect();
        assert!(sets[2].iter().all(|x| others.contains(x)));
        assert_eq!(subsets_lemma_index(&[vec![1], vec![1], vec![2]], &[1, 2]).unwrap(), 0);
        assert_eq!(subsets_lemma_index(&[vec![1], vec![2, 3], vec![3], vec![2]], &[1, 2, 3]).unwrap(), 1);
    }

    #[test]
    fn subsets_lemma_precondition() {
        assert!(subsets_lemma_index(&[vec![1], vec![2]], &[1, 2]).is_err());
        assert!(subsets_lemma_index(&[vec![3], vec![]], &[1]).is_err());
    }
}
