use serde::{Deserialize, Serialize};

use super::{check_cover, find_sdr, subsets_lemma_index, CliqueCover, HallViolation, SdrAssignment, SdrOutcome};
use crate::error::{Error, Result};
use crate::graph::{DegreeBounds, Graph};

/// One shrinking step: clique `replaced` became `replacement`, or vanished
/// when `dropped` is set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepairStep {
    pub violation: HallViolation,
    /// Index into the cover as it stood before this step.
    pub replaced: usize,
    /// `Q = C_replaced ∩ union`.
    pub replacement: Vec<usize>,
    /// Set when `Q` has at most one vertex and so covers no edge.
    pub dropped: bool,
    pub weight_before: usize,
    pub weight_after: usize,
    pub cover_after: CliqueCover,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Repair {
    pub cover: CliqueCover,
    pub sdr: SdrAssignment,
    pub steps: Vec<RepairStep>,
}

/// Shrinks a valid cover until its complements admit an SDR.
///
/// Every Hall violation `{t_1..t_s}` with union `U` satisfies
/// `C_{t_a} = (V - U) ∪ Q_a` where `Q_a = C_{t_a} ∩ U`. Some `Q_r` lies in the
/// union of the other `Q_a`, and swapping `C_{t_r}` for `Q_r` keeps every edge
/// covered while lowering the weight.
///
/// The argument needs every complement `V - C_t` to be nonempty, so a cover
/// containing a clique on all of `V` is rejected; complete graphs have a
/// closed-form witness instead.
pub fn repair_cover(g: &Graph, c: &CliqueCover, b: DegreeBounds) -> Result<Repair> {
    let n = g.vertex_count();
    if let Err(defect) = check_cover(g, c, b) {
        return Err(Error::Precondition(format!("cover is invalid: {defect}")));
    }
    if g.edge_count() == 0 {
        return Err(Error::Precondition("graph has no edge".into()));
    }
    if c.cliques().iter().any(|clique| clique.len() == n) {
        return Err(Error::Precondition("a clique spans every vertex".into()));
    }

    let mut cover = c.clone();
    let mut steps = Vec::new();
    loop {
        let violation = match find_sdr(g, &cover) {
            SdrOutcome::Sdr(sdr) => return Ok(Repair { cover, sdr, steps }),
            SdrOutcome::Violation(v) => v,
        };
        let q: Vec<Vec<usize>> = violation
            .indices
            .iter()
            .map(|&t| {
                cover.cliques()[t]
                    .iter()
                    .copied()
                    .filter(|v| violation.union.binary_search(v).is_ok())
                    .collect()
            })
            .collect();
        let r = subsets_lemma_index(&q, &violation.union)?;
        let replaced = violation.indices[r];
        let replacement = q[r].clone();
        let dropped = replacement.len() <= 1;

        let weight_before = cover.weight();
        let mut cliques = cover.into_cliques();
        if dropped {
            cliques.remove(replaced);
        } else {
            cliques[replaced] = replacement.clone();
        }
        cover = CliqueCover::new(cliques);
        let weight_after = cover.weight();

        if let Err(defect) = check_cover(g, &cover, b) {
            return Err(Error::EquivalenceFailed(format!("repair step left an invalid cover: {defect}")));
        }
        if weight_after >= weight_before {
            return Err(Error::EquivalenceFailed(format!(
                "repair step did not lower the weight ({weight_before} -> {weight_after})"
            )));
        }
        steps.push(RepairStep {
            violation,
            replaced,
            replacement,
            dropped,
            weight_before,
            weight_after,
            cover_after: cover.clone(),
        });
    }
}
