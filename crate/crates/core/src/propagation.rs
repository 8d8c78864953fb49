//! Synchronous irreversible threshold cascade.
//!
//! Starting from a seed set, round i+1 activates exactly the inactive
//! vertices with at least t(v) active neighbors after round i; activation
//! is never undone. A seed whose cascade reaches every vertex is a dynamic
//! monopoly (dynamo).

use serde::Serialize;

use crate::error::Result;
use crate::graph::{Graph, ThresholdAssignment, VertexSet};

/// Round-by-round record of a cascade. `rounds[0]` is the seed set and
/// `rounds[i]` the vertices newly activated in round i; only nonempty
/// rounds are stored, so an empty seed yields no rounds at all.
#[derive(Debug, Clone, Serialize)]
pub struct CascadeTrace {
    rounds: Vec<VertexSet>,
    complete: bool,
    #[serde(skip)]
    round_of: Vec<Option<usize>>,
}

impl CascadeTrace {
    pub fn rounds(&self) -> &[VertexSet] {
        &self.rounds
    }

    /// True iff the cascade activated every vertex.
    pub fn is_complete(&self) -> bool {
        self.complete
    }

    pub fn active_count(&self) -> usize {
        self.rounds.iter().map(VertexSet::len).sum()
    }

    /// Round in which `v` became active, or `None` if it never did.
    pub fn activation_round(&self, v: usize) -> Result<Option<usize>> {
        if v >= self.round_of.len() {
            return Err(crate::error::Error::VertexOutOfRange {
                v,
                n: self.round_of.len(),
            });
        }
        Ok(self.round_of[v])
    }

    /// All vertices activated over the whole cascade.
    pub fn active_set(&self) -> VertexSet {
        let mask: Vec<bool> = self.round_of.iter().map(Option::is_some).collect();
        VertexSet::from_mask(&mask)
    }
}

/// Runs the cascade from `seed` to its fixpoint.
pub fn simulate(g: &Graph, t: &ThresholdAssignment, seed: &VertexSet) -> Result<CascadeTrace> {
    t.check_graph(g)?;
    seed.check_graph(g)?;
    let n = g.n();
    let mut active = vec![false; n];
    let mut active_nbrs = vec![0usize; n];
    let mut round_of = vec![None; n];
    let mut total = 0usize;

    let mut rounds = Vec::new();
    let mut frontier: Vec<usize> = seed.iter().collect();
    let mut round = 0usize;
    for &v in &frontier {
        active[v] = true;
        round_of[v] = Some(0);
        total += 1;
    }
    if !frontier.is_empty() {
        rounds.push(seed.clone());
    }

    while !frontier.is_empty() {
        let mut candidates = Vec::new();
        for &v in &frontier {
            for &u in g.neighbors(v) {
                active_nbrs[u] += 1;
                if !active[u] {
                    candidates.push(u);
                }
            }
        }
        candidates.sort_unstable();
        candidates.dedup();
        let newly: Vec<usize> = candidates
            .into_iter()
            .filter(|&u| active_nbrs[u] >= t.get(u))
            .collect();
        if newly.is_empty() {
            break;
        }
        round += 1;
        for &v in &newly {
            active[v] = true;
            round_of[v] = Some(round);
            total += 1;
        }
        rounds.push(VertexSet::new(n, newly.iter().copied())?);
        frontier = newly;
    }

    Ok(CascadeTrace {
        rounds,
        complete: total == n,
        round_of,
    })
}

/// True iff `seed` is a dynamic monopoly of (g, t), decided by simulation.
pub fn is_dynamo(g: &Graph, t: &ThresholdAssignment, seed: &VertexSet) -> Result<bool> {
    Ok(simulate(g, t, seed)?.is_complete())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generators;

    fn c4() -> Graph {
        generators::cycle(4).unwrap()
    }

    fn t2(n: usize) -> ThresholdAssignment {
        ThresholdAssignment::constant(n, 2).unwrap()
    }

    #[test]
    fn c4_diagonal_completes() {
        let g = c4();
        let trace = simulate(&g, &t2(4), &VertexSet::new(4, [0, 2]).unwrap()).unwrap();
        assert!(trace.is_complete());
        assert_eq!(trace.rounds().len(), 2);
        assert_eq!(trace.rounds()[0].as_slice(), &[0, 2]);
        assert_eq!(trace.rounds()[1].as_slice(), &[1, 3]);
        assert_eq!(trace.activation_round(1).unwrap(), Some(1));
        assert_eq!(trace.activation_round(0).unwrap(), Some(0));
    }

    #[test]
    fn c4_adjacent_pair_stalls() {
        let g = c4();
        let trace = simulate(&g, &t2(4), &VertexSet::new(4, [0, 1]).unwrap()).unwrap();
        assert!(!trace.is_complete());
        assert_eq!(trace.rounds().len(), 1);
        assert_eq!(trace.activation_round(3).unwrap(), None);
        assert!(!is_dynamo(&g, &t2(4), &VertexSet::new(4, [0, 1]).unwrap()).unwrap());
    }

    #[test]
    fn full_seed_is_one_round() {
        let g = generators::gp(5, 2).unwrap();
        let t = t2(10);
        let trace = simulate(&g, &t, &VertexSet::full(10)).unwrap();
        assert!(trace.is_complete());
        assert_eq!(trace.rounds().len(), 1);
    }

    #[test]
    fn single_seed_on_k4_with_t1() {
        let g = generators::complete(4);
        let t = ThresholdAssignment::constant(4, 1).unwrap();
        assert!(is_dynamo(&g, &t, &VertexSet::new(4, [0]).unwrap()).unwrap());
    }

    #[test]
    fn paper_gp_seed_is_dynamo() {
        let g = generators::gp(5, 2).unwrap();
        assert!(is_dynamo(&g, &t2(10), &VertexSet::new(10, [0, 2, 8]).unwrap()).unwrap());
    }

    #[test]
    fn empty_seed() {
        let g = c4();
        let trace = simulate(&g, &t2(4), &VertexSet::empty(4)).unwrap();
        assert!(!trace.is_complete());
        assert!(trace.rounds().is_empty());
    }

    #[test]
    fn size_mismatch_rejected() {
        let g = c4();
        let t = ThresholdAssignment::constant(3, 2).unwrap();
        assert!(simulate(&g, &t, &VertexSet::empty(4)).is_err());
        assert!(simulate(&g, &t2(4), &VertexSet::empty(3)).is_err());
    }

    #[test]
    fn rounds_bounded_by_n_and_irreversible() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for _ in 0..30 {
            let n = rand::Rng::gen_range(&mut rng, 1..=25);
            let g = Graph::gnp(n, 0.15, &mut rng);
            let t = ThresholdAssignment::from_vec(
                (0..n)
                    .map(|v| rand::Rng::gen_range(&mut rng, 1..=g.degree(v) + 1))
                    .collect(),
            )
            .unwrap();
            let seed = VertexSet::new(
                n,
                (0..n).filter(|_| rand::Rng::gen_bool(&mut rng, 0.2)),
            )
            .unwrap();
            let trace = simulate(&g, &t, &seed).unwrap();
            assert!(trace.rounds().len() <= n);
            // rounds are pairwise disjoint and every activation is kept
            let mut seen = vec![false; n];
            for r in trace.rounds() {
                for v in r.iter() {
                    assert!(!seen[v]);
                    seen[v] = true;
                }
            }
        }
    }
}
