//! Exact minimum dynamic monopoly by iterative-deepening subset search.
//!
//! For each candidate size s (starting from the best applicable lower
//! bound) the solver enumerates s-subsets in lexicographic order, always
//! pre-placing the vertices with t(v) > d_G(v) — no cascade can ever
//! activate those, so every dynamo contains them. Feasibility of a
//! candidate is decided by peeling, which is linear per candidate and
//! agrees with direct simulation. The first feasible size is optimal.

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};

use serde::Serialize;

use crate::bounds;
use crate::error::{Error, Result};
use crate::graph::{Graph, ThresholdAssignment, VertexSet};
use crate::resistant::DynamoDecider;

/// Resource limits and knobs for [`min_dynamo`].
#[derive(Debug, Clone)]
pub struct SearchLimits {
    /// Largest seed size to try; `None` allows up to n (where the full
    /// vertex set always succeeds).
    pub max_size: Option<usize>,
    /// Maximum number of feasibility checks.
    pub node_budget: u64,
    /// Start the deepening at the best closed-form lower bound instead
    /// of at the forced-vertex count.
    pub use_lower_bound: bool,
    /// Worker threads; sizes below the reported minimum are exhausted
    /// either way, but with more than one worker the returned witness may
    /// be any optimal set rather than the lexicographically smallest.
    pub jobs: usize,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits {
            max_size: None,
            node_budget: 100_000_000,
            use_lower_bound: true,
            jobs: 1,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SolverResult {
    pub min_size: usize,
    pub witness: VertexSet,
    /// True when `min_size − 1` is certified infeasible (exhaustively or
    /// by the starting lower bound); false on budget exhaustion, where
    /// `witness` is only the best known upper bound.
    pub optimal: bool,
    pub nodes_explored: u64,
    pub lower_bound_used: usize,
}

/// Visits k-subsets of `pool` in lexicographic order until the callback
/// returns false (meaning: stop).
fn for_each_subset(pool: &[usize], k: usize, mut visit: impl FnMut(&[usize]) -> bool) {
    if k > pool.len() {
        return;
    }
    if k == 0 {
        visit(&[]);
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    let mut chosen: Vec<usize> = idx.iter().map(|&i| pool[i]).collect();
    loop {
        if !visit(&chosen) {
            return;
        }
        // advance to the next combination
        let mut i = k;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if idx[i] != i + pool.len() - k {
                idx[i] += 1;
                for j in (i + 1)..k {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
        for (slot, &i) in chosen.iter_mut().zip(idx.iter()) {
            *slot = pool[i];
        }
    }
}

struct LevelSearch<'a> {
    g: &'a Graph,
    t: &'a ThresholdAssignment,
    forced: &'a [usize],
    free: &'a [usize],
    budget: u64,
    nodes: AtomicU64,
    exhausted: AtomicBool,
}

impl<'a> LevelSearch<'a> {
    /// Tries all candidates of `extra` free vertices on top of the forced
    /// set; returns the first feasible candidate per worker, merged to the
    /// lexicographically smallest found.
    fn run(&self, extra: usize, jobs: usize) -> Option<Vec<usize>> {
        if extra > self.free.len() {
            return None;
        }
        if jobs <= 1 || extra == 0 {
            let mut decider = DynamoDecider::new(self.g, self.t).expect("sizes checked");
            let mut found = None;
            for_each_subset(self.free, extra, |chosen| {
                if self.spend() {
                    return false;
                }
                let mut candidate = self.forced.to_vec();
                candidate.extend_from_slice(chosen);
                if decider.seed_is_dynamo(&candidate) {
                    candidate.sort_unstable();
                    found = Some(candidate);
                    return false;
                }
                true
            });
            return found;
        }

        // partition the subset space by the first free element chosen
        let stop = AtomicBool::new(false);
        let mut per_worker: Vec<Option<Vec<usize>>> = Vec::new();
        std::thread::scope(|scope| {
            let handles: Vec<_> = (0..jobs)
                .map(|w| {
                    let stop = &stop;
                    scope.spawn(move || {
                        let mut decider =
                            DynamoDecider::new(self.g, self.t).expect("sizes checked");
                        let mut found: Option<Vec<usize>> = None;
                        let mut first = w;
                        while first + extra <= self.free.len() {
                            if stop.load(Ordering::Relaxed) {
                                break;
                            }
                            for_each_subset(&self.free[first + 1..], extra - 1, |chosen| {
                                if self.spend() || stop.load(Ordering::Relaxed) {
                                    return false;
                                }
                                let mut candidate = self.forced.to_vec();
                                candidate.push(self.free[first]);
                                candidate.extend_from_slice(chosen);
                                if decider.seed_is_dynamo(&candidate) {
                                    candidate.sort_unstable();
                                    found = Some(candidate);
                                    stop.store(true, Ordering::Relaxed);
                                    return false;
                                }
                                true
                            });
                            if found.is_some() {
                                break;
                            }
                            first += jobs;
                        }
                        found
                    })
                })
                .collect();
            per_worker = handles.into_iter().map(|h| h.join().unwrap()).collect();
        });
        per_worker.into_iter().flatten().min()
    }

    /// Accounts one feasibility check; true means the budget is gone.
    fn spend(&self) -> bool {
        if self.nodes.fetch_add(1, Ordering::Relaxed) >= self.budget {
            self.exhausted.store(true, Ordering::Relaxed);
            return true;
        }
        false
    }
}

/// Finds a minimum dynamic monopoly of (g, t) within the given limits.
///
/// On budget exhaustion the result carries `optimal: false` and the best
/// known upper witness (the full vertex set if nothing smaller was found).
/// Exceeding `max_size` without finding a dynamo is an error.
pub fn min_dynamo(g: &Graph, t: &ThresholdAssignment, limits: &SearchLimits) -> Result<SolverResult> {
    t.check_graph(g)?;
    let n = g.n();
    let forced: Vec<usize> = (0..n).filter(|&v| t.get(v) > g.degree(v)).collect();
    let free: Vec<usize> = (0..n).filter(|&v| t.get(v) <= g.degree(v)).collect();

    let bound = if limits.use_lower_bound && n > 0 {
        bounds::best_lower_bound(g, t)?
    } else {
        0
    };
    let lower_bound_used = bound.max(forced.len());
    let cap = limits.max_size.unwrap_or(n).min(n);

    let search = LevelSearch {
        g,
        t,
        forced: &forced,
        free: &free,
        budget: limits.node_budget,
        nodes: AtomicU64::new(0),
        exhausted: AtomicBool::new(false),
    };

    for s in lower_bound_used..=cap {
        let found = search.run(s - forced.len(), limits.jobs.max(1));
        let nodes_explored = search.nodes.load(Ordering::Relaxed).min(limits.node_budget);
        // all sizes below s were enumerated in full, so a hit at s is
        // optimal even if the budget ran out while it was being found
        if let Some(witness) = found {
            return Ok(SolverResult {
                min_size: s,
                witness: VertexSet::new(n, witness)?,
                optimal: true,
                nodes_explored,
                lower_bound_used,
            });
        }
        if search.exhausted.load(Ordering::Relaxed) {
            return Ok(SolverResult {
                min_size: n,
                witness: VertexSet::full(n),
                optimal: false,
                nodes_explored,
                lower_bound_used,
            });
        }
    }
    Err(Error::NoDynamoWithinLimit { limit: cap })
}

/// Number of dynamos of exactly the given size, by full enumeration.
pub fn count_min_dynamos(g: &Graph, t: &ThresholdAssignment, size: usize) -> Result<u64> {
    t.check_graph(g)?;
    let n = g.n();
    let all: Vec<usize> = (0..n).collect();
    let mut decider = DynamoDecider::new(g, t)?;
    let mut count = 0u64;
    for_each_subset(&all, size, |candidate| {
        if decider.seed_is_dynamo(candidate) {
            count += 1;
        }
        true
    });
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generators;
    use crate::propagation;

    fn t_const(n: usize, t: usize) -> ThresholdAssignment {
        ThresholdAssignment::constant(n, t).unwrap()
    }

    #[test]
    fn petersen_minimum_is_three() {
        let g = generators::gp(5, 2).unwrap();
        let r = min_dynamo(&g, &t_const(10, 2), &SearchLimits::default()).unwrap();
        assert_eq!(r.min_size, 3);
        assert!(r.optimal);
        assert_eq!(r.lower_bound_used, 3);
        assert!(propagation::is_dynamo(&g, &t_const(10, 2), &r.witness).unwrap());
    }

    #[test]
    fn k4_single_vertex() {
        let g = generators::complete(4);
        let r = min_dynamo(&g, &t_const(4, 1), &SearchLimits::default()).unwrap();
        assert_eq!(r.min_size, 1);
        assert_eq!(r.witness.as_slice(), &[0]); // lexicographically smallest
    }

    #[test]
    fn rook3_minimum_is_two() {
        let g = generators::rook(3).unwrap();
        let r = min_dynamo(&g, &t_const(9, 2), &SearchLimits::default()).unwrap();
        assert_eq!(r.min_size, 2);
        assert!(r.optimal);
    }

    #[test]
    fn counts() {
        let c4 = generators::cycle(4).unwrap();
        assert_eq!(count_min_dynamos(&c4, &t_const(4, 2), 2).unwrap(), 2);
        let k4 = generators::complete(4);
        assert_eq!(count_min_dynamos(&k4, &t_const(4, 1), 1).unwrap(), 4);
        let gp = generators::gp(5, 2).unwrap();
        assert_eq!(count_min_dynamos(&gp, &t_const(10, 2), 2).unwrap(), 0);
    }

    #[test]
    fn forced_vertices_always_in_witness() {
        // path endpoint with threshold above its degree must be seeded
        let g = generators::path(4);
        let t = ThresholdAssignment::from_vec(vec![2, 1, 1, 1]).unwrap();
        let r = min_dynamo(&g, &t, &SearchLimits::default()).unwrap();
        assert!(r.witness.contains(0));
        assert!(r.min_size >= 1);
    }

    #[test]
    fn budget_exhaustion_degrades_gracefully() {
        let g = generators::gp(5, 2).unwrap();
        let limits = SearchLimits {
            node_budget: 3,
            ..SearchLimits::default()
        };
        let r = min_dynamo(&g, &t_const(10, 2), &limits).unwrap();
        assert!(!r.optimal);
        assert!(propagation::is_dynamo(&g, &t_const(10, 2), &r.witness).unwrap());
    }

    #[test]
    fn max_size_limit_errors_when_too_small() {
        let g = generators::cycle(4).unwrap();
        let limits = SearchLimits {
            max_size: Some(1),
            ..SearchLimits::default()
        };
        assert!(matches!(
            min_dynamo(&g, &t_const(4, 2), &limits),
            Err(Error::NoDynamoWithinLimit { limit: 1 })
        ));
    }

    #[test]
    fn pruning_on_off_agree() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(21);
        let mut instances: Vec<(Graph, ThresholdAssignment)> = (0..15)
            .map(|_| {
                let n = rng.gen_range(1..=12);
                let g = Graph::gnp(n, 0.3, &mut rng);
                let t = ThresholdAssignment::from_vec(
                    (0..n).map(|v| rng.gen_range(1..=g.degree(v) + 1)).collect(),
                )
                .unwrap();
                (g, t)
            })
            .collect();
        instances.push((generators::gp(5, 2).unwrap(), t_const(10, 2)));
        instances.push((generators::rook(3).unwrap(), t_const(9, 2)));
        for (g, t) in &instances {
            let pruned = min_dynamo(g, t, &SearchLimits::default()).unwrap();
            let plain = min_dynamo(
                g,
                t,
                &SearchLimits {
                    use_lower_bound: false,
                    ..SearchLimits::default()
                },
            )
            .unwrap();
            assert_eq!(pruned.min_size, plain.min_size);
            assert_eq!(pruned.witness, plain.witness);
        }
    }

    #[test]
    fn sequential_mode_is_deterministic() {
        let g = generators::gp(7, 2).unwrap();
        let t = t_const(14, 2);
        let a = min_dynamo(&g, &t, &SearchLimits::default()).unwrap();
        let b = min_dynamo(&g, &t, &SearchLimits::default()).unwrap();
        assert_eq!(a.witness, b.witness);
        assert_eq!(a.nodes_explored, b.nodes_explored);
    }

    #[test]
    fn parallel_matches_sequential_size() {
        let g = generators::gp(7, 2).unwrap();
        let t = t_const(14, 2);
        let seq = min_dynamo(&g, &t, &SearchLimits::default()).unwrap();
        let par = min_dynamo(
            &g,
            &t,
            &SearchLimits {
                jobs: 4,
                ..SearchLimits::default()
            },
        )
        .unwrap();
        assert_eq!(seq.min_size, par.min_size);
        assert!(propagation::is_dynamo(&g, &t, &par.witness).unwrap());
    }

    #[test]
    fn empty_graph() {
        let g = Graph::empty(0);
        let t = ThresholdAssignment::from_vec(vec![]).unwrap();
        let r = min_dynamo(&g, &t, &SearchLimits::default()).unwrap();
        assert_eq!(r.min_size, 0);
        assert!(r.optimal);
    }
}
