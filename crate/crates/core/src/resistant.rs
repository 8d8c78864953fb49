//! Resistant subgraphs and the peeling decision procedure.
//!
//! A nonempty vertex set K is resistant when every v ∈ K keeps at least
//! d_G(v) − t(v) + 1 neighbors inside K; no vertex of such a set can ever
//! be activated from outside. Peeling repeatedly removes vertices whose
//! internal degree is at most d_G(v) − t(v); the residual is the unique
//! maximal resistant subgraph of the peeled set, independent of removal
//! order, and a seed set D is a dynamo exactly when peeling V∖D leaves
//! nothing behind.

use std::collections::BTreeSet;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, ThresholdAssignment, VertexSet};

/// Outcome of peeling a vertex set: the surviving residual, the order in
/// which vertices were removed, and each vertex's internal degree at the
/// moment of removal (always ≤ d_G(v) − t(v)).
#[derive(Debug, Clone, Serialize)]
pub struct PeelingResult {
    pub residual: VertexSet,
    pub elimination_order: Vec<usize>,
    pub slack: Vec<usize>,
}

/// True iff every vertex of `k` has at least d_G(v) − t(v) + 1 neighbors
/// inside `k`. Errors on an empty set: resistant subgraphs are nonempty.
pub fn is_resistant(g: &Graph, t: &ThresholdAssignment, k: &VertexSet) -> Result<bool> {
    t.check_graph(g)?;
    k.check_graph(g)?;
    if k.is_empty() {
        return Err(Error::EmptySubset);
    }
    let mask = k.mask();
    Ok(k.iter().all(|v| {
        let inside = g.neighbors(v).iter().filter(|&&u| mask[u]).count();
        // d_K(v) ≥ d_G(v) − t(v) + 1, avoiding underflow
        inside + t.get(v) > g.degree(v)
    }))
}

enum PeelOrder {
    Ascending,
    Seeded(u64),
}

fn peel_impl(g: &Graph, t: &ThresholdAssignment, s: &VertexSet, order: PeelOrder) -> PeelingResult {
    let n = g.n();
    let mut avail = s.mask();
    let mut deg = vec![0usize; n];
    for v in s.iter() {
        deg[v] = g.neighbors(v).iter().filter(|&&u| avail[u]).count();
    }
    // once removable, always removable: internal degrees only decrease
    let peelable = |v: usize, deg: &[usize]| deg[v] + t.get(v) <= g.degree(v);

    let mut elimination_order = Vec::new();
    let mut slack = Vec::new();
    let mut remove = |v: usize,
                      avail: &mut Vec<bool>,
                      deg: &mut Vec<usize>,
                      exposed: &mut Vec<usize>| {
        avail[v] = false;
        elimination_order.push(v);
        slack.push(deg[v]);
        for &u in g.neighbors(v) {
            if avail[u] {
                let was = peelable(u, deg);
                deg[u] -= 1;
                if !was && peelable(u, deg) {
                    exposed.push(u);
                }
            }
        }
    };

    match order {
        PeelOrder::Ascending => {
            let mut queue: BTreeSet<usize> =
                s.iter().filter(|&v| peelable(v, &deg)).collect();
            while let Some(v) = queue.pop_first() {
                let mut exposed = Vec::new();
                remove(v, &mut avail, &mut deg, &mut exposed);
                queue.extend(exposed);
            }
        }
        PeelOrder::Seeded(seed) => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut queue: Vec<usize> = s.iter().filter(|&v| peelable(v, &deg)).collect();
            let mut queued = vec![false; n];
            for &v in &queue {
                queued[v] = true;
            }
            while !queue.is_empty() {
                let i = rng.gen_range(0..queue.len());
                let v = queue.swap_remove(i);
                let mut exposed = Vec::new();
                remove(v, &mut avail, &mut deg, &mut exposed);
                for u in exposed {
                    if !queued[u] {
                        queued[u] = true;
                        queue.push(u);
                    }
                }
            }
        }
    }

    PeelingResult {
        residual: VertexSet::from_mask(&avail),
        elimination_order,
        slack,
    }
}

/// Peels `s`, removing vertices in ascending id among those currently
/// removable. The residual is order-independent; the elimination order is
/// this implementation's deterministic certificate.
pub fn peel(g: &Graph, t: &ThresholdAssignment, s: &VertexSet) -> Result<PeelingResult> {
    t.check_graph(g)?;
    s.check_graph(g)?;
    Ok(peel_impl(g, t, s, PeelOrder::Ascending))
}

/// Peeling with a seeded random removal order; the residual must equal the
/// ascending order's (confluence).
pub fn peel_randomized(
    g: &Graph,
    t: &ThresholdAssignment,
    s: &VertexSet,
    seed: u64,
) -> Result<PeelingResult> {
    t.check_graph(g)?;
    s.check_graph(g)?;
    Ok(peel_impl(g, t, s, PeelOrder::Seeded(seed)))
}

/// The unique maximal resistant subgraph of (g, t), possibly empty.
pub fn maximal_resistant(g: &Graph, t: &ThresholdAssignment) -> Result<VertexSet> {
    Ok(peel(g, t, &VertexSet::full(g.n()))?.residual)
}

/// Dynamo decision by peeling: `d` is a dynamo iff peeling V∖d empties it.
pub fn is_dynamo_via_peeling(g: &Graph, t: &ThresholdAssignment, d: &VertexSet) -> Result<bool> {
    Ok(peel(g, t, &d.complement())?.residual.is_empty())
}

/// Reusable scratch state for deciding many seed candidates on one
/// (graph, thresholds) instance; used by the exact solver and Monte-Carlo
/// loops where allocating per candidate would dominate.
pub struct DynamoDecider<'a> {
    g: &'a Graph,
    t: Vec<usize>,
    avail: Vec<bool>,
    deg: Vec<usize>,
    stack: Vec<usize>,
}

impl<'a> DynamoDecider<'a> {
    pub fn new(g: &'a Graph, t: &ThresholdAssignment) -> Result<DynamoDecider<'a>> {
        t.check_graph(g)?;
        Ok(DynamoDecider {
            g,
            t: t.values().to_vec(),
            avail: vec![false; g.n()],
            deg: vec![0; g.n()],
            stack: Vec::with_capacity(g.n()),
        })
    }

    /// Replaces the thresholds; the graph stays fixed.
    pub fn set_thresholds(&mut self, t: &ThresholdAssignment) -> Result<()> {
        t.check_graph(self.g)?;
        self.t.copy_from_slice(t.values());
        Ok(())
    }

    /// True iff the given seed (strictly increasing ids) is a dynamo.
    pub fn seed_is_dynamo(&mut self, seed: &[usize]) -> bool {
        let g = self.g;
        let n = g.n();
        self.avail.fill(true);
        for &v in seed {
            self.avail[v] = false;
        }
        let mut remaining = n - seed.len();
        for v in 0..n {
            if self.avail[v] {
                self.deg[v] = g.neighbors(v).iter().filter(|&&u| self.avail[u]).count();
            }
        }
        self.stack.clear();
        for v in 0..n {
            if self.avail[v] && self.deg[v] + self.t[v] <= g.degree(v) {
                self.stack.push(v);
            }
        }
        while let Some(v) = self.stack.pop() {
            if !self.avail[v] {
                continue;
            }
            self.avail[v] = false;
            remaining -= 1;
            for &u in g.neighbors(v) {
                if self.avail[u] {
                    self.deg[u] -= 1;
                    if self.deg[u] + self.t[u] == g.degree(u) {
                        self.stack.push(u);
                    }
                }
            }
        }
        remaining == 0
    }
}
