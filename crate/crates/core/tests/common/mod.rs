//! Shared helpers for the integration suites: seeded random instances and
//! small brute-force oracles kept independent of the library's algorithms.

use dynamo_core::graph::Graph;
use dynamo_core::{ThresholdAssignment, VertexSet};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn random_graph(rng: &mut ChaCha8Rng, max_n: usize) -> Graph {
    let n = rng.gen_range(1..=max_n);
    let p = rng.gen_range(0.05..0.35);
    Graph::gnp(n, p, rng)
}

/// Random thresholds t(v) ∈ [1, d(v)+1].
pub fn random_thresholds(rng: &mut ChaCha8Rng, g: &Graph) -> ThresholdAssignment {
    ThresholdAssignment::from_vec(
        (0..g.n())
            .map(|v| rng.gen_range(1..=g.degree(v) + 1))
            .collect(),
    )
    .unwrap()
}

pub fn random_seed(rng: &mut ChaCha8Rng, n: usize, p: f64) -> VertexSet {
    VertexSet::new(n, (0..n).filter(|_| rng.gen_bool(p))).unwrap()
}

/// Random connected graph with minimum degree 2 and no odd-cycle
/// component: a Hamiltonian cycle on shuffled labels plus random chords
/// (at least one chord when n is odd, so the lone component is never an
/// odd cycle).
pub fn random_connected_delta2(rng: &mut ChaCha8Rng, max_n: usize) -> Graph {
    let n = rng.gen_range(4..=max_n.max(4));
    let mut labels: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        let j = rng.gen_range(0..=i);
        labels.swap(i, j);
    }
    let mut edges: Vec<(usize, usize)> = (0..n)
        .map(|i| {
            let (u, v) = (labels[i], labels[(i + 1) % n]);
            (u.min(v), u.max(v))
        })
        .collect();
    let extra = if n % 2 == 1 {
        rng.gen_range(1..=n)
    } else {
        rng.gen_range(0..=n)
    };
    let mut attempts = 0;
    let mut added = 0;
    while added < extra && attempts < 20 * n {
        attempts += 1;
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        let e = (u.min(v), u.max(v));
        if u != v && !edges.contains(&e) {
            edges.push(e);
            added += 1;
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// Uniform random attachment tree on n vertices.
pub fn random_tree(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    let edges: Vec<(usize, usize)> = (1..n).map(|v| (rng.gen_range(0..v), v)).collect();
    Graph::from_edges(n, &edges).unwrap()
}

/// Grows a random subset into a verified dynamo by repeatedly seeding one
/// vertex of the peeling residual.
pub fn random_dynamo(rng: &mut ChaCha8Rng, g: &Graph, t: &ThresholdAssignment) -> VertexSet {
    let p = rng.gen_range(0.05..0.4);
    let mut d = random_seed(rng, g.n(), p);
    loop {
        let residual = dynamo_core::resistant::peel(g, t, &d.complement())
            .unwrap()
            .residual;
        match residual.as_slice().first() {
            None => break,
            Some(&v) => d.insert(v),
        }
    }
    assert!(dynamo_core::propagation::is_dynamo(g, t, &d).unwrap());
    d
}

/// Brute-force minimum dominating set size by enumerating subsets in
/// increasing size; independent of the tree DP it checks.
pub fn brute_force_min_dominating(g: &Graph) -> usize {
    let n = g.n();
    fn dominated(g: &Graph, mask: &[bool]) -> bool {
        (0..g.n()).all(|v| mask[v] || g.neighbors(v).iter().any(|&u| mask[u]))
    }
    for size in 0..=n {
        let mut chosen = vec![0usize; size];
        if try_subsets(g, &mut chosen, 0, 0, size, &dominated) {
            return size;
        }
    }
    unreachable!("the full vertex set dominates");
}

fn try_subsets(
    g: &Graph,
    chosen: &mut Vec<usize>,
    depth: usize,
    start: usize,
    size: usize,
    check: &dyn Fn(&Graph, &[bool]) -> bool,
) -> bool {
    if depth == size {
        let mut mask = vec![false; g.n()];
        for &v in chosen.iter() {
            mask[v] = true;
        }
        return check(g, &mask);
    }
    for v in start..g.n() {
        chosen[depth] = v;
        if try_subsets(g, chosen, depth + 1, v + 1, size, check) {
            return true;
        }
    }
    false
}
