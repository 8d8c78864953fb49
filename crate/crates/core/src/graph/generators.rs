//! Graph family generators.

use num_integer::Integer;

use super::Graph;
use crate::error::{Error, Result};

/// Path on `n` vertices.
pub fn path(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    Graph::from_edges(n, &edges).unwrap()
}

/// Cycle C_n, n ≥ 3.
pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!(
            "cycle needs n >= 3, got {n}"
        )));
    }
    let edges: Vec<_> = (0..n).map(|v| (v.min((v + 1) % n), v.max((v + 1) % n))).collect();
    Graph::from_edges(n, &edges)
}

/// Complete graph K_n.
pub fn complete(n: usize) -> Graph {
    let mut edges = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for u in 0..n {
        for v in (u + 1)..n {
            edges.push((u, v));
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// Complete bipartite graph K_{a,b}: part A = 0..a, part B = a..a+b.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let mut edges = Vec::with_capacity(a * b);
    for u in 0..a {
        for v in a..(a + b) {
            edges.push((u, v));
        }
    }
    Graph::from_edges(a + b, &edges).unwrap()
}

/// Generalized Petersen graph GP(n,k): outer vertices a_i = 0..n on a cycle,
/// inner vertices b_i = n..2n, spokes a_i b_i, inner edges b_i b_{i+k mod n}.
/// Requires n ≥ 3, 1 ≤ k ≤ n−2 and gcd(n,k) = 1; the graph is cubic on 2n
/// vertices.
pub fn gp(n: usize, k: usize) -> Result<Graph> {
    if n < 3 || k == 0 || k > n - 2 {
        return Err(Error::InvalidParameter(format!(
            "gp requires n >= 3 and 1 <= k <= n-2, got n={n} k={k}"
        )));
    }
    if n.gcd(&k) != 1 {
        return Err(Error::InvalidParameter(format!(
            "gp requires gcd(n,k) = 1, got gcd({n},{k}) = {}",
            n.gcd(&k)
        )));
    }
    let mut edges = Vec::with_capacity(3 * n);
    for i in 0..n {
        let j = (i + 1) % n;
        edges.push((i.min(j), i.max(j))); // outer cycle
        edges.push((i, n + i)); // spoke
        let (bi, bj) = (n + i, n + (i + k) % n);
        edges.push((bi.min(bj), bi.max(bj))); // inner step
    }
    Graph::from_edges(2 * n, &edges)
}

/// n×n rook's graph: vertices are cells (i,j) with id i·n + j, adjacent iff
/// they share a row or a column. Equals the line graph of K_{n,n} under
/// edge(row i, col j) ↦ cell (i,j).
pub fn rook(n: usize) -> Result<Graph> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!(
            "rook needs n >= 2, got {n}"
        )));
    }
    let id = |i: usize, j: usize| i * n + j;
    let mut edges = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for j2 in (j + 1)..n {
                edges.push((id(i, j), id(i, j2))); // same row
            }
            for i2 in (i + 1)..n {
                edges.push((id(i, j), id(i2, j))); // same column
            }
        }
    }
    Graph::from_edges(n * n, &edges)
}

/// Cycle of q independent r-sets with complete bipartite joins between
/// consecutive sets: 2r-regular on rq vertices with qr² edges. Set i
/// occupies ids i·r..(i+1)·r. Requires q ≥ 3 (q = 2 would duplicate the
/// join) and r ≥ 1.
pub fn blowup_cycle(r: usize, q: usize) -> Result<Graph> {
    if q < 3 || r < 1 {
        return Err(Error::InvalidParameter(format!(
            "blowup_cycle requires q >= 3 and r >= 1, got r={r} q={q}"
        )));
    }
    let mut edges = Vec::with_capacity(q * r * r);
    for i in 0..q {
        let j = (i + 1) % q;
        for x in 0..r {
            for y in 0..r {
                let (u, v) = (i * r + x, j * r + y);
                edges.push((u.min(v), u.max(v)));
            }
        }
    }
    Graph::from_edges(q * r, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn petersen() {
        let g = gp(5, 2).unwrap();
        assert_eq!(g.n(), 10);
        assert_eq!(g.m(), 15);
        assert_eq!(g.regular_degree(), Some(3));
    }

    #[test]
    fn gp_is_cubic_with_3n_edges() {
        for n in 3..20 {
            for k in 1..=(n - 2) {
                if num_integer::gcd(n, k) != 1 {
                    continue;
                }
                let g = gp(n, k).unwrap();
                assert_eq!(g.m(), 3 * n, "gp({n},{k})");
                assert_eq!(g.regular_degree(), Some(3), "gp({n},{k})");
                assert!(g.is_connected(), "gp({n},{k})");
            }
        }
    }

    #[test]
    fn gp_rejects_bad_parameters() {
        assert!(gp(6, 2).is_err()); // gcd 2
        assert!(gp(5, 4).is_err()); // k > n-2
        assert!(gp(5, 0).is_err());
        assert!(gp(2, 1).is_err());
    }

    #[test]
    fn rook_counts() {
        let g = rook(3).unwrap();
        assert_eq!(g.n(), 9);
        assert_eq!(g.m(), 18);
        assert_eq!(g.regular_degree(), Some(4));
        assert!(rook(1).is_err());
    }

    #[test]
    fn blowup_counts() {
        let g = blowup_cycle(2, 3).unwrap();
        assert_eq!(g.n(), 6);
        assert_eq!(g.m(), 12);
        assert_eq!(g.regular_degree(), Some(4));
        assert!(blowup_cycle(2, 2).is_err());
        assert!(blowup_cycle(0, 3).is_err());

        for r in 1..=5 {
            for q in 3..=8 {
                let g = blowup_cycle(r, q).unwrap();
                assert_eq!(g.regular_degree(), Some(2 * r), "blowup({r},{q})");
                assert_eq!(g.m(), q * r * r);
            }
        }
    }

    #[test]
    fn small_families() {
        assert_eq!(cycle(4).unwrap().m(), 4);
        assert!(cycle(2).is_err());
        assert_eq!(complete(4).m(), 6);
        assert_eq!(complete_bipartite(3, 3).m(), 9);
        assert_eq!(path(3).m(), 2);
    }
}
