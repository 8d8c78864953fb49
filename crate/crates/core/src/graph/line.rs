//! Line graphs with edge labels back into the source graph.

use super::Graph;
use crate::error::{Error, Result};

/// Line graph L(G) together with, for each of its vertices, the original
/// edge {u,v} of the source graph. Vertex `i` of L(G) is the i-th edge of G
/// in lexicographic order; two vertices are adjacent iff their label edges
/// share an endpoint, so the degree of the vertex labeled {u,v} is
/// d_G(u) + d_G(v) − 2.
#[derive(Debug, Clone)]
pub struct EdgeLabeledGraph {
    pub graph: Graph,
    pub labels: Vec<(usize, usize)>,
}

impl EdgeLabeledGraph {
    pub fn label(&self, v: usize) -> (usize, usize) {
        self.labels[v]
    }
}

/// Builds the line graph of `g`; errors on an edgeless graph.
pub fn line_graph(g: &Graph) -> Result<EdgeLabeledGraph> {
    if g.m() == 0 {
        return Err(Error::InvalidParameter(
            "line graph of an edgeless graph".into(),
        ));
    }
    let labels: Vec<(usize, usize)> = g.edges().collect();
    let mut index = std::collections::HashMap::new();
    for (i, &e) in labels.iter().enumerate() {
        index.insert(e, i);
    }
    // edges incident to a common vertex form a clique; distinct edges share
    // at most one endpoint, so every line-graph edge is generated once
    let mut edges = Vec::new();
    for v in 0..g.n() {
        let inc: Vec<usize> = g
            .neighbors(v)
            .iter()
            .map(|&u| index[&(v.min(u), v.max(u))])
            .collect();
        for i in 0..inc.len() {
            for j in (i + 1)..inc.len() {
                edges.push((inc[i].min(inc[j]), inc[i].max(inc[j])));
            }
        }
    }
    let graph = Graph::from_edges(labels.len(), &edges)?;
    Ok(EdgeLabeledGraph { graph, labels })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generators;

    #[test]
    fn path_line_is_single_edge() {
        let p3 = generators::path(3);
        let l = line_graph(&p3).unwrap();
        assert_eq!(l.graph.n(), 2);
        assert_eq!(l.graph.m(), 1);
        assert_eq!(l.labels, vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn k4_line_is_octahedron() {
        let l = line_graph(&generators::complete(4)).unwrap();
        assert_eq!(l.graph.n(), 6);
        assert_eq!(l.graph.m(), 12);
        assert_eq!(l.graph.regular_degree(), Some(4));
    }

    #[test]
    fn rejects_edgeless() {
        assert!(line_graph(&Graph::empty(3)).is_err());
    }

    #[test]
    fn degree_identity() {
        let mut rng = <rand_chacha::ChaCha8Rng as rand::SeedableRng>::seed_from_u64(11);
        for _ in 0..20 {
            let n = rand::Rng::gen_range(&mut rng, 2..=50);
            let g = Graph::gnp(n, 0.2, &mut rng);
            if g.m() == 0 {
                continue;
            }
            let l = line_graph(&g).unwrap();
            for (i, &(u, v)) in l.labels.iter().enumerate() {
                assert_eq!(l.graph.degree(i), g.degree(u) + g.degree(v) - 2);
            }
        }
    }

    #[test]
    fn rook_equals_line_of_complete_bipartite() {
        for n in 2..=6 {
            let rook = generators::rook(n).unwrap();
            let l = line_graph(&generators::complete_bipartite(n, n)).unwrap();
            // edge (row i, col n+j) of K_{n,n} maps to cell (i,j) = i*n + j
            let relabel: Vec<usize> = l.labels.iter().map(|&(u, v)| u * n + (v - n)).collect();
            let mut edges: Vec<(usize, usize)> = l
                .graph
                .edges()
                .map(|(a, b)| {
                    let (x, y) = (relabel[a], relabel[b]);
                    (x.min(y), x.max(y))
                })
                .collect();
            edges.sort_unstable();
            let rook_edges: Vec<(usize, usize)> = rook.edges().collect();
            assert_eq!(edges, rook_edges, "n={n}");
        }
    }
}
