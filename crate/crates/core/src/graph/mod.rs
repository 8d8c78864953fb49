//! Undirected simple graphs: representation, vertex sets, threshold
//! assignments, family generators and text I/O.

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::Rational;

pub mod generators;
pub mod io;
mod line;

pub use line::{line_graph, EdgeLabeledGraph};

/// Undirected simple graph on vertices `0..n`, stored as sorted adjacency
/// lists. Immutable after construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    m: usize,
}

impl Graph {
    /// Graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Graph {
        Graph {
            adj: vec![Vec::new(); n],
            m: 0,
        }
    }

    /// Builds a graph from an explicit edge list. Rejects self-loops,
    /// duplicate edges and out-of-range endpoints; edge order and endpoint
    /// order do not matter.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n {
                return Err(Error::VertexOutOfRange { v: u, n });
            }
            if v >= n {
                return Err(Error::VertexOutOfRange { v, n });
            }
            if u == v {
                return Err(Error::SelfLoop { v });
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in adj.iter_mut() {
            list.sort_unstable();
            if list.windows(2).any(|w| w[0] == w[1]) {
                let u = adj
                    .iter()
                    .position(|l| l.windows(2).any(|w| w[0] == w[1]))
                    .unwrap();
                let dup = adj[u].windows(2).find(|w| w[0] == w[1]).unwrap()[0];
                return Err(Error::DuplicateEdge {
                    u: u.min(dup),
                    v: u.max(dup),
                });
            }
        }
        Ok(Graph {
            adj,
            m: edges.len(),
        })
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && v < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// All edges as (u, v) pairs with u < v, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n()).flat_map(move |u| {
            self.adj[u]
                .iter()
                .copied()
                .filter(move |&v| u < v)
                .map(move |v| (u, v))
        })
    }

    /// Minimum degree δ(G); 0 for the empty graph.
    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Edge density ε(G) = |E| / |V| as an exact rational.
    ///
    /// Panics on the vertexless graph.
    pub fn edge_density(&self) -> Rational {
        assert!(self.n() > 0, "edge density needs at least one vertex");
        Rational::new(self.m as i64, self.n() as i64)
    }

    /// The common degree if the graph is regular.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.adj.first()?.len();
        self.adj.iter().all(|l| l.len() == d).then_some(d)
    }

    /// Connected components, each sorted ascending; components ordered by
    /// their smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n()];
        let mut out = Vec::new();
        for start in 0..self.n() {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut head = 0;
            while head < comp.len() {
                let v = comp[head];
                head += 1;
                for &u in &self.adj[v] {
                    if !seen[u] {
                        seen[u] = true;
                        comp.push(u);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Subgraph induced on `s`, together with the mapping from new vertex
    /// ids back to the original ids (`mapping[new] = old`).
    pub fn induced(&self, s: &VertexSet) -> Result<(Graph, Vec<usize>)> {
        s.check_graph(self)?;
        let mapping: Vec<usize> = s.iter().collect();
        let mut back = vec![usize::MAX; self.n()];
        for (new, &old) in mapping.iter().enumerate() {
            back[old] = new;
        }
        let mut edges = Vec::new();
        for (new, &old) in mapping.iter().enumerate() {
            for &w in &self.adj[old] {
                if back[w] != usize::MAX && back[w] > new {
                    edges.push((new, back[w]));
                }
            }
        }
        let g = Graph::from_edges(mapping.len(), &edges)?;
        Ok((g, mapping))
    }

    /// Erdős–Rényi style random graph: each pair independently an edge with
    /// probability `p`.
    pub fn gnp(n: usize, p: f64, rng: &mut impl rand::Rng) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in (u + 1)..n {
                if rng.gen_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        Graph::from_edges(n, &edges).expect("gnp edges are valid by construction")
    }
}

/// Subset of the vertices of an associated graph; stored sorted and deduped.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexSet {
    n: usize,
    members: Vec<usize>,
}

impl VertexSet {
    /// Vertex subset of a graph on `n` vertices. Duplicates are merged,
    /// out-of-range ids rejected.
    pub fn new(n: usize, members: impl IntoIterator<Item = usize>) -> Result<VertexSet> {
        let mut members: Vec<usize> = members.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        if let Some(&v) = members.last() {
            if v >= n {
                return Err(Error::VertexOutOfRange { v, n });
            }
        }
        Ok(VertexSet { n, members })
    }

    pub fn empty(n: usize) -> VertexSet {
        VertexSet {
            n,
            members: Vec::new(),
        }
    }

    /// The full vertex set `0..n`.
    pub fn full(n: usize) -> VertexSet {
        VertexSet {
            n,
            members: (0..n).collect(),
        }
    }

    /// Builds from a membership mask.
    pub fn from_mask(mask: &[bool]) -> VertexSet {
        VertexSet {
            n: mask.len(),
            members: mask
                .iter()
                .enumerate()
                .filter_map(|(v, &b)| b.then_some(v))
                .collect(),
        }
    }

    /// Number of vertices of the associated graph.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.members.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.members
    }

    pub fn mask(&self) -> Vec<bool> {
        let mut mask = vec![false; self.n];
        for &v in &self.members {
            mask[v] = true;
        }
        mask
    }

    pub fn complement(&self) -> VertexSet {
        let mask = self.mask();
        VertexSet {
            n: self.n,
            members: (0..self.n).filter(|&v| !mask[v]).collect(),
        }
    }

    /// Union with another set over the same graph.
    pub fn union(&self, other: &VertexSet) -> VertexSet {
        assert_eq!(self.n, other.n, "sets over different graphs");
        let mut members = self.members.clone();
        members.extend(other.iter());
        members.sort_unstable();
        members.dedup();
        VertexSet {
            n: self.n,
            members,
        }
    }

    pub fn insert(&mut self, v: usize) {
        assert!(v < self.n, "vertex out of range");
        if let Err(pos) = self.members.binary_search(&v) {
            self.members.insert(pos, v);
        }
    }

    pub fn is_subset_of(&self, other: &VertexSet) -> bool {
        self.n == other.n && self.iter().all(|v| other.contains(v))
    }

    pub(crate) fn check_graph(&self, g: &Graph) -> Result<()> {
        if self.n != g.n() {
            return Err(Error::SetGraphMismatch {
                set_n: self.n,
                graph_n: g.n(),
            });
        }
        Ok(())
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.members.len()))?;
        for v in &self.members {
            seq.serialize_element(v)?;
        }
        seq.end()
    }
}

/// Per-vertex activation thresholds t(v) ≥ 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThresholdAssignment {
    t: Vec<usize>,
}

impl ThresholdAssignment {
    pub fn from_vec(t: Vec<usize>) -> Result<ThresholdAssignment> {
        if let Some(v) = t.iter().position(|&x| x == 0) {
            return Err(Error::NonPositiveThreshold { v });
        }
        Ok(ThresholdAssignment { t })
    }

    /// Uniform threshold `t` on `n` vertices.
    pub fn constant(n: usize, t: usize) -> Result<ThresholdAssignment> {
        ThresholdAssignment::from_vec(vec![t; n])
    }

    /// Strict-majority thresholds t(v) = ⌊d(v)/2⌋ + 1.
    pub fn majority(g: &Graph) -> ThresholdAssignment {
        ThresholdAssignment {
            t: (0..g.n()).map(|v| g.degree(v) / 2 + 1).collect(),
        }
    }

    pub fn get(&self, v: usize) -> usize {
        self.t[v]
    }

    pub fn len(&self) -> usize {
        self.t.len()
    }

    pub fn is_empty(&self) -> bool {
        self.t.is_empty()
    }

    pub fn values(&self) -> &[usize] {
        &self.t
    }

    /// Smallest threshold; panics on an empty assignment.
    pub fn t_min(&self) -> usize {
        *self.t.iter().min().expect("nonempty assignment")
    }

    /// Largest threshold; panics on an empty assignment.
    pub fn t_max(&self) -> usize {
        *self.t.iter().max().expect("nonempty assignment")
    }

    pub(crate) fn check_graph(&self, g: &Graph) -> Result<()> {
        if self.t.len() != g.n() {
            return Err(Error::SizeMismatch {
                expected: g.n(),
                got: self.t.len(),
            });
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.m(), 3);
        assert_eq!(g.min_degree(), 2);
        assert_eq!(g.edge_density(), Rational::new(1, 1));
        assert!(g.has_edge(2, 0));
        assert!(!g.has_edge(0, 0));
    }

    #[test]
    fn rejects_self_loop() {
        assert!(matches!(
            Graph::from_edges(2, &[(0, 0)]),
            Err(Error::SelfLoop { v: 0 })
        ));
    }

    #[test]
    fn rejects_duplicate_edge() {
        assert!(matches!(
            Graph::from_edges(4, &[(0, 1), (0, 1)]),
            Err(Error::DuplicateEdge { u: 0, v: 1 })
        ));
        // endpoint order must not hide a duplicate
        assert!(Graph::from_edges(4, &[(0, 1), (1, 0)]).is_err());
    }

    #[test]
    fn rejects_out_of_range() {
        assert!(matches!(
            Graph::from_edges(3, &[(0, 3)]),
            Err(Error::VertexOutOfRange { v: 3, n: 3 })
        ));
    }

    #[test]
    fn handshake() {
        let g = generators::gp(7, 2).unwrap();
        let total: usize = (0..g.n()).map(|v| g.degree(v)).sum();
        assert_eq!(total, 2 * g.m());
    }

    #[test]
    fn induced_subgraphs() {
        let k4 = generators::complete(4);
        let (tri, map) = k4.induced(&VertexSet::new(4, [0, 1, 2]).unwrap()).unwrap();
        assert_eq!(tri.n(), 3);
        assert_eq!(tri.m(), 3);
        assert_eq!(map, vec![0, 1, 2]);

        let c5 = generators::cycle(5).unwrap();
        let (h, _) = c5.induced(&VertexSet::new(5, [0, 2]).unwrap()).unwrap();
        assert_eq!(h.n(), 2);
        assert_eq!(h.m(), 0);

        // outer rim of gp(5,2) is a 5-cycle
        let g = generators::gp(5, 2).unwrap();
        let (outer, map) = g.induced(&VertexSet::new(10, 0..5).unwrap()).unwrap();
        assert_eq!(outer.n(), 5);
        assert_eq!(outer.m(), 5);
        assert!(outer.regular_degree() == Some(2));
        assert!(outer.is_connected());
        assert_eq!(map, vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn vertex_set_basics() {
        let s = VertexSet::new(5, [3, 1, 3]).unwrap();
        assert_eq!(s.as_slice(), &[1, 3]);
        assert_eq!(s.complement().as_slice(), &[0, 2, 4]);
        assert!(VertexSet::new(3, [3]).is_err());
        let mut s = s;
        s.insert(0);
        assert_eq!(s.as_slice(), &[0, 1, 3]);
    }

    #[test]
    fn thresholds_validate() {
        assert!(ThresholdAssignment::constant(3, 0).is_err());
        let t = ThresholdAssignment::from_vec(vec![1, 2, 5]).unwrap();
        assert_eq!(t.t_min(), 1);
        assert_eq!(t.t_max(), 5);
        let g = generators::complete(4);
        let m = ThresholdAssignment::majority(&g);
        assert_eq!(m.values(), &[2, 2, 2, 2]);
    }

    #[test]
    fn components_and_connectivity() {
        let g = Graph::from_edges(5, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(g.components(), vec![vec![0, 1], vec![2, 3], vec![4]]);
        assert!(!g.is_connected());
        assert!(generators::gp(5, 2).unwrap().is_connected());
    }
}
