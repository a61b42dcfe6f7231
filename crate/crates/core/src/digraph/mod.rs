//! Finite directed graphs with loops, vertex maps, and the homomorphism engine.
//!
//! Vertices are the integers `0..n`. Edges are a set of ordered pairs, so a
//! graph never carries parallel edges; a pair `(u, u)` is a loop.

mod format;
mod hom;
mod iso;

pub use hom::{hom_exists, is_homomorphism, maps_to, HomSearch};
pub use iso::{find_isomorphism, is_isomorphic};

use crate::bitset::VertexSet;
use crate::error::{Error, Result};

pub type Vertex = usize;

/// A finite directed graph on vertices `0..n`.
///
/// Immutable once built. Keeps a sorted edge list alongside bitset adjacency
/// rows in both directions, which is what the solver works against.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DiGraph {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    out: Vec<VertexSet>,
    inc: Vec<VertexSet>,
}

impl DiGraph {
    /// The graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Self {
        DiGraph { n, edges: Vec::new(), out: vec![VertexSet::empty(n); n], inc: vec![VertexSet::empty(n); n] }
    }

    /// Builds a graph, collapsing duplicate edges.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (Vertex, Vertex)>) -> Result<Self> {
        let mut g = Self::empty(n);
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            g.out[u].insert(v);
            g.inc[v].insert(u);
        }
        g.edges = (0..n).flat_map(|u| g.out[u].iter().map(move |v| (u, v)).collect::<Vec<_>>()).collect();
        Ok(g)
    }

    /// Like [`DiGraph::new`] for edge lists known to be in range.
    ///
    /// Panics on an out-of-range endpoint.
    pub fn from_edges(n: usize, edges: &[(Vertex, Vertex)]) -> Self {
        Self::new(n, edges.iter().copied()).expect("edge endpoint out of range")
    }

    /// A single vertex carrying a loop.
    pub fn loop_vertex() -> Self {
        Self::from_edges(1, &[(0, 0)])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in lexicographic order.
    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n && self.out[u].contains(v)
    }

    pub fn has_loop(&self, v: Vertex) -> bool {
        self.has_edge(v, v)
    }

    pub fn successors(&self, u: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.out[u].iter()
    }

    pub fn predecessors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.inc[v].iter()
    }

    pub(crate) fn out_set(&self, u: Vertex) -> &VertexSet {
        &self.out[u]
    }

    pub(crate) fn in_set(&self, v: Vertex) -> &VertexSet {
        &self.inc[v]
    }

    pub fn out_degree(&self, u: Vertex) -> usize {
        self.out[u].len()
    }

    pub fn in_degree(&self, v: Vertex) -> usize {
        self.inc[v].len()
    }

    /// In-degree plus out-degree; a loop counts twice.
    pub fn total_degree(&self, v: Vertex) -> Result<usize> {
        if v >= self.n {
            return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
        }
        Ok(self.in_degree(v) + self.out_degree(v))
    }

    pub fn max_total_degree(&self) -> usize {
        (0..self.n).map(|v| self.in_degree(v) + self.out_degree(v)).max().unwrap_or(0)
    }

    /// Vertices without out-edges.
    pub fn sinks(&self) -> Vec<Vertex> {
        (0..self.n).filter(|&v| self.out[v].is_empty()).collect()
    }

    /// Components of the underlying undirected graph, each sorted, ordered by
    /// smallest member.
    pub fn connected_components(&self) -> Vec<Vec<Vertex>> {
        let mut comp = vec![usize::MAX; self.n];
        let mut components = Vec::new();
        for start in 0..self.n {
            if comp[start] != usize::MAX {
                continue;
            }
            let id = components.len();
            let mut members = vec![start];
            comp[start] = id;
            let mut i = 0;
            while i < members.len() {
                let u = members[i];
                i += 1;
                for w in self.out[u].iter().chain(self.inc[u].iter()) {
                    if comp[w] == usize::MAX {
                        comp[w] = id;
                        members.push(w);
                    }
                }
            }
            members.sort_unstable();
            components.push(members);
        }
        components
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    /// Vertices of `other` are shifted up by `self.n()`.
    pub fn disjoint_union(&self, other: &DiGraph) -> DiGraph {
        let shift = self.n;
        DiGraph::new(
            self.n + other.n,
            self.edges.iter().copied().chain(other.edges.iter().map(|&(u, v)| (u + shift, v + shift))),
        )
        .expect("union edges in range")
    }

    /// The subgraph induced on `keep`; vertex `keep[i]` becomes vertex `i`.
    pub fn induced_subgraph(&self, keep: &[Vertex]) -> DiGraph {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in keep.iter().enumerate() {
            index[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| index[u] != usize::MAX && index[v] != usize::MAX)
            .map(|&(u, v)| (index[u], index[v]));
        DiGraph::new(keep.len(), edges).expect("induced edges in range")
    }

    /// Same graph with every edge reversed.
    pub fn reversed(&self) -> DiGraph {
        DiGraph::new(self.n, self.edges.iter().map(|&(u, v)| (v, u))).expect("in range")
    }

    /// Row-major adjacency bits (bit `u * n + v`), for graphs with `n <= 8`.
    pub fn adjacency_code(&self) -> Option<u64> {
        if self.n > 8 {
            return None;
        }
        Some(self.edges.iter().fold(0u64, |acc, &(u, v)| acc | 1 << (u * self.n + v)))
    }

    /// Inverse of [`DiGraph::adjacency_code`].
    pub fn from_adjacency_code(n: usize, code: u64) -> DiGraph {
        assert!(n <= 8, "adjacency codes cover at most 8 vertices");
        let edges = (0..n * n).filter(|bit| code >> bit & 1 == 1).map(|bit| (bit / n, bit % n));
        DiGraph::new(n, edges).expect("in range")
    }
}

/// Incremental construction for generators that add vertices as they go.
#[derive(Debug, Default, Clone)]
pub struct GraphBuilder {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
}

impl GraphBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_vertices(n: usize) -> Self {
        GraphBuilder { n, edges: Vec::new() }
    }

    pub fn add_vertex(&mut self) -> Vertex {
        self.n += 1;
        self.n - 1
    }

    pub fn add_edge(&mut self, u: Vertex, v: Vertex) {
        debug_assert!(u < self.n && v < self.n);
        self.edges.push((u, v));
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn build(self) -> DiGraph {
        DiGraph::new(self.n, self.edges).expect("builder edges in range")
    }
}

/// A total map from the vertices of one graph into another, stored as the
/// image of each source vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VertexMap(Vec<Vertex>);

impl VertexMap {
    pub fn new(images: Vec<Vertex>) -> Self {
        VertexMap(images)
    }

    pub fn identity(n: usize) -> Self {
        VertexMap((0..n).collect())
    }

    pub fn constant(n: usize, v: Vertex) -> Self {
        VertexMap(vec![v; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn images(&self) -> &[Vertex] {
        &self.0
    }

    pub fn get(&self, v: Vertex) -> Vertex {
        self.0[v]
    }

    /// `other ∘ self`: first apply `self`, then `other`.
    pub fn then(&self, other: &VertexMap) -> VertexMap {
        VertexMap(self.0.iter().map(|&v| other.0[v]).collect())
    }

    /// Distinct image vertices in increasing order.
    pub fn image_set(&self) -> Vec<Vertex> {
        let mut img = self.0.clone();
        img.sort_unstable();
        img.dedup();
        img
    }

    pub fn is_injective(&self) -> bool {
        self.image_set().len() == self.0.len()
    }
}

impl From<Vec<Vertex>> for VertexMap {
    fn from(images: Vec<Vertex>) -> Self {
        VertexMap(images)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pathwords::Word;

    fn p(w: &str) -> DiGraph {
        w.parse::<Word>().unwrap().path()
    }

    #[test]
    fn duplicate_edges_collapse_and_loops_allowed() {
        let g = DiGraph::new(2, [(0, 1), (0, 1), (1, 1)]).unwrap();
        assert_eq!(g.edge_count(), 2);
        assert!(g.has_loop(1));
        assert!(!g.has_loop(0));
    }

    #[test]
    fn rejects_out_of_range_edge() {
        assert_eq!(DiGraph::new(2, [(0, 2)]), Err(Error::VertexOutOfRange { vertex: 2, n: 2 }));
    }

    #[test]
    fn empty_graph_is_legal() {
        let g = DiGraph::empty(0);
        assert_eq!(g.n(), 0);
        assert!(g.connected_components().is_empty());
        assert_eq!(g.max_total_degree(), 0);
    }

    #[test]
    fn components() {
        assert_eq!(p("+").connected_components().len(), 1);
        assert_eq!(p("+").disjoint_union(&p("+")).connected_components(), vec![vec![0, 1], vec![2, 3]]);
    }

    #[test]
    fn union_shapes() {
        let g = p("+-");
        assert_eq!(DiGraph::empty(0).disjoint_union(&g), g);
        let u = p("+").disjoint_union(&p("+"));
        assert_eq!((u.n(), u.edge_count()), (4, 2));
    }

    #[test]
    fn total_degree_counts() {
        assert_eq!(DiGraph::empty(1).total_degree(0), Ok(0));
        assert_eq!(p("++").total_degree(1), Ok(2));
        assert_eq!(DiGraph::loop_vertex().total_degree(0), Ok(2));
        assert!(matches!(p("+").total_degree(2), Err(Error::VertexOutOfRange { .. })));
    }

    #[test]
    fn induced_subgraph_renumbers() {
        let g = DiGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        let h = g.induced_subgraph(&[3, 0, 1]);
        assert_eq!(h.edges(), &[(0, 1), (1, 2)]);
    }

    #[test]
    fn adjacency_code_roundtrip() {
        let g = DiGraph::from_edges(3, &[(0, 1), (2, 2), (1, 0)]);
        let code = g.adjacency_code().unwrap();
        assert_eq!(DiGraph::from_adjacency_code(3, code), g);
    }

    #[test]
    fn sinks() {
        assert_eq!(p("+-").sinks(), vec![1]);
        assert_eq!(DiGraph::empty(2).sinks(), vec![0, 1]);
    }
}
