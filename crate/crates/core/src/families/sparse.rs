//! The blow-up used to show that a non-forest core on the left side of a
//! finite duality is dominated by another member.
//!
//! Cut the cycle edge `(x, y)` of `A`, re-attach it to a fresh tail `x'`,
//! and glue one copy of the result onto every edge `(u, v)` of a tournament
//! `X`, identifying the copy of `x` with `u` and the copy of `x'` with `v`.

use crate::digraph::{DiGraph, GraphBuilder, Vertex, VertexMap};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseWitness {
    pub graph: DiGraph,
    /// Folds every copy back onto `A`: tournament vertices go to `x`.
    pub to_source: VertexMap,
}

/// Whether the edge lies on a cycle of the underlying undirected multigraph
/// (loops and 2-cycles count).
pub fn on_cycle(a: &DiGraph, (x, y): (Vertex, Vertex)) -> bool {
    if x == y {
        return true;
    }
    let rest = DiGraph::new(a.n(), a.edges().iter().copied().filter(|&e| e != (x, y))).expect("in range");
    rest.connected_components().iter().any(|c| c.contains(&x) && c.contains(&y))
}

/// `X` should have an edge between every pair of vertices; it is not checked.
pub fn sparse_witness_y(a: &DiGraph, edge: (Vertex, Vertex), tournament: &DiGraph) -> Result<SparseWitness> {
    let (x, y) = edge;
    if !a.has_edge(x, y) {
        return Err(Error::NotAnEdge(x, y));
    }
    if !on_cycle(a, edge) {
        return Err(Error::NotOnCycle(x, y));
    }
    let mut b = GraphBuilder::with_vertices(tournament.n());
    let mut to_source = vec![x; tournament.n()];
    for &(u, v) in tournament.edges() {
        // Copy of A' glued at x = u, x' = v.
        let copy: Vec<Vertex> = (0..a.n())
            .map(|z| {
                if z == x {
                    u
                } else {
                    to_source.push(z);
                    b.add_vertex()
                }
            })
            .collect();
        for &(p, q) in a.edges() {
            if (p, q) != (x, y) {
                b.add_edge(copy[p], copy[q]);
            }
        }
        b.add_edge(v, copy[y]);
    }
    Ok(SparseWitness { graph: b.build(), to_source: VertexMap::new(to_source) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::{is_homomorphism, is_isomorphic, maps_to};
    use crate::families::named::transitive_tournament;

    fn c3() -> DiGraph {
        DiGraph::from_edges(3, &[(0, 1), (1, 2), (2, 0)])
    }

    #[test]
    fn directed_triangle() {
        let x = transitive_tournament(3);
        let w = sparse_witness_y(&c3(), (0, 1), &x).unwrap();
        assert!(is_homomorphism(&w.graph, &c3(), &w.to_source).unwrap());
        assert!(maps_to(&w.graph, &c3()));
        assert!(!maps_to(&c3(), &w.graph));
        // 3 tournament vertices, 3 edges each bringing 2 new vertices.
        assert_eq!(w.graph.n(), 3 + 3 * 2);
    }

    #[test]
    fn loop_becomes_reversed_tournament() {
        let x = transitive_tournament(4);
        let w = sparse_witness_y(&DiGraph::loop_vertex(), (0, 0), &x).unwrap();
        assert!(is_isomorphic(&w.graph, &x.reversed()));
        assert!(!maps_to(&DiGraph::loop_vertex(), &w.graph));
        assert!(is_homomorphism(&w.graph, &DiGraph::loop_vertex(), &w.to_source).unwrap());
    }

    #[test]
    fn rejects_bridges_and_non_edges() {
        let path = DiGraph::from_edges(3, &[(0, 1), (1, 2)]);
        let x = transitive_tournament(3);
        assert_eq!(sparse_witness_y(&path, (0, 1), &x), Err(Error::NotOnCycle(0, 1)));
        assert_eq!(sparse_witness_y(&path, (1, 0), &x), Err(Error::NotAnEdge(1, 0)));
        let two_cycle = DiGraph::from_edges(2, &[(0, 1), (1, 0)]);
        assert!(on_cycle(&two_cycle, (0, 1)));
    }
}
