//! Cores, homomorphic equivalence, and antichains.

use crate::digraph::{maps_to, DiGraph, HomSearch, VertexMap};

/// An endomorphism of `g` whose image misses at least one vertex.
pub fn non_surjective_endomorphism(g: &DiGraph) -> Option<VertexMap> {
    (0..g.n()).find_map(|w| HomSearch::new(g, g).avoid(w).find())
}

/// True iff every endomorphism of `g` is a bijection.
pub fn is_core(g: &DiGraph) -> bool {
    non_surjective_endomorphism(g).is_none()
}

/// Retracts onto the image of a non-surjective endomorphism until none is
/// left. The result is the core of `g` up to isomorphism.
pub fn core_of(g: &DiGraph) -> DiGraph {
    core_with_retraction(g).0
}

/// The core together with a homomorphism `g -> core`.
pub fn core_with_retraction(g: &DiGraph) -> (DiGraph, VertexMap) {
    let mut current = g.clone();
    let mut to_current = VertexMap::identity(g.n());
    while let Some(f) = non_surjective_endomorphism(&current) {
        let image = f.image_set();
        let mut position = vec![usize::MAX; current.n()];
        for (i, &v) in image.iter().enumerate() {
            position[v] = i;
        }
        let onto = VertexMap::new(f.images().iter().map(|&v| position[v]).collect());
        to_current = to_current.then(&onto);
        current = current.induced_subgraph(&image);
    }
    (current, to_current)
}

/// Homomorphisms exist in both directions.
pub fn equivalent(g: &DiGraph, h: &DiGraph) -> bool {
    maps_to(g, h) && maps_to(h, g)
}

/// First ordered pair `(i, j)`, `i != j`, with `graphs[i] -> graphs[j]`.
pub fn antichain_violation(graphs: &[DiGraph]) -> Option<(usize, usize)> {
    (0..graphs.len())
        .flat_map(|i| (0..graphs.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| i != j)
        .find(|&(i, j)| maps_to(&graphs[i], &graphs[j]))
}

pub fn is_antichain(graphs: &[DiGraph]) -> bool {
    antichain_violation(graphs).is_none()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::{is_homomorphism, is_isomorphic};
    use crate::pathwords::word;

    fn p(w: &str) -> DiGraph {
        word(w).path()
    }

    #[test]
    fn small_cores() {
        assert!(is_core(&DiGraph::empty(1)));
        assert!(is_core(&DiGraph::empty(0)));
        assert!(!is_core(&DiGraph::empty(2)));
        assert!(!is_core(&p("+-")));
        assert!(is_core(&p("++")));
    }

    #[test]
    fn core_of_folded_path() {
        assert!(is_isomorphic(&core_of(&p("+-")), &p("+")));
    }

    #[test]
    fn core_of_union_drops_smaller_component() {
        let u = p("+").disjoint_union(&p("++"));
        assert!(is_isomorphic(&core_of(&u), &p("++")));
    }

    #[test]
    fn core_is_idempotent() {
        let c = p("+++-+++");
        assert!(is_core(&c));
        assert!(is_isomorphic(&core_of(&c), &c));
    }

    #[test]
    fn retraction_is_a_homomorphism() {
        let g = DiGraph::from_edges(5, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 3)]);
        let (c, r) = core_with_retraction(&g);
        assert!(is_homomorphism(&g, &c, &r).unwrap());
        assert!(equivalent(&g, &c));
        assert!(is_core(&c));
    }

    #[test]
    fn equivalence_examples() {
        assert!(equivalent(&p("+-"), &p("+")));
        assert!(!equivalent(&p("+"), &p("++")));
    }

    #[test]
    fn antichain_reports_pair() {
        assert_eq!(antichain_violation(&[p("++"), p("+"), p("+-+")]), Some((1, 0)));
        assert!(!is_antichain(&[p("++"), DiGraph::from_edges(2, &[(0, 1), (1, 0)])]));
        assert!(is_antichain(&[]));
    }
}
