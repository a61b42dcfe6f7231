//! Homomorphism search as a binary CSP: one variable per source vertex, the
//! target's vertices as values, one constraint per source edge.
//!
//! Domains are bitsets. Arc consistency is maintained throughout the search
//! (revise neighbours whenever a domain shrinks), and branching picks the
//! unassigned variable with the smallest domain.

use super::{DiGraph, Vertex, VertexMap};
use crate::bitset::VertexSet;
use crate::error::{Error, Result};

/// A homomorphism query with optional restrictions on the images.
///
/// ```
/// use homdual::digraph::{DiGraph, HomSearch};
/// let path = DiGraph::from_edges(3, &[(0, 1), (1, 2)]);
/// let tri = DiGraph::from_edges(3, &[(0, 1), (1, 2), (2, 0)]);
/// let f = HomSearch::new(&path, &tri).pin(0, 2).find().unwrap();
/// assert_eq!(f.images(), &[2, 0, 1]);
/// ```
#[derive(Clone, Debug)]
pub struct HomSearch<'a> {
    src: &'a DiGraph,
    dst: &'a DiGraph,
    domains: Vec<VertexSet>,
}

impl<'a> HomSearch<'a> {
    pub fn new(src: &'a DiGraph, dst: &'a DiGraph) -> Self {
        HomSearch { src, dst, domains: vec![VertexSet::full(dst.n()); src.n()] }
    }

    /// Require `u` to map to `a`.
    pub fn pin(mut self, u: Vertex, a: Vertex) -> Self {
        assert!(u < self.src.n() && a < self.dst.n(), "pin out of range");
        let keep = self.domains[u].contains(a);
        self.domains[u] = VertexSet::empty(self.dst.n());
        if keep {
            self.domains[u].insert(a);
        }
        self
    }

    /// Require `u` to map into `allowed`.
    pub fn restrict(mut self, u: Vertex, allowed: impl IntoIterator<Item = Vertex>) -> Self {
        let mut set = VertexSet::empty(self.dst.n());
        for a in allowed {
            set.insert(a);
        }
        self.domains[u].intersect_with(&set);
        self
    }

    /// Forbid `a` as an image of any vertex.
    pub fn avoid(mut self, a: Vertex) -> Self {
        for d in &mut self.domains {
            d.remove(a);
        }
        self
    }

    pub fn find(self) -> Option<VertexMap> {
        let HomSearch { src, dst, mut domains } = self;
        if src.n() == 0 {
            return Some(VertexMap::new(Vec::new()));
        }
        if dst.n() == 0 {
            return None;
        }
        let solver = Solver { src, dst };
        if !solver.unary_filter(&mut domains) {
            return None;
        }
        let all: Vec<Vertex> = (0..src.n()).collect();
        if !solver.propagate(&mut domains, &all) {
            return None;
        }
        if !solver.search(&mut domains) {
            return None;
        }
        let images = domains.iter().map(|d| d.first().expect("assigned")).collect();
        Some(VertexMap::new(images))
    }
}

struct Solver<'a> {
    src: &'a DiGraph,
    dst: &'a DiGraph,
}

impl Solver<'_> {
    fn unary_filter(&self, domains: &mut [VertexSet]) -> bool {
        let m = self.dst.n();
        let mut loops = VertexSet::empty(m);
        let mut has_out = VertexSet::empty(m);
        let mut has_in = VertexSet::empty(m);
        for a in 0..m {
            if self.dst.has_loop(a) {
                loops.insert(a);
            }
            if self.dst.out_degree(a) > 0 {
                has_out.insert(a);
            }
            if self.dst.in_degree(a) > 0 {
                has_in.insert(a);
            }
        }
        for (u, d) in domains.iter_mut().enumerate() {
            if self.src.has_loop(u) {
                d.intersect_with(&loops);
            }
            if self.src.out_degree(u) > 0 {
                d.intersect_with(&has_out);
            }
            if self.src.in_degree(u) > 0 {
                d.intersect_with(&has_in);
            }
            if d.is_empty() {
                return false;
            }
        }
        true
    }

    /// Restores arc consistency after the domains in `changed` shrank.
    /// Returns false on a wipe-out.
    fn propagate(&self, domains: &mut [VertexSet], changed: &[Vertex]) -> bool {
        let n = self.src.n();
        let m = self.dst.n();
        let mut queued = vec![false; n];
        let mut queue: Vec<Vertex> = Vec::with_capacity(n);
        for &u in changed {
            if !queued[u] {
                queued[u] = true;
                queue.push(u);
            }
        }
        while let Some(w) = queue.pop() {
            queued[w] = false;
            // Successors of w must lie in the out-neighbourhood of D(w).
            let mut forward = VertexSet::empty(m);
            let mut backward = VertexSet::empty(m);
            for a in domains[w].iter() {
                forward.union_with(self.dst.out_set(a));
                backward.union_with(self.dst.in_set(a));
            }
            for (neighbours, support) in [(self.src.out_set(w), &forward), (self.src.in_set(w), &backward)] {
                for v in neighbours.iter() {
                    if v == w {
                        continue;
                    }
                    if domains[v].intersect_with(support) {
                        if domains[v].is_empty() {
                            return false;
                        }
                        if !queued[v] {
                            queued[v] = true;
                            queue.push(v);
                        }
                    }
                }
            }
        }
        true
    }

    fn pick_variable(&self, domains: &[VertexSet]) -> Option<Vertex> {
        let mut best: Option<(usize, usize, Vertex)> = None;
        for (u, d) in domains.iter().enumerate() {
            let size = d.len();
            if size <= 1 {
                continue;
            }
            let degree = self.src.out_degree(u) + self.src.in_degree(u);
            let key = (size, usize::MAX - degree, u);
            if best.is_none_or(|b| key < b) {
                best = Some(key);
            }
        }
        best.map(|(_, _, u)| u)
    }

    fn search(&self, domains: &mut Vec<VertexSet>) -> bool {
        let Some(u) = self.pick_variable(domains) else {
            return true;
        };
        let m = self.dst.n();
        for a in domains[u].clone().iter() {
            let mut trial = domains.clone();
            trial[u] = VertexSet::singleton(m, a);
            if self.propagate(&mut trial, &[u]) && self.search(&mut trial) {
                *domains = trial;
                return true;
            }
        }
        false
    }
}

/// A homomorphism `g -> h` if one exists.
pub fn hom_exists(g: &DiGraph, h: &DiGraph) -> Option<VertexMap> {
    HomSearch::new(g, h).find()
}

/// Whether `g -> h`.
pub fn maps_to(g: &DiGraph, h: &DiGraph) -> bool {
    hom_exists(g, h).is_some()
}

/// Checks that `f` sends every edge of `g` to an edge of `h`.
pub fn is_homomorphism(g: &DiGraph, h: &DiGraph, f: &VertexMap) -> Result<bool> {
    if f.len() != g.n() {
        return Err(Error::MapLength { expected: g.n(), got: f.len() });
    }
    if let Some((index, &image)) = f.images().iter().enumerate().find(|(_, &a)| a >= h.n()) {
        return Err(Error::MapOutOfRange { index, image, n: h.n() });
    }
    Ok(g.edges().iter().all(|&(u, v)| h.has_edge(f.get(u), f.get(v))))
}
