//! Transformations that turn duality pairs into new duality pairs.

use super::descriptor::{FamilyDescriptor, Member, Truncation};
use super::hits::family_hits;
use crate::cores::equivalent;
use crate::digraph::{DiGraph, GraphBuilder};

/// Hangs a new out-neighbour off every sink of `a` (one fresh vertex per
/// sink, numbered after the original vertices in sink order).
pub fn append_sinks(a: &DiGraph) -> DiGraph {
    let mut b = GraphBuilder::with_vertices(a.n());
    for &(u, v) in a.edges() {
        b.add_edge(u, v);
    }
    for sink in a.sinks() {
        let fresh = b.add_vertex();
        b.add_edge(sink, fresh);
    }
    b.build()
}

/// Adds one vertex receiving an edge from every original vertex.
pub fn add_universal_sink(d: &DiGraph) -> DiGraph {
    let mut b = GraphBuilder::with_vertices(d.n());
    for &(u, v) in d.edges() {
        b.add_edge(u, v);
    }
    let top = b.add_vertex();
    for v in 0..d.n() {
        b.add_edge(v, top);
    }
    b.build()
}

/// Sink-extends the left side and adds a universal sink to every dual.
pub fn append_pair(family: FamilyDescriptor, duals: &[DiGraph]) -> (FamilyDescriptor, Vec<DiGraph>) {
    (FamilyDescriptor::append(family), duals.iter().map(add_universal_sink).collect())
}

/// Combines two pairs: the duals are united and the left side becomes the
/// reduced combination of the two left families.
pub fn combine_pairs(
    first: (FamilyDescriptor, Vec<DiGraph>),
    second: (FamilyDescriptor, Vec<DiGraph>),
) -> (FamilyDescriptor, Vec<DiGraph>) {
    let mut duals = first.1;
    duals.extend(second.1);
    (FamilyDescriptor::combine(first.0, second.0), duals)
}

/// Truncated members of a combined left side, split by whether each member
/// already receives a member of the other family.
#[derive(Clone, Debug)]
pub struct CombinedMembers {
    /// Members of the first family receiving a member of the second.
    pub shared_first: Vec<(Member, DiGraph)>,
    /// Members of the second family receiving a member of the first, with
    /// those equivalent to a `shared_first` entry removed.
    pub shared_second: Vec<(Member, DiGraph)>,
    pub rest_first: Vec<(Member, DiGraph)>,
    pub rest_second: Vec<(Member, DiGraph)>,
}

impl CombinedMembers {
    /// Shared members alone, then unions of every pair of the rest.
    pub fn members(&self) -> Vec<(Member, DiGraph)> {
        let mut out = self.shared_first.clone();
        out.extend(self.shared_second.iter().cloned());
        for (ma, a) in &self.rest_first {
            for (mb, b) in &self.rest_second {
                out.push((Member::Union(Box::new(ma.clone()), Box::new(mb.clone())), a.disjoint_union(b)));
            }
        }
        out
    }
}

/// Classification uses the exact deciders of the other family, so only the
/// listing itself is truncated.
pub fn combined_members(a: &FamilyDescriptor, b: &FamilyDescriptor, limits: Truncation) -> CombinedMembers {
    let (shared_first, rest_first): (Vec<_>, Vec<_>) =
        a.members(limits).into_iter().partition(|(_, g)| family_hits(b, g).is_some());
    let (shared_second, rest_second): (Vec<_>, Vec<_>) =
        b.members(limits).into_iter().partition(|(_, g)| family_hits(a, g).is_some());
    let shared_second =
        shared_second.into_iter().filter(|(_, g)| !shared_first.iter().any(|(_, h)| equivalent(h, g))).collect();
    CombinedMembers { shared_first, shared_second, rest_first, rest_second }
}
