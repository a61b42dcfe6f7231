//! Necessary conditions on a duality pair: a bound on the number of
//! components of left-side members and, for antichains of cores, on degrees.

use std::fmt;

use crate::cores::{is_antichain, is_core};
use crate::digraph::DiGraph;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructuralReport {
    pub members: usize,
    pub duals: usize,
    pub max_components: usize,
    pub antichain_of_cores: bool,
    pub max_degree: usize,
    /// Total vertex count of the duals.
    pub degree_bound: usize,
}

impl StructuralReport {
    pub fn components_ok(&self) -> bool {
        self.max_components <= self.duals
    }

    /// `None` when the degree bound does not apply.
    pub fn degree_ok(&self) -> Option<bool> {
        self.antichain_of_cores.then_some(self.max_degree <= self.degree_bound)
    }

    pub fn passes(&self) -> bool {
        self.components_ok() && self.degree_ok() != Some(false)
    }
}

impl fmt::Display for StructuralReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "members={} components<={} duals={} antichain_of_cores={} max_degree={} bound={}",
            self.members, self.max_components, self.duals, self.antichain_of_cores, self.max_degree, self.degree_bound
        )
    }
}

/// Both pair sides must be antichains of cores for the degree bound; the
/// component bound is checked regardless.
pub fn check_structural_lemmas(members: &[DiGraph], duals: &[DiGraph]) -> StructuralReport {
    let antichain_of_cores = is_antichain(members) && is_antichain(duals) && members.iter().chain(duals).all(is_core);
    StructuralReport {
        members: members.len(),
        duals: duals.len(),
        max_components: members.iter().map(|g| g.connected_components().len()).max().unwrap_or(0),
        antichain_of_cores,
        max_degree: members.iter().map(DiGraph::max_total_degree).max().unwrap_or(0),
        degree_bound: duals.iter().map(DiGraph::n).sum(),
    }
}
