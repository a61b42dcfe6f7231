use std::fmt;

use super::named::{gen_p, gen_q};
use super::transform::append_sinks;
use super::tree::{gadget_graph, BinaryTree, TreeParams};
use crate::digraph::{DiGraph, VertexMap};

/// A finite description of a possibly infinite family of graphs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilyDescriptor {
    ExplicitList(Vec<DiGraph>),
    /// `{P^s_k : k >= 0}`, `s >= 1`.
    PathPower(usize),
    /// `{Q_k : 1 <= k <= k_max}`; a truncation of an infinite family.
    QFamily(usize),
    /// `{t(x, y, s, z) : t a full binary tree}`.
    TreeFamily(TreeParams),
    /// Every member gets a fresh out-neighbour on each sink.
    Append(Box<FamilyDescriptor>),
    /// The reduced left side of two combined pairs: members of either family
    /// that already receive a member of the other, plus disjoint unions of
    /// the remaining members.
    CombineLeft(Box<FamilyDescriptor>, Box<FamilyDescriptor>),
}

impl FamilyDescriptor {
    pub fn t1() -> FamilyDescriptor {
        FamilyDescriptor::TreeFamily(TreeParams::t1())
    }

    pub fn t2() -> FamilyDescriptor {
        FamilyDescriptor::TreeFamily(TreeParams::t2())
    }

    pub fn append(inner: FamilyDescriptor) -> FamilyDescriptor {
        FamilyDescriptor::Append(Box::new(inner))
    }

    pub fn combine(left: FamilyDescriptor, right: FamilyDescriptor) -> FamilyDescriptor {
        FamilyDescriptor::CombineLeft(Box::new(left), Box::new(right))
    }

    /// False when membership is only decided up to a caller-supplied bound.
    pub fn is_exact(&self) -> bool {
        match self {
            FamilyDescriptor::QFamily(_) => false,
            FamilyDescriptor::Append(f) => f.is_exact(),
            FamilyDescriptor::CombineLeft(a, b) => a.is_exact() && b.is_exact(),
            _ => true,
        }
    }

    /// Members up to the given bounds, in a fixed order.
    pub fn members(&self, limits: Truncation) -> Vec<(Member, DiGraph)> {
        match self {
            FamilyDescriptor::ExplicitList(gs) => {
                gs.iter().enumerate().map(|(i, g)| (Member::Listed(i), g.clone())).collect()
            }
            FamilyDescriptor::PathPower(s) => {
                (0..=limits.k_max).map(|k| (Member::PathPower { s: *s, k }, gen_p(*s, k))).collect()
            }
            FamilyDescriptor::QFamily(k_max) => (1..=*k_max).map(|k| (Member::Q(k), gen_q(k))).collect(),
            FamilyDescriptor::TreeFamily(params) => BinaryTree::all_up_to(limits.leaves_max)
                .into_iter()
                .map(|t| {
                    let g = gadget_graph(&t, params);
                    (Member::Tree(t), g)
                })
                .collect(),
            FamilyDescriptor::Append(inner) => inner
                .members(limits)
                .into_iter()
                .map(|(m, g)| (Member::Appended(Box::new(m)), append_sinks(&g)))
                .collect(),
            FamilyDescriptor::CombineLeft(a, b) => super::transform::combined_members(a, b, limits).members(),
        }
    }
}

impl fmt::Display for FamilyDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyDescriptor::ExplicitList(gs) => write!(f, "list[{}]", gs.len()),
            FamilyDescriptor::PathPower(s) => write!(f, "P:{s}"),
            FamilyDescriptor::QFamily(k) => write!(f, "Q:{k}"),
            FamilyDescriptor::TreeFamily(p) if *p == TreeParams::t1() => write!(f, "T1"),
            FamilyDescriptor::TreeFamily(p) if *p == TreeParams::t2() => write!(f, "T2"),
            FamilyDescriptor::TreeFamily(p) => write!(f, "T:{},{},{},{}", p.x, p.y, p.s, p.z),
            FamilyDescriptor::Append(inner) => write!(f, "append({inner})"),
            FamilyDescriptor::CombineLeft(a, b) => write!(f, "combine({a}/{b})"),
        }
    }
}

/// Bounds for listing members of infinite families.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Truncation {
    /// Largest loop count for path-power families.
    pub k_max: usize,
    /// Most leaves for tree families.
    pub leaves_max: usize,
}

impl Truncation {
    pub fn new(k_max: usize, leaves_max: usize) -> Self {
        Truncation { k_max, leaves_max }
    }
}

/// Which member of a family a graph is.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Member {
    Listed(usize),
    PathPower { s: usize, k: usize },
    Q(usize),
    Tree(BinaryTree),
    Appended(Box<Member>),
    Union(Box<Member>, Box<Member>),
}

impl fmt::Display for Member {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Member::Listed(i) => write!(f, "#{i}"),
            Member::PathPower { s, k } => write!(f, "P^{s}_{k}"),
            Member::Q(k) => write!(f, "Q_{k}"),
            Member::Tree(t) => write!(f, "t{t}"),
            Member::Appended(m) => write!(f, "append({m})"),
            Member::Union(a, b) => write!(f, "{a} + {b}"),
        }
    }
}

/// A family member together with a homomorphism into the queried graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyWitness {
    pub member: Member,
    pub graph: DiGraph,
    pub map: VertexMap,
}
