//! Constructive duality: for a graph `X` either exhibit a left-side member
//! mapping into `X`, or build the homomorphism `X -> dual` vertex by vertex.

use super::descriptor::{FamilyDescriptor, FamilyWitness};
use super::hits::{family_hits, TreeFixpoint};
use super::named::{g1, g2, gen_d, gen_g1, gen_g2};
use super::tree::TreeParams;
use crate::automata::LoopPattern;
use crate::bitset::VertexSet;
use crate::digraph::{is_homomorphism, DiGraph, Vertex, VertexMap};
use crate::pathwords::{reach_matrix, step, word, Sign, Word};

/// The pairs with an explicit dual-homomorphism construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DualKind {
    /// `({P^s_k}, {D_s})`
    Ds(usize),
    /// `(T(+-,-+,--,++), {G_1})`
    G1,
    /// `(T(+--,-+-,--,+++), {G_2})`
    G2,
}

impl DualKind {
    pub fn family(self) -> FamilyDescriptor {
        match self {
            DualKind::Ds(s) => FamilyDescriptor::PathPower(s),
            DualKind::G1 => FamilyDescriptor::t1(),
            DualKind::G2 => FamilyDescriptor::t2(),
        }
    }

    pub fn dual(self) -> DiGraph {
        match self {
            DualKind::Ds(s) => gen_d(s),
            DualKind::G1 => gen_g1(),
            DualKind::G2 => gen_g2(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DualOutcome {
    Witness(FamilyWitness),
    Hom(VertexMap),
}

impl DualOutcome {
    pub fn is_witness(&self) -> bool {
        matches!(self, DualOutcome::Witness(_))
    }
}

/// Returns exactly one of: a left member with a homomorphism into `g`, or
/// a homomorphism from `g` to the dual.
///
/// Panics if the construction produces neither.
pub fn phi_to_dual(kind: DualKind, g: &DiGraph) -> DualOutcome {
    try_phi_to_dual(kind, g).unwrap_or_else(|| {
        panic!(
            "{kind:?}: no member maps into the graph and the constructed map is not a homomorphism into the dual\n{g}"
        )
    })
}

/// Like [`phi_to_dual`], with `None` when neither branch applies.
pub fn try_phi_to_dual(kind: DualKind, g: &DiGraph) -> Option<DualOutcome> {
    let constructed = match kind {
        DualKind::Ds(s) => phi_ds(s, g),
        DualKind::G1 => phi_levels(g, &G1_RULES),
        DualKind::G2 => phi_levels(g, &G2_RULES),
    };
    if let Some(map) = constructed {
        if is_homomorphism(g, &kind.dual(), &map).expect("images are dual vertices") {
            return Some(DualOutcome::Hom(map));
        }
    }
    family_hits(&kind.family(), g).map(DualOutcome::Witness)
}

fn image_of(g: &DiGraph, from: &VertexSet, w: &Word) -> VertexSet {
    w.letters().iter().fold(from.clone(), |set, &s| step(g, &set, s))
}

/// `type_sets[i]`: vertices where some `p(+(+^{s-1}-)^k +^i)` ends.
pub fn vertex_types(s: usize, g: &DiGraph) -> Vec<VertexSet> {
    let n = g.n();
    let heads = step(g, &VertexSet::full(n), Sign::Plus);
    let body = Word::plus(s - 1).concat(&word("-"));
    let body_reach = reach_matrix(&body, g);
    let mut closure = heads;
    loop {
        let mut next = closure.clone();
        for v in closure.iter() {
            next.union_with(body_reach.row_set(v));
        }
        if next == closure {
            break;
        }
        closure = next;
    }
    (0..=s).map(|i| image_of(g, &closure, &Word::plus(i))).collect()
}

/// The automaton view of the same types, kept for cross-checking.
pub fn type_pattern(s: usize, i: usize) -> LoopPattern {
    LoopPattern::new(word("+"), Word::plus(s - 1).concat(&word("-")), Word::plus(i)).expect("nonempty body")
}

#[cfg(test)]
fn type_nfa(s: usize, i: usize) -> crate::automata::Nfa {
    crate::automata::family_nfa(&type_pattern(s, i))
}

fn phi_ds(s: usize, g: &DiGraph) -> Option<VertexMap> {
    assert!(s >= 1);
    let types = vertex_types(s, g);
    if !types[s].is_empty() {
        return None;
    }
    // v_0 if not type 0, else v_i for the first type i it misses.
    let images = (0..g.n()).map(|v| (0..=s).find(|&i| !types[i].contains(v)).expect("no type-s vertex")).collect();
    Some(VertexMap::new(images))
}

/// Vertices ending `p(+^i)` but not `p(+^{i+1})`, for `i < levels`. `None`
/// when some vertex ends `p(+^levels)`.
pub fn levels(g: &DiGraph, levels: usize) -> Option<Vec<VertexSet>> {
    let n = g.n();
    let mut ends = vec![VertexSet::full(n)];
    for _ in 0..levels {
        let next = step(g, ends.last().expect("nonempty"), Sign::Plus);
        ends.push(next);
    }
    if !ends[levels].is_empty() {
        return None;
    }
    Some(
        (0..levels)
            .map(|i| {
                let mut l = ends[i].clone();
                for v in ends[i + 1].iter() {
                    l.remove(v);
                }
                l
            })
            .collect(),
    )
}

/// Data for the level-by-level construction into `G_1` or `G_2`.
struct LevelRules {
    params: fn() -> TreeParams,
    level_count: usize,
    labels: Labels,
    second_step: SecondStep,
    tail: Tail,
}

#[derive(Clone, Copy)]
struct Labels {
    x: Vertex,
    y: Vertex,
    b: Vertex,
    c: Vertex,
    a: Vertex,
    r: Vertex,
}

#[derive(Clone, Copy)]
enum SecondStep {
    /// An edge into the top level, or an edge into a vertex that an
    /// `a`-labelled level-1 vertex also points to.
    G1,
    /// `p(+----)` starts at u, or `p(+--)` runs from u to an `a`-labelled
    /// level-1 vertex.
    G2,
}

#[derive(Clone, Copy)]
enum Tail {
    /// Everything left goes to `r`.
    G1,
    /// Rest of level 2 to `r`; level 3 to `r` unless fed by an `r`-labelled
    /// level-2 vertex; the rest to `s`.
    G2 { s: Vertex },
}

const G1_RULES: LevelRules = LevelRules {
    params: TreeParams::t1,
    level_count: 4,
    labels: Labels { x: g1::X, y: g1::Y, b: g1::B, c: g1::C, a: g1::A, r: g1::R },
    second_step: SecondStep::G1,
    tail: Tail::G1,
};

const G2_RULES: LevelRules = LevelRules {
    params: TreeParams::t2,
    level_count: 5,
    labels: Labels { x: g2::X, y: g2::Y, b: g2::B, c: g2::C, a: g2::A, r: g2::R },
    second_step: SecondStep::G2,
    tail: Tail::G2 { s: g2::S },
};

/// The numbered steps, applied in order; each vertex keeps the first label
/// it receives.
fn phi_levels(g: &DiGraph, rules: &LevelRules) -> Option<VertexMap> {
    let n = g.n();
    let lv = levels(g, rules.level_count)?;
    let Labels { x, y, b, c, a, r } = rules.labels;
    let mut phi: Vec<Option<Vertex>> = vec![None; n];

    // (1) level-1 roots of a tree gadget without its root path.
    let fp = TreeFixpoint::compute(&(rules.params)().without_root_path(), g);
    for u in lv[1].iter() {
        if fp.contains(u) {
            phi[u] = Some(a);
        }
    }

    // (2)
    let labelled_a = |phi: &[Option<Vertex>], v: Vertex| lv[1].contains(v) && phi[v] == Some(a);
    let second: Vec<Vertex> = match rules.second_step {
        SecondStep::G1 => lv[1]
            .iter()
            .filter(|&u| phi[u].is_none())
            .filter(|&u| g.successors(u).any(|v| lv[3].contains(v) || g.predecessors(v).any(|w| labelled_a(&phi, w))))
            .collect(),
        SecondStep::G2 => {
            let long = reach_matrix(&word("+----"), g);
            let hook = reach_matrix(&word("+--"), g);
            lv[1]
                .iter()
                .filter(|&u| phi[u].is_none())
                .filter(|&u| long.row_nonempty(u) || hook.row(u).any(|v| labelled_a(&phi, v)))
                .collect()
        }
    };
    for u in second {
        phi[u] = Some(b);
    }

    // (3)
    for u in lv[1].iter() {
        phi[u].get_or_insert(c);
    }

    // (4), (5)
    for u in lv[0].iter() {
        let label = if g.successors(u).any(|v| phi[v] == Some(b)) { x } else { y };
        phi[u] = Some(label);
    }

    // (6) level 2 without an in-edge from an a-labelled level-1 vertex.
    for u in lv[2].iter() {
        if !g.predecessors(u).any(|v| labelled_a(&phi, v)) {
            phi[u] = Some(a);
        }
    }

    match rules.tail {
        Tail::G1 => {
            for slot in phi.iter_mut() {
                slot.get_or_insert(r);
            }
        }
        Tail::G2 { s } => {
            for u in lv[2].iter() {
                phi[u].get_or_insert(r);
            }
            let l3: Vec<Vertex> =
                lv[3].iter().filter(|&u| !g.predecessors(u).any(|v| lv[2].contains(v) && phi[v] == Some(r))).collect();
            for u in l3 {
                phi[u] = Some(r);
            }
            for slot in phi.iter_mut() {
                slot.get_or_insert(s);
            }
        }
    }

    Some(VertexMap::new(phi.into_iter().map(|v| v.expect("every vertex labelled")).collect()))
}
