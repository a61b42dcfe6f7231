//! Exact "does some member map into G?" deciders.

use super::descriptor::{FamilyDescriptor, FamilyWitness, Member};
use super::named::{gen_p, gen_q, path_power_pattern};
use super::transform::append_sinks;
use super::tree::{gadget, Attachment, BinaryTree, TreeParams};
use crate::automata::{family_nfa, shortest_common_run, Nfa};
use crate::bitset::VertexSet;
use crate::digraph::{hom_exists, DiGraph, Vertex, VertexMap};
use crate::pathwords::{reach_matrix, walk};

/// Least fixpoint of the vertices that can host the root of a tree gadget
/// without its root path.
///
/// Round 0 holds every vertex with a `p(s)` walk out of it. A later round
/// admits `v` when `p(x)` reaches the set from `v` and so does `p(y)`.
/// Alongside membership it keeps, per vertex, the fewest leaves of a tree
/// rooted there and the child pair realising it.
#[derive(Clone, Debug)]
pub struct TreeFixpoint {
    round: Vec<Option<usize>>,
    leaves: Vec<usize>,
    children: Vec<Option<(Vertex, Vertex)>>,
    rounds: usize,
}

impl TreeFixpoint {
    /// Ignores `params.z`.
    pub fn compute(params: &TreeParams, g: &DiGraph) -> TreeFixpoint {
        let n = g.n();
        let rx = reach_matrix(&params.x, g);
        let ry = reach_matrix(&params.y, g);
        let rs = reach_matrix(&params.s, g);

        let mut round = vec![None; n];
        let mut member = VertexSet::empty(n);
        for (v, r) in round.iter_mut().enumerate() {
            if rs.row_nonempty(v) {
                *r = Some(0);
                member.insert(v);
            }
        }
        let mut rounds = 0;
        loop {
            let admitted: Vec<Vertex> = (0..n)
                .filter(|&v| {
                    round[v].is_none() && rx.row_set(v).intersects(&member) && ry.row_set(v).intersects(&member)
                })
                .collect();
            if admitted.is_empty() {
                break;
            }
            rounds += 1;
            for v in admitted {
                round[v] = Some(rounds);
                member.insert(v);
            }
        }
        assert!(rounds <= n, "fixpoint did not saturate within {n} rounds");

        // Fewest-leaves derivations; costs only decrease, so this settles.
        const INF: usize = usize::MAX / 4;
        let mut leaves: Vec<usize> = round.iter().map(|r| if *r == Some(0) { 1 } else { INF }).collect();
        let mut children = vec![None; n];
        let mut changed = true;
        while changed {
            changed = false;
            for v in member.iter() {
                for w1 in rx.row_set(v).iter().filter(|&w| member.contains(w)) {
                    for w2 in ry.row_set(v).iter().filter(|&w| member.contains(w)) {
                        let cost = leaves[w1].saturating_add(leaves[w2]);
                        if cost < leaves[v] {
                            leaves[v] = cost;
                            children[v] = Some((w1, w2));
                            changed = true;
                        }
                    }
                }
            }
        }
        TreeFixpoint { round, leaves, children, rounds }
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.round[v].is_some()
    }

    pub fn roots(&self) -> impl Iterator<Item = Vertex> + '_ {
        (0..self.round.len()).filter(|&v| self.contains(v))
    }

    /// Round in which `v` entered, if it did.
    pub fn round_of(&self, v: Vertex) -> Option<usize> {
        self.round[v]
    }

    /// Number of rounds after the base round before saturation.
    pub fn rounds(&self) -> usize {
        self.rounds
    }

    /// Fewest leaves of a tree whose root can map to `v`.
    pub fn min_leaves(&self, v: Vertex) -> Option<usize> {
        self.contains(v).then_some(self.leaves[v])
    }

    /// The tree certified at `v` by the recorded derivation.
    pub fn tree_at(&self, v: Vertex) -> BinaryTree {
        assert!(self.contains(v), "vertex {v} is not in the fixpoint");
        match self.children[v] {
            None => BinaryTree::Leaf,
            Some((l, r)) => BinaryTree::node(self.tree_at(l), self.tree_at(r)),
        }
    }

    /// Unwinds the derivation at `root` into a gadget and a homomorphism of
    /// it into `g`. `params.z` must have a walk out of `root`.
    pub fn witness(&self, params: &TreeParams, g: &DiGraph, root: Vertex) -> Option<(BinaryTree, DiGraph, VertexMap)> {
        if !self.contains(root) {
            return None;
        }
        let tree = self.tree_at(root);
        let built = gadget(&tree, params);
        let arena = tree.preorder();
        let mut node_image = vec![usize::MAX; arena.len()];
        node_image[0] = root;
        for (i, kids) in arena.iter().enumerate() {
            if let Some((l, r)) = *kids {
                let (wl, wr) = self.children[node_image[i]].expect("derivation matches tree");
                node_image[l] = wl;
                node_image[r] = wr;
            }
        }
        let mut map = vec![usize::MAX; built.graph.n()];
        map[..arena.len()].copy_from_slice(&node_image);
        for path in &built.paths {
            let start = node_image[path.vertices[0]];
            let end = match path.attachment {
                Attachment::Left { child, .. } | Attachment::Right { child, .. } => Some(node_image[child]),
                Attachment::Leaf { .. } | Attachment::Root => None,
            };
            let images = walk(&path.word, g, start, end)?;
            for (&v, img) in path.vertices.iter().zip(images) {
                map[v] = img;
            }
        }
        Some((tree, built.graph, VertexMap::new(map)))
    }
}

fn tree_family_hits(params: &TreeParams, g: &DiGraph) -> Option<FamilyWitness> {
    let fp = TreeFixpoint::compute(params, g);
    let rz = reach_matrix(&params.z, g);
    let root = fp.roots().filter(|&v| rz.row_nonempty(v)).min_by_key(|&v| (fp.leaves[v], v))?;
    let (tree, graph, map) = fp.witness(params, g, root).expect("fixpoint root has a witness");
    Some(FamilyWitness { member: Member::Tree(tree), graph, map })
}

fn path_power_hits(s: usize, g: &DiGraph) -> Option<FamilyWitness> {
    let pattern = path_power_pattern(s);
    let run = shortest_common_run(&family_nfa(&pattern), &Nfa::of_graph(g))?;
    let k = pattern.iterations_for_len(run.word.len()).expect("accepted word is a member");
    Some(FamilyWitness { member: Member::PathPower { s, k }, graph: gen_p(s, k), map: VertexMap::new(run.right) })
}

fn append_hits(inner: &FamilyDescriptor, g: &DiGraph) -> Option<FamilyWitness> {
    // Non-sinks of A' are exactly the vertices of A, so A' -> G iff
    // A -> G restricted to its non-sinks.
    let keep: Vec<Vertex> = (0..g.n()).filter(|&v| g.out_degree(v) > 0).collect();
    let core = g.induced_subgraph(&keep);
    let w = family_hits(inner, &core)?;
    let extended = append_sinks(&w.graph);
    let mut images: Vec<Vertex> = w.map.images().iter().map(|&v| keep[v]).collect();
    for sink in w.graph.sinks() {
        let succ = g.successors(images[sink]).next().expect("non-sink image has a successor");
        images.push(succ);
    }
    Some(FamilyWitness { member: Member::Appended(Box::new(w.member)), graph: extended, map: VertexMap::new(images) })
}

fn combine_hits(a: &FamilyDescriptor, b: &FamilyDescriptor, g: &DiGraph) -> Option<FamilyWitness> {
    let wa = family_hits(a, g)?;
    let wb = family_hits(b, g)?;
    // A member of one side that already receives a member of the other is
    // kept on its own.
    if family_hits(b, &wa.graph).is_some() {
        return Some(wa);
    }
    if family_hits(a, &wb.graph).is_some() {
        return Some(wb);
    }
    let graph = wa.graph.disjoint_union(&wb.graph);
    let images = wa.map.images().iter().chain(wb.map.images()).copied().collect();
    Some(FamilyWitness {
        member: Member::Union(Box::new(wa.member), Box::new(wb.member)),
        graph,
        map: VertexMap::new(images),
    })
}

/// Decides whether some member of `family` maps into `g`, returning a
/// member and homomorphism when one does.
///
/// Exact for every descriptor except [`FamilyDescriptor::QFamily`], which
/// only checks its listed members.
pub fn family_hits(family: &FamilyDescriptor, g: &DiGraph) -> Option<FamilyWitness> {
    match family {
        FamilyDescriptor::ExplicitList(list) => list.iter().enumerate().find_map(|(i, a)| {
            hom_exists(a, g).map(|map| FamilyWitness { member: Member::Listed(i), graph: a.clone(), map })
        }),
        FamilyDescriptor::PathPower(s) => path_power_hits(*s, g),
        FamilyDescriptor::QFamily(k_max) => (1..=*k_max).find_map(|k| {
            let q = gen_q(k);
            hom_exists(&q, g).map(|map| FamilyWitness { member: Member::Q(k), graph: q, map })
        }),
        FamilyDescriptor::TreeFamily(params) => tree_family_hits(params, g),
        FamilyDescriptor::Append(inner) => append_hits(inner, g),
        FamilyDescriptor::CombineLeft(a, b) => combine_hits(a, b, g),
    }
}
