//! Full binary trees and the tree gadgets built from them.

use std::fmt;
use std::str::FromStr;

use crate::digraph::{DiGraph, GraphBuilder, Vertex};
use crate::error::{Error, Result};
use crate::pathwords::{word, Sign, Word};

/// A rooted tree in which every node is a leaf or has exactly two children.
///
/// Written as balanced parentheses: a leaf is `()` and a node with children
/// `L`, `R` is `(LR)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BinaryTree {
    Leaf,
    Node(Box<BinaryTree>, Box<BinaryTree>),
}

impl BinaryTree {
    pub fn node(left: BinaryTree, right: BinaryTree) -> BinaryTree {
        BinaryTree::Node(Box::new(left), Box::new(right))
    }

    pub fn leaves(&self) -> usize {
        match self {
            BinaryTree::Leaf => 1,
            BinaryTree::Node(l, r) => l.leaves() + r.leaves(),
        }
    }

    pub fn node_count(&self) -> usize {
        2 * self.leaves() - 1
    }

    pub fn depth(&self) -> usize {
        match self {
            BinaryTree::Leaf => 0,
            BinaryTree::Node(l, r) => 1 + l.depth().max(r.depth()),
        }
    }

    /// Every tree with exactly `leaves` leaves (Catalan many), deterministic order.
    pub fn all_with_leaves(leaves: usize) -> Vec<BinaryTree> {
        match leaves {
            0 => Vec::new(),
            1 => vec![BinaryTree::Leaf],
            _ => (1..leaves)
                .flat_map(|left| {
                    let rights = BinaryTree::all_with_leaves(leaves - left);
                    BinaryTree::all_with_leaves(left)
                        .into_iter()
                        .flat_map(move |l| rights.clone().into_iter().map(move |r| BinaryTree::node(l.clone(), r)))
                })
                .collect(),
        }
    }

    /// Every tree with at most `leaves` leaves, smallest first.
    pub fn all_up_to(leaves: usize) -> Vec<BinaryTree> {
        (1..=leaves).flat_map(BinaryTree::all_with_leaves).collect()
    }

    /// The complete tree of the given depth (`2^depth` leaves).
    pub fn full(depth: usize) -> BinaryTree {
        if depth == 0 {
            BinaryTree::Leaf
        } else {
            BinaryTree::node(BinaryTree::full(depth - 1), BinaryTree::full(depth - 1))
        }
    }

    /// Preorder arena: entry `i` holds the child indices of node `i`, or
    /// `None` for a leaf. Node 0 is the root.
    pub fn preorder(&self) -> Vec<Option<(usize, usize)>> {
        fn walk(t: &BinaryTree, out: &mut Vec<Option<(usize, usize)>>) -> usize {
            let me = out.len();
            out.push(None);
            if let BinaryTree::Node(l, r) = t {
                let li = walk(l, out);
                let ri = walk(r, out);
                out[me] = Some((li, ri));
            }
            me
        }
        let mut out = Vec::with_capacity(self.node_count());
        walk(self, &mut out);
        out
    }
}

impl fmt::Display for BinaryTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BinaryTree::Leaf => write!(f, "()"),
            BinaryTree::Node(l, r) => write!(f, "({l}{r})"),
        }
    }
}

impl FromStr for BinaryTree {
    type Err = Error;

    fn from_str(s: &str) -> Result<BinaryTree> {
        fn parse(bytes: &[u8], pos: &mut usize) -> Option<BinaryTree> {
            if bytes.get(*pos) != Some(&b'(') {
                return None;
            }
            *pos += 1;
            if bytes.get(*pos) == Some(&b')') {
                *pos += 1;
                return Some(BinaryTree::Leaf);
            }
            let l = parse(bytes, pos)?;
            let r = parse(bytes, pos)?;
            if bytes.get(*pos) != Some(&b')') {
                return None;
            }
            *pos += 1;
            Some(BinaryTree::node(l, r))
        }
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut pos = 0;
        match parse(compact.as_bytes(), &mut pos) {
            Some(t) if pos == compact.len() => Ok(t),
            _ => Err(Error::InvalidTree(s.to_string())),
        }
    }
}

/// The four words of a tree gadget: left edges become `p(x)`, right edges
/// `p(y)`, each leaf gets `p(s)` and the root gets `p(z)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TreeParams {
    pub x: Word,
    pub y: Word,
    pub s: Word,
    pub z: Word,
}

impl TreeParams {
    pub fn new(x: Word, y: Word, s: Word, z: Word) -> Result<TreeParams> {
        if x.is_empty() || y.is_empty() {
            return Err(Error::EmptyGadgetWord);
        }
        Ok(TreeParams { x, y, s, z })
    }

    /// `(+-, -+, --, ++)`
    pub fn t1() -> TreeParams {
        TreeParams::new(word("+-"), word("-+"), word("--"), word("++")).expect("valid")
    }

    /// `(+--, -+-, --, +++)`
    pub fn t2() -> TreeParams {
        TreeParams::new(word("+--"), word("-+-"), word("--"), word("+++")).expect("valid")
    }

    /// Same gadget without the root path.
    pub fn without_root_path(&self) -> TreeParams {
        TreeParams { z: Word::empty(), ..self.clone() }
    }
}

impl fmt::Display for TreeParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "T({},{},{},{})", self.x, self.y, self.s, self.z)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Attachment {
    /// From a node to its left child.
    Left { parent: usize, child: usize },
    /// From a node to its right child.
    Right { parent: usize, child: usize },
    /// Hanging off a leaf.
    Leaf { node: usize },
    /// Hanging off the root.
    Root,
}

/// One substituted or attached path inside a gadget.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GadgetPath {
    pub attachment: Attachment,
    pub word: Word,
    /// Gadget vertices along `p(word)`, first vertex first.
    pub vertices: Vec<Vertex>,
}

/// `t(x, y, s, z)` with its layout: tree node `i` (preorder) is vertex `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gadget {
    pub graph: DiGraph,
    pub tree: BinaryTree,
    pub paths: Vec<GadgetPath>,
}

fn attach_path(b: &mut GraphBuilder, start: Vertex, w: &Word, end: Option<Vertex>) -> Vec<Vertex> {
    let mut vertices = vec![start];
    for (i, &sign) in w.letters().iter().enumerate() {
        let prev = *vertices.last().expect("nonempty");
        let next = match end {
            Some(e) if i + 1 == w.len() => e,
            _ => b.add_vertex(),
        };
        match sign {
            Sign::Plus => b.add_edge(prev, next),
            Sign::Minus => b.add_edge(next, prev),
        }
        vertices.push(next);
    }
    vertices
}

/// Builds `t(x, y, s, z)`. Vertex numbering: tree nodes in preorder, then
/// interior vertices of the left/right paths node by node, then the leaf
/// paths, then the root path.
pub fn gadget(tree: &BinaryTree, params: &TreeParams) -> Gadget {
    let arena = tree.preorder();
    let mut b = GraphBuilder::with_vertices(arena.len());
    let mut paths = Vec::new();
    for (node, children) in arena.iter().enumerate() {
        if let Some((l, r)) = *children {
            let vertices = attach_path(&mut b, node, &params.x, Some(l));
            paths.push(GadgetPath {
                attachment: Attachment::Left { parent: node, child: l },
                word: params.x.clone(),
                vertices,
            });
            let vertices = attach_path(&mut b, node, &params.y, Some(r));
            paths.push(GadgetPath {
                attachment: Attachment::Right { parent: node, child: r },
                word: params.y.clone(),
                vertices,
            });
        }
    }
    for (node, children) in arena.iter().enumerate() {
        if children.is_none() {
            let vertices = attach_path(&mut b, node, &params.s, None);
            paths.push(GadgetPath { attachment: Attachment::Leaf { node }, word: params.s.clone(), vertices });
        }
    }
    let vertices = attach_path(&mut b, 0, &params.z, None);
    paths.push(GadgetPath { attachment: Attachment::Root, word: params.z.clone(), vertices });
    Gadget { graph: b.build(), tree: tree.clone(), paths }
}

pub fn gadget_graph(tree: &BinaryTree, params: &TreeParams) -> DiGraph {
    gadget(tree, params).graph
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::is_isomorphic;

    #[test]
    fn catalan_counts() {
        let counts: Vec<_> = (1..=6).map(|l| BinaryTree::all_with_leaves(l).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 5, 14, 42]);
        assert_eq!(BinaryTree::full(3).leaves(), 8);
    }

    #[test]
    fn tree_strings() {
        let t = BinaryTree::node(BinaryTree::Leaf, BinaryTree::node(BinaryTree::Leaf, BinaryTree::Leaf));
        assert_eq!(t.to_string(), "(()(()()))");
        assert_eq!("(()(()()))".parse::<BinaryTree>().unwrap(), t);
        assert_eq!("()".parse::<BinaryTree>().unwrap(), BinaryTree::Leaf);
        for bad in ["", "(", "(()", "(())", "()()", "(()()()))", "x"] {
            assert!(bad.parse::<BinaryTree>().is_err(), "{bad:?}");
        }
    }

    #[test]
    fn single_leaf_t1_gadget() {
        let g = gadget_graph(&BinaryTree::Leaf, &TreeParams::t1());
        assert_eq!(g.n(), 5);
        // p(--) and p(++) from one vertex: a directed path with 4 edges.
        assert!(is_isomorphic(&g, &word("++++").path()));
    }

    #[test]
    fn bare_leaf_is_single_vertex() {
        let params = TreeParams::new(word("+"), word("-"), Word::empty(), Word::empty()).unwrap();
        let g = gadget_graph(&BinaryTree::Leaf, &params);
        assert_eq!((g.n(), g.edge_count()), (1, 0));
    }

    #[test]
    fn empty_side_words_rejected() {
        assert_eq!(
            TreeParams::new(Word::empty(), word("+"), Word::empty(), Word::empty()),
            Err(Error::EmptyGadgetWord)
        );
    }

    #[test]
    fn vertex_and_edge_counts() {
        for params in [
            TreeParams::t1(),
            TreeParams::t2(),
            TreeParams::new(word("+"), word("-+-"), Word::empty(), word("-")).unwrap(),
        ] {
            for t in BinaryTree::all_up_to(4) {
                let g = gadget(&t, &params);
                let l = t.leaves();
                let expected = (2 * l - 1)
                    + (l - 1) * (params.x.len() - 1 + params.y.len() - 1)
                    + l * params.s.len()
                    + params.z.len();
                assert_eq!(g.graph.n(), expected);
                // A tree: one edge fewer than vertices, connected.
                assert_eq!(g.graph.edge_count() + 1, g.graph.n());
                assert!(g.graph.is_connected());
                for path in &g.paths {
                    assert_eq!(path.vertices.len(), path.word.len() + 1);
                }
            }
        }
    }
}
