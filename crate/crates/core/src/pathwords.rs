//! Words over `{+, -}` and the oriented paths they encode.
//!
//! The path of a word `x = x_1 … x_k` has vertices `0..=k`; its `i`-th edge
//! joins `i - 1` and `i` and points forward exactly when `x_i = +`. Vertex `0`
//! is the first vertex and `k` the last, so "maps `p(x)` from `u` to `v`"
//! means vertex 0 goes to `u` and vertex `k` to `v`.

use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use crate::bitset::VertexSet;
use crate::digraph::{DiGraph, GraphBuilder, Vertex};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<Sign>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn new(letters: Vec<Sign>) -> Self {
        Word(letters)
    }

    /// `+^k`
    pub fn plus(k: usize) -> Self {
        Word(vec![Sign::Plus; k])
    }

    /// `-^k`
    pub fn minus(k: usize) -> Self {
        Word(vec![Sign::Minus; k])
    }

    pub fn letters(&self) -> &[Sign] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `x^k`
    pub fn power(&self, k: usize) -> Word {
        Word(self.0.repeat(k))
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.0.clone();
        letters.extend_from_slice(&other.0);
        Word(letters)
    }

    /// Reverse the word and swap `+`/`-`: the same path read from the other end.
    pub fn reverse_complement(&self) -> Word {
        Word(self.0.iter().rev().map(|s| s.flip()).collect())
    }

    /// Largest `|#+ - #-|` over contiguous subwords, the empty one included.
    /// Reading the path backwards leaves it unchanged.
    pub fn height(&self) -> usize {
        let (mut up, mut down) = (0usize, 0usize);
        let (mut run_up, mut run_down) = (0usize, 0usize);
        for s in &self.0 {
            match s {
                Sign::Plus => {
                    run_up += 1;
                    run_down = run_down.saturating_sub(1);
                }
                Sign::Minus => {
                    run_down += 1;
                    run_up = run_up.saturating_sub(1);
                }
            }
            up = up.max(run_up);
            down = down.max(run_down);
        }
        up.max(down)
    }

    /// The oriented path `p(x)`.
    pub fn path(&self) -> DiGraph {
        let mut b = GraphBuilder::with_vertices(self.len() + 1);
        for (i, s) in self.0.iter().enumerate() {
            match s {
                Sign::Plus => b.add_edge(i, i + 1),
                Sign::Minus => b.add_edge(i + 1, i),
            }
        }
        b.build()
    }

    /// All words of length exactly `k`, in lexicographic order with `+ < -`.
    pub fn all_of_length(k: usize) -> impl Iterator<Item = Word> {
        (0u64..1 << k).map(move |bits| {
            Word((0..k).rev().map(|i| if bits >> i & 1 == 0 { Sign::Plus } else { Sign::Minus }).collect())
        })
    }

    /// All words of length at most `k`, shortest first.
    pub fn all_up_to(k: usize) -> impl Iterator<Item = Word> {
        (0..=k).flat_map(Word::all_of_length)
    }
}

/// Convenience constructor for words known at compile time.
///
/// Panics on characters other than `+` and `-`.
pub fn word(s: &str) -> Word {
    s.parse().expect("valid word literal")
}

impl Mul<usize> for &Word {
    type Output = Word;
    fn mul(self, k: usize) -> Word {
        self.power(k)
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Word> {
        if s == "ε" {
            return Ok(Word::empty());
        }
        s.chars()
            .map(|c| match c {
                '+' => Ok(Sign::Plus),
                '-' | '−' => Ok(Sign::Minus),
                _ => Err(Error::InvalidWord(s.to_string())),
            })
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.0 {
            write!(f, "{}", s.as_char())?;
        }
        Ok(())
    }
}

/// Vertices reachable from `from` by one step of orientation `sign`.
pub(crate) fn step(g: &DiGraph, from: &VertexSet, sign: Sign) -> VertexSet {
    let mut next = VertexSet::empty(g.n());
    for w in from.iter() {
        match sign {
            Sign::Plus => next.union_with(g.out_set(w)),
            Sign::Minus => next.union_with(g.in_set(w)),
        }
    }
    next
}

/// Endpoint relation of a word in a graph: `get(u, v)` holds iff some
/// homomorphism maps `p(x)` from `u` to `v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReachMatrix {
    rows: Vec<VertexSet>,
}

impl ReachMatrix {
    /// Propagates each row's frontier one letter at a time.
    pub fn new(x: &Word, g: &DiGraph) -> ReachMatrix {
        let n = g.n();
        let rows = (0..n)
            .map(|u| x.letters().iter().fold(VertexSet::singleton(n, u), |frontier, &s| step(g, &frontier, s)))
            .collect();
        ReachMatrix { rows }
    }

    pub fn identity(n: usize) -> ReachMatrix {
        ReachMatrix { rows: (0..n).map(|u| VertexSet::singleton(n, u)).collect() }
    }

    pub fn n(&self) -> usize {
        self.rows.len()
    }

    pub fn get(&self, u: Vertex, v: Vertex) -> bool {
        self.rows[u].contains(v)
    }

    pub fn row(&self, u: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.rows[u].iter()
    }

    pub(crate) fn row_set(&self, u: Vertex) -> &VertexSet {
        &self.rows[u]
    }

    pub fn row_nonempty(&self, u: Vertex) -> bool {
        !self.rows[u].is_empty()
    }

    /// Relational composition: first `self`, then `other`.
    pub fn compose(&self, other: &ReachMatrix) -> ReachMatrix {
        let n = self.n();
        let rows = self
            .rows
            .iter()
            .map(|row| {
                let mut out = VertexSet::empty(n);
                for w in row.iter() {
                    out.union_with(&other.rows[w]);
                }
                out
            })
            .collect();
        ReachMatrix { rows }
    }

    pub fn to_bools(&self) -> Vec<Vec<bool>> {
        let n = self.n();
        (0..n).map(|u| (0..n).map(|v| self.get(u, v)).collect()).collect()
    }
}

pub fn reach_matrix(x: &Word, g: &DiGraph) -> ReachMatrix {
    ReachMatrix::new(x, g)
}

/// Images of the vertices of `p(x)` under some homomorphism mapping it from
/// `u` to `v` (or ending anywhere when `v` is `None`).
pub fn walk(x: &Word, g: &DiGraph, u: Vertex, v: Option<Vertex>) -> Option<Vec<Vertex>> {
    let n = g.n();
    let mut layers = vec![VertexSet::singleton(n, u)];
    for &s in x.letters() {
        let next = step(g, layers.last().expect("nonempty"), s);
        layers.push(next);
    }
    let last = layers.last().expect("nonempty");
    let end = match v {
        Some(v) if last.contains(v) => v,
        Some(_) => return None,
        None => last.first()?,
    };
    let mut images = vec![end; x.len() + 1];
    for i in (0..x.len()).rev() {
        let cur = images[i + 1];
        // Predecessor on the walk: an edge of orientation x_i into `cur`.
        let back = step(g, &VertexSet::singleton(n, cur), x.letters()[i].flip());
        images[i] = layers[i].iter().find(|&w| back.contains(w)).expect("layer has a predecessor");
    }
    Some(images)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::{is_isomorphic, HomSearch};

    #[test]
    fn path_shapes() {
        let e = Word::empty().path();
        assert_eq!((e.n(), e.edge_count()), (1, 0));
        assert_eq!(word("+").path().edges(), &[(0, 1)]);
        assert_eq!(word("++-").path().edges(), &[(0, 1), (1, 2), (3, 2)]);
    }

    #[test]
    fn parse_and_print() {
        assert_eq!(word("+-+").to_string(), "+-+");
        assert_eq!("".parse::<Word>().unwrap(), Word::empty());
        assert_eq!("ε".parse::<Word>().unwrap(), Word::empty());
        assert!(matches!("+x".parse::<Word>(), Err(Error::InvalidWord(_))));
    }

    #[test]
    fn powers() {
        assert_eq!(word("+-").power(0), Word::empty());
        assert_eq!(word("+-").power(2), word("+-+-"));
        let q3 = word("+").concat(&word("+-").power(3)).power(3).concat(&word("++"));
        assert_eq!(q3.len(), 23);
    }

    #[test]
    fn heights() {
        assert_eq!(Word::plus(5).height(), 5);
        assert_eq!(word("+-").height(), 1);
        assert_eq!(Word::empty().height(), 0);
        assert_eq!(word("--").height(), 2);
        assert_eq!(word("-+--").height(), 2);
        for k in 1..=5 {
            let q = word("+").concat(&word("+-").power(k)).power(k).concat(&word("++"));
            assert_eq!(q.height(), k + 2);
        }
    }

    fn brute_height(x: &Word) -> usize {
        let l = x.letters();
        let mut best = 0i64;
        for i in 0..=l.len() {
            for j in i..=l.len() {
                let h: i64 = l[i..j].iter().map(|s| if *s == Sign::Plus { 1 } else { -1 }).sum();
                best = best.max(h.abs());
            }
        }
        best as usize
    }

    #[test]
    fn height_matches_subword_enumeration() {
        for x in Word::all_up_to(9) {
            assert_eq!(x.height(), brute_height(&x), "{x}");
        }
    }

    #[test]
    fn reach_basics() {
        let g = DiGraph::from_edges(3, &[(0, 1), (1, 2), (2, 2)]);
        assert_eq!(reach_matrix(&Word::empty(), &g), ReachMatrix::identity(3));
        let adj = reach_matrix(&word("+"), &g);
        for u in 0..3 {
            for v in 0..3 {
                assert_eq!(adj.get(u, v), g.has_edge(u, v));
            }
        }
        // D_3 and its Hamiltonian path 0 -> 1 -> 2 -> 3.
        let d3 = DiGraph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]);
        assert!(reach_matrix(&word("+++"), &d3).get(0, 3));
    }

    #[test]
    fn reverse_complement_gives_isomorphic_path() {
        for x in Word::all_up_to(8) {
            assert!(is_isomorphic(&x.path(), &x.reverse_complement().path()), "{x}");
        }
    }

    #[test]
    fn walk_is_pinned_homomorphism() {
        let g = DiGraph::from_edges(4, &[(0, 1), (2, 1), (2, 3), (3, 0)]);
        let x = word("+-+");
        let r = reach_matrix(&x, &g);
        for u in 0..4 {
            for v in 0..4 {
                let w = walk(&x, &g, u, Some(v));
                assert_eq!(w.is_some(), r.get(u, v));
                if let Some(w) = w {
                    assert_eq!((w[0], w[3]), (u, v));
                    let f = crate::digraph::VertexMap::new(w);
                    assert!(crate::digraph::is_homomorphism(&x.path(), &g, &f).unwrap());
                }
                let pinned = HomSearch::new(&x.path(), &g).pin(0, u).pin(3, v).find();
                assert_eq!(pinned.is_some(), r.get(u, v));
            }
        }
    }
}
