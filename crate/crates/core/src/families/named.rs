//! The concrete graphs: path families, the `D_s` duals, `G_1`, `G_2`.

use crate::automata::LoopPattern;
use crate::digraph::DiGraph;
use crate::pathwords::{word, Word};

/// `+^s (-+^{s-1})* +` as a loop pattern.
pub fn path_power_pattern(s: usize) -> LoopPattern {
    assert!(s >= 1, "path power family needs s >= 1");
    LoopPattern::new(Word::plus(s), word("-").concat(&Word::plus(s - 1)), word("+")).expect("nonempty loop body")
}

/// `+^s (-+^{s-1})^k +`
pub fn path_power_word(s: usize, k: usize) -> Word {
    path_power_pattern(s).expand(k)
}

/// `P^s_k`: an upward run of `s` edges, `k` zig-zags back down one step and
/// up `s - 1`, and a final forward edge.
pub fn gen_p(s: usize, k: usize) -> DiGraph {
    path_power_word(s, k).path()
}

/// `(+(+-)^k)^k`
pub fn q_prime_word(k: usize) -> Word {
    word("+").concat(&word("+-").power(k)).power(k)
}

/// `(+(+-)^k)^k ++`
pub fn q_word(k: usize) -> Word {
    q_prime_word(k).concat(&word("++"))
}

pub fn gen_q(k: usize) -> DiGraph {
    assert!(k >= 1, "Q_k needs k >= 1");
    q_word(k).path()
}

/// Transitive tournament on `v_0 … v_s` without the edge `v_0 -> v_s`.
pub fn gen_d(s: usize) -> DiGraph {
    assert!(s >= 1, "D_s needs s >= 1");
    let edges: Vec<_> = (0..=s).flat_map(|i| (i + 1..=s).map(move |j| (i, j))).filter(|&e| e != (0, s)).collect();
    DiGraph::from_edges(s + 1, &edges)
}

/// Edges `i -> j` for all `i < j`.
pub fn transitive_tournament(m: usize) -> DiGraph {
    let edges: Vec<_> = (0..m).flat_map(|i| (i + 1..m).map(move |j| (i, j))).collect();
    DiGraph::from_edges(m, &edges)
}

/// Vertex names of `G_1` in index order.
pub const G1_NAMES: [&str; 6] = ["x", "y", "b", "c", "a", "r"];

pub mod g1 {
    pub const X: usize = 0;
    pub const Y: usize = 1;
    pub const B: usize = 2;
    pub const C: usize = 3;
    pub const A: usize = 4;
    pub const R: usize = 5;
}

pub fn gen_g1() -> DiGraph {
    use g1::*;
    DiGraph::from_edges(6, &[(X, B), (X, C), (Y, C), (Y, A), (B, A), (B, R), (C, A), (A, R)])
}

/// Vertex names of `G_2` in index order.
pub const G2_NAMES: [&str; 7] = ["x", "y", "b", "c", "a", "r", "s"];

pub mod g2 {
    pub const X: usize = 0;
    pub const Y: usize = 1;
    pub const B: usize = 2;
    pub const C: usize = 3;
    pub const A: usize = 4;
    pub const R: usize = 5;
    pub const S: usize = 6;
}

/// The figure lists `a -> r` twice; it is one edge here.
pub fn gen_g2() -> DiGraph {
    use g2::*;
    DiGraph::from_edges(
        7,
        &[
            (X, B),
            (X, A),
            (X, C),
            (Y, C),
            (Y, R),
            (Y, S),
            (Y, A),
            (B, A),
            (B, R),
            (B, S),
            (C, A),
            (A, R),
            (A, R),
            (A, S),
            (R, S),
            (C, R),
        ],
    )
}
