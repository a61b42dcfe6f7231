//! All labeled digraphs on `n` vertices (loops included), optionally one per
//! isomorphism class.
//!
//! A graph on `n <= 5` vertices is its row-major adjacency code, `n²` bits.
//! The class representative is the smallest code over all `n!` relabelings.

use std::fmt;

use crate::digraph::DiGraph;

pub const MAX_ENUMERATION_VERTICES: usize = 5;

/// Identifies an enumerated graph: vertex count and adjacency code.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GraphId {
    pub n: usize,
    pub code: u64,
}

impl GraphId {
    pub fn graph(self) -> DiGraph {
        DiGraph::from_adjacency_code(self.n, self.code)
    }
}

impl fmt::Display for GraphId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.n, self.code)
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                rec(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Relabels adjacency codes by byte-wise lookup tables, one per permutation.
pub struct Canonizer {
    n: usize,
    chunks: usize,
    // tables[perm][chunk][byte]
    tables: Vec<Vec<[u32; 256]>>,
}

impl Canonizer {
    pub fn new(n: usize) -> Canonizer {
        assert!(n <= MAX_ENUMERATION_VERTICES, "canonical codes cover at most 5 vertices");
        let bits = n * n;
        let chunks = bits.div_ceil(8);
        let tables = permutations(n)
            .into_iter()
            .map(|perm| {
                (0..chunks)
                    .map(|chunk| {
                        let mut table = [0u32; 256];
                        for (byte, slot) in table.iter_mut().enumerate() {
                            for bit in 0..8 {
                                let pos = chunk * 8 + bit;
                                if pos < bits && byte >> bit & 1 == 1 {
                                    let (u, v) = (pos / n, pos % n);
                                    *slot |= 1 << (perm[u] * n + perm[v]);
                                }
                            }
                        }
                        table
                    })
                    .collect()
            })
            .collect();
        Canonizer { n, chunks, tables }
    }

    fn relabel(&self, perm: usize, code: u32) -> u32 {
        let t = &self.tables[perm];
        (0..self.chunks).fold(0, |acc, c| acc | t[c][(code >> (8 * c) & 0xff) as usize])
    }

    pub fn canonical(&self, code: u64) -> u64 {
        let code = code as u32;
        (0..self.tables.len()).map(|p| self.relabel(p, code)).min().unwrap_or(code) as u64
    }

    /// True iff no relabeling gives a smaller code.
    pub fn is_canonical(&self, code: u64) -> bool {
        let code = code as u32;
        (0..self.tables.len()).all(|p| self.relabel(p, code) >= code)
    }

    pub fn n(&self) -> usize {
        self.n
    }
}

/// Graph ids on exactly `n` vertices in increasing code order.
pub fn enumerate_ids(n: usize, dedup: bool) -> Vec<GraphId> {
    assert!(n <= MAX_ENUMERATION_VERTICES, "exhaustive enumeration covers n <= 5");
    let total = 1u64 << (n * n);
    if !dedup {
        return (0..total).map(|code| GraphId { n, code }).collect();
    }
    let canon = Canonizer::new(n);
    (0..total).filter(|&code| canon.is_canonical(code)).map(|code| GraphId { n, code }).collect()
}

/// All graphs on exactly `n` vertices.
pub fn enumerate_digraphs(n: usize, dedup: bool) -> impl Iterator<Item = DiGraph> {
    enumerate_ids(n, dedup).into_iter().map(GraphId::graph)
}
