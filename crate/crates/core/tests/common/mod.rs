#![allow(dead_code)]

use homdual::DiGraph;
use rand::Rng;

/// Tries every map `g -> h`.
pub fn brute_hom(g: &DiGraph, h: &DiGraph) -> bool {
    brute_hom_where(g, h, |_| true)
}

/// Tries every map `g -> h` accepted by `keep`.
pub fn brute_hom_where(g: &DiGraph, h: &DiGraph, keep: impl Fn(&[usize]) -> bool) -> bool {
    let (n, m) = (g.n(), h.n());
    if n == 0 {
        return true;
    }
    if m == 0 {
        return false;
    }
    let mut f = vec![0; n];
    loop {
        if keep(&f) && g.edges().iter().all(|&(u, v)| h.has_edge(f[u], f[v])) {
            return true;
        }
        let mut i = 0;
        while i < n && f[i] == m - 1 {
            f[i] = 0;
            i += 1;
        }
        if i == n {
            return false;
        }
        f[i] += 1;
    }
}

pub fn labeled_graphs(n: usize) -> impl Iterator<Item = DiGraph> {
    (0..1u64 << (n * n)).map(move |code| DiGraph::from_adjacency_code(n, code))
}

pub fn graphs_up_to(n: usize) -> impl Iterator<Item = DiGraph> {
    (0..=n).flat_map(labeled_graphs)
}

pub fn random_graph(rng: &mut impl Rng, n: usize, density: f64) -> DiGraph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in 0..n {
            if rng.gen_bool(density) {
                edges.push((u, v));
            }
        }
    }
    DiGraph::from_edges(n, &edges)
}
