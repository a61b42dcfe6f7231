use super::{DiGraph, Vertex, VertexMap};

fn signature(g: &DiGraph, v: Vertex) -> (usize, usize, bool) {
    (g.out_degree(v), g.in_degree(v), g.has_loop(v))
}

/// An edge-preserving bijection whose inverse also preserves edges.
pub fn find_isomorphism(g: &DiGraph, h: &DiGraph) -> Option<VertexMap> {
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return None;
    }
    let mut gs: Vec<_> = (0..g.n()).map(|v| signature(g, v)).collect();
    let mut hs: Vec<_> = (0..h.n()).map(|v| signature(h, v)).collect();
    let sig_g = gs.clone();
    let sig_h = hs.clone();
    gs.sort_unstable();
    hs.sort_unstable();
    if gs != hs {
        return None;
    }

    // Visit vertices so each one after the first in its component has an
    // already-placed neighbour.
    let order: Vec<Vertex> = g
        .connected_components()
        .into_iter()
        .flat_map(|comp| {
            let start = *comp
                .iter()
                .max_by_key(|&&v| (g.out_degree(v) + g.in_degree(v), std::cmp::Reverse(v)))
                .expect("nonempty component");
            let mut seen = vec![start];
            let mut i = 0;
            while i < seen.len() {
                let u = seen[i];
                i += 1;
                for w in g.successors(u).chain(g.predecessors(u)) {
                    if !seen.contains(&w) {
                        seen.push(w);
                    }
                }
            }
            seen
        })
        .collect();

    let mut image = vec![usize::MAX; g.n()];
    let mut used = vec![false; h.n()];
    if extend(g, h, &order, 0, &sig_g, &sig_h, &mut image, &mut used) {
        Some(VertexMap::new(image))
    } else {
        None
    }
}

#[allow(clippy::too_many_arguments)]
fn extend(
    g: &DiGraph,
    h: &DiGraph,
    order: &[Vertex],
    depth: usize,
    sig_g: &[(usize, usize, bool)],
    sig_h: &[(usize, usize, bool)],
    image: &mut [Vertex],
    used: &mut [bool],
) -> bool {
    let Some(&u) = order.get(depth) else {
        return true;
    };
    for a in 0..h.n() {
        if used[a] || sig_g[u] != sig_h[a] {
            continue;
        }
        let consistent = order[..depth].iter().all(|&w| {
            let b = image[w];
            g.has_edge(u, w) == h.has_edge(a, b) && g.has_edge(w, u) == h.has_edge(b, a)
        });
        if !consistent {
            continue;
        }
        image[u] = a;
        used[a] = true;
        if extend(g, h, order, depth + 1, sig_g, sig_h, image, used) {
            return true;
        }
        used[a] = false;
    }
    image[u] = usize::MAX;
    false
}

pub fn is_isomorphic(g: &DiGraph, h: &DiGraph) -> bool {
    find_isomorphism(g, h).is_some()
}
