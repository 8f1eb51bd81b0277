//! Isomorphism testing for small graphs by backtracking.

use crate::graph::Graph;

/// Whether `g` and `h` are isomorphic.
///
/// Vertices are matched only against vertices with the same degree and
/// triangle count, then extended one at a time while checking adjacency with
/// every vertex already mapped. Intended for graphs of a dozen vertices or so.
pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    find_isomorphism(g, h).is_some()
}

/// An edge-preserving bijection `map` with `map[v]` the image of `v`.
pub fn find_isomorphism(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return None;
    }
    if g.degree_sequence() != h.degree_sequence() {
        return None;
    }
    let sig_g = signatures(g);
    let sig_h = signatures(h);
    let mut sorted_g = sig_g.clone();
    let mut sorted_h = sig_h.clone();
    sorted_g.sort_unstable();
    sorted_h.sort_unstable();
    if sorted_g != sorted_h {
        return None;
    }

    // Most constrained first: high degree, then rare signatures.
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&v| {
        let rarity = sig_h.iter().filter(|&&s| s == sig_g[v]).count();
        (rarity, std::cmp::Reverse(g.degree(v)), v)
    });
    let mut search =
        Search { g, h, sig_g: &sig_g, sig_h: &sig_h, order, map: vec![usize::MAX; g.n()], used: vec![false; h.n()] };
    if search.extend(0) {
        Some(search.map)
    } else {
        None
    }
}

fn signatures(g: &Graph) -> Vec<(usize, usize)> {
    let tri = g.triangle_counts();
    (0..g.n()).map(|v| (g.degree(v), tri[v])).collect()
}

struct Search<'a> {
    g: &'a Graph,
    h: &'a Graph,
    sig_g: &'a [(usize, usize)],
    sig_h: &'a [(usize, usize)],
    order: Vec<usize>,
    map: Vec<usize>,
    used: Vec<bool>,
}

impl Search<'_> {
    fn extend(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let v = self.order[depth];
        for cand in 0..self.h.n() {
            if self.used[cand] || self.sig_h[cand] != self.sig_g[v] {
                continue;
            }
            let consistent =
                self.order[..depth].iter().all(|&w| self.g.has_edge(v, w) == self.h.has_edge(cand, self.map[w]));
            if !consistent {
                continue;
            }
            self.map[v] = cand;
            self.used[cand] = true;
            if self.extend(depth + 1) {
                return true;
            }
            self.used[cand] = false;
            self.map[v] = usize::MAX;
        }
        false
    }
}
