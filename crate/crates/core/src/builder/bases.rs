use std::fmt;

use serde::{Deserialize, Serialize};

use crate::graph::Graph;

use super::partial::PartialTree;

/// Where a build started.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BaseCase {
    /// Adjacent pair of degree ≥ 4 with disjoint neighborhoods.
    B1,
    /// Degree ≥ 4 vertex next to a vertex of degree ≤ 2.
    B2,
    /// Vertex of degree ≥ 5.
    B3,
    /// Degree-3 vertex next to a vertex of degree ≤ 2.
    B4,
    /// Adjacent degree-4 and degree-3 pair with disjoint neighborhoods.
    B5,
    /// Cubic graph.
    B6,
    /// Star around any degree-4 vertex.
    B7,
    /// Maximum degree at most 2 (an edge or a triangle once reduced).
    Trivial,
    /// Best tree found by exhaustive search, for the exclusion graphs and
    /// graphs one reduction away from them.
    ExclusionDirect,
    /// Exhaustive search after every base hit an engine defect.
    OracleFallback,
}

impl fmt::Display for BaseCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            BaseCase::B1 => "B1",
            BaseCase::B2 => "B2",
            BaseCase::B3 => "B3",
            BaseCase::B4 => "B4",
            BaseCase::B5 => "B5",
            BaseCase::B6 => "B6",
            BaseCase::B7 => "B7",
            BaseCase::Trivial => "trivial",
            BaseCase::ExclusionDirect => "exclusion-direct",
            BaseCase::OracleFallback => "oracle-fallback",
        };
        f.write_str(s)
    }
}

fn disjoint_pairs(g: &Graph, accept: impl Fn(usize, usize) -> bool) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for a in 0..g.n() {
        for &b in g.neighbors(a) {
            if accept(a, b) && g.common_neighbors(a, b).is_empty() {
                out.push((a, b));
            }
        }
    }
    out
}

/// Trees `x − c − y` for non-adjacent degree-4 vertices `x`, `y` with a
/// common neighbor `c`, with every other neighbor of `x` and `y` attached.
/// On a nine-vertex graph where all five leaves of a double star are shared
/// with a second double star, these reach six leaves while no star or
/// double star does.
fn bridged_bases(g: &Graph) -> Vec<PartialTree> {
    let mut out = Vec::new();
    for x in (0..g.n()).filter(|&v| g.degree(v) == 4) {
        for y in (x + 1..g.n()).filter(|&v| g.degree(v) == 4 && !g.has_edge(x, v)) {
            let Some(&c) = g.common_neighbors(x, y).first() else { continue };
            let mut f = PartialTree::new(g, c).expect("vertex in range");
            for (child, parent) in [(x, c), (y, c)] {
                f.attach(g, child, parent).expect("edge exists");
            }
            for hub in [x, y] {
                for w in f.outside_neighbors(g, hub) {
                    f.attach(g, w, hub).expect("edge exists");
                }
            }
            out.push(f);
        }
    }
    out
}

/// Every base tree admitted by the first case that applies, in the order
/// B1, B2, B3, B4, B5, then trivial, B6, B7. Expects a connected reduced
/// graph on at least two vertices.
pub fn choose_bases(g: &Graph) -> Vec<(PartialTree, BaseCase)> {
    let deg = |v: usize| g.degree(v);
    let stars = |vs: Vec<usize>, case| {
        vs.into_iter().map(|v| (PartialTree::star(g, v).expect("vertex in range"), case)).collect::<Vec<_>>()
    };
    let doubles = |pairs: Vec<(usize, usize)>, case| {
        pairs
            .into_iter()
            .map(|(a, b)| (PartialTree::double_star(g, a, b).expect("adjacent pair"), case))
            .collect::<Vec<_>>()
    };
    let verts = |pred: &dyn Fn(usize) -> bool| (0..g.n()).filter(|&v| pred(v)).collect::<Vec<_>>();
    let touches_low = |v: usize| g.neighbors(v).iter().any(|&w| deg(w) <= 2);

    let b1 = disjoint_pairs(g, |a, b| a < b && deg(a) >= 4 && deg(b) >= 4);
    if !b1.is_empty() {
        return doubles(b1, BaseCase::B1);
    }
    let b2 = verts(&|v| deg(v) >= 4 && touches_low(v));
    if !b2.is_empty() {
        return stars(b2, BaseCase::B2);
    }
    let b3 = verts(&|v| deg(v) >= 5);
    if !b3.is_empty() {
        return stars(b3, BaseCase::B3);
    }
    let b4 = verts(&|v| deg(v) == 3 && touches_low(v));
    if !b4.is_empty() {
        return stars(b4, BaseCase::B4);
    }
    let b5 = disjoint_pairs(g, |a, b| deg(a) == 4 && deg(b) == 3);
    if !b5.is_empty() {
        let mut out = doubles(b5, BaseCase::B5);
        out.extend(bridged_bases(g).into_iter().map(|f| (f, BaseCase::B5)));
        return out;
    }
    let max = g.max_degree();
    if max <= 2 {
        return stars(verts(&|v| deg(v) == max), BaseCase::Trivial);
    }
    let b6 = verts(&|v| deg(v) == 4);
    if b6.is_empty() {
        return stars((0..g.n()).collect(), BaseCase::B6);
    }
    stars(b6, BaseCase::B7)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::square_of_cycle;

    #[test]
    fn square_of_cycle_uses_b7() {
        let g = square_of_cycle(6).unwrap();
        let bases = choose_bases(&g);
        assert_eq!(bases.len(), 6);
        for (f, case) in &bases {
            assert_eq!(*case, BaseCase::B7);
            assert_eq!(f.leaf_count(), 4);
        }
    }

    #[test]
    fn degree_five_uses_b3() {
        // wheel on 6 vertices: hub 0 of degree 5, rim of degree 3
        let mut edges: Vec<(usize, usize)> = (1..=5).map(|i| (0, i)).collect();
        edges.extend((1..=5).map(|i| (i, i % 5 + 1)));
        let g = Graph::from_edges(6, edges).unwrap();
        let bases = choose_bases(&g);
        assert_eq!(bases.len(), 1);
        assert_eq!(bases[0].1, BaseCase::B3);
        assert_eq!(bases[0].0.leaf_count(), 5);
    }

    #[test]
    fn disjoint_degree_four_pair_uses_b1() {
        // two K4s joined by the edge 0-4
        let g = Graph::from_edges(
            8,
            [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (4, 5), (4, 6), (4, 7), (5, 6), (5, 7), (0, 4), (2, 3), (6, 7)],
        )
        .unwrap();
        let bases = choose_bases(&g);
        assert_eq!(bases[0].1, BaseCase::B1);
        assert!(bases[0].0.leaf_count() >= 6);
    }

    #[test]
    fn edge_and_triangle_are_trivial() {
        let k2 = Graph::from_edges(2, [(0, 1)]).unwrap();
        assert_eq!(choose_bases(&k2)[0].1, BaseCase::Trivial);
        let k3 = Graph::from_edges(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        let bases = choose_bases(&k3);
        assert_eq!(bases.len(), 3);
        assert!(bases.iter().all(|(f, c)| *c == BaseCase::Trivial && f.is_spanning()));
    }
}
