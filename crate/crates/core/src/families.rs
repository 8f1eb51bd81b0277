//! Generators for the named graphs and for seeded random inputs.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

const MAX_ATTEMPTS: usize = 500;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum FamilySpec {
    SquareOfCycle(usize),
    G8,
    H(usize),
    RandomConnected { n: usize, dmin: usize, dmax: usize, seed: u64 },
}

impl FamilySpec {
    pub fn generate(&self) -> Result<Graph> {
        match *self {
            FamilySpec::SquareOfCycle(n) => square_of_cycle(n),
            FamilySpec::G8 => Ok(g8()),
            FamilySpec::H(n) => h_graph(n),
            FamilySpec::RandomConnected { n, dmin, dmax, seed } => random_connected(n, dmin, dmax, seed),
        }
    }
}

impl std::fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match *self {
            FamilySpec::SquareOfCycle(n) => write!(f, "c2:{n}"),
            FamilySpec::G8 => f.write_str("g8"),
            FamilySpec::H(n) => write!(f, "h:{n}"),
            FamilySpec::RandomConnected { n, dmin, dmax, seed } => {
                write!(f, "random:n={n},dmin={dmin},dmax={dmax},seed={seed}")
            }
        }
    }
}

/// `C_n²`: vertex `i` adjacent to `i±1` and `i±2` modulo `n`.
pub fn square_of_cycle(n: usize) -> Result<Graph> {
    if n < 5 {
        return Err(Error::InvalidFamily(format!("square of cycle needs n >= 5, got {n}")));
    }
    let edges = (0..n).flat_map(|i| [(i, (i + 1) % n), (i, (i + 2) % n)]);
    Graph::from_edges(n, edges)
}

/// The third exclusion graph, labelled `a1 a2 r1 r2 r3 b1 b2 b3` = `0..8`.
///
/// `a1a2` is an edge, both `a`s see every `r`, the `b`s form a triangle and
/// each `r` sees the two `b`s other than its own index. The `r`s are pairwise
/// non-adjacent.
pub fn g8() -> Graph {
    const A: [usize; 2] = [0, 1];
    const R: [usize; 3] = [2, 3, 4];
    const B: [usize; 3] = [5, 6, 7];
    let mut edges = vec![(A[0], A[1]), (B[0], B[1]), (B[0], B[2]), (B[1], B[2])];
    for a in A {
        for r in R {
            edges.push((a, r));
        }
    }
    for (i, r) in R.into_iter().enumerate() {
        for (j, b) in B.into_iter().enumerate() {
            if i != j {
                edges.push((r, b));
            }
        }
    }
    Graph::from_edges(8, edges).expect("fixture is simple")
}

/// Vertex ids of block `i` of [`h_graph`]: `(x, y, z, v, a, b)`.
pub fn h_block(i: usize) -> [usize; 6] {
    let base = 6 * i;
    [base, base + 1, base + 2, base + 3, base + 4, base + 5]
}

/// Cycle of `n` blocks; each block is a `K4` on `x y z v` with `a` joined to
/// `x, y` and `b` joined to `z, v`, and `b_i` is joined to `a_{i+1}`.
pub fn h_graph(n: usize) -> Result<Graph> {
    if n < 2 {
        return Err(Error::InvalidFamily(format!("H_n needs n >= 2, got {n}")));
    }
    let mut g = Graph::new(6 * n);
    for i in 0..n {
        let [x, y, z, v, a, b] = h_block(i);
        for (p, q) in [(x, y), (x, z), (x, v), (y, z), (y, v), (z, v), (a, x), (a, y), (b, z), (b, v)] {
            g.add_edge(p, q)?;
        }
        let next_a = h_block((i + 1) % n)[4];
        g.add_edge(b, next_a)?;
    }
    Ok(g)
}

/// Seeded connected graph with every degree in `[dmin, dmax]`.
///
/// A random tree with bounded degree is grown first, then low-degree
/// vertices are paired up, then extra edges are sprinkled with a density
/// drawn per attempt. Attempts that end with a vertex below `dmin` are
/// rejected and retried with the same stream.
pub fn random_connected(n: usize, dmin: usize, dmax: usize, seed: u64) -> Result<Graph> {
    if n < 2 {
        return Err(Error::InvalidFamily(format!("need n >= 2, got {n}")));
    }
    if dmin == 0 || dmin > dmax || dmax >= n {
        return Err(Error::InvalidFamily(format!(
            "degree bounds must satisfy 1 <= dmin <= dmax < n, got dmin={dmin} dmax={dmax} n={n}"
        )));
    }
    if n > 2 && dmax < 2 {
        return Err(Error::InvalidFamily(format!("a connected graph on {n} vertices needs dmax >= 2")));
    }
    if dmin == dmax && (n * dmin) % 2 == 1 {
        return Err(Error::InvalidFamily(format!("no {dmin}-regular graph on {n} vertices")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..MAX_ATTEMPTS {
        if let Some(g) = attempt(n, dmin, dmax, &mut rng) {
            return Ok(g);
        }
    }
    Err(Error::Generation {
        attempts: MAX_ATTEMPTS,
        reason: format!("could not reach min degree {dmin} under max degree {dmax} on {n} vertices"),
    })
}

fn attempt(n: usize, dmin: usize, dmax: usize, rng: &mut ChaCha8Rng) -> Option<Graph> {
    let mut g = Graph::new(n);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    for i in 1..n {
        let open: Vec<usize> = order[..i].iter().copied().filter(|&u| g.degree(u) < dmax).collect();
        let &parent = open.choose(rng)?;
        g.add_edge(order[i], parent).ok()?;
    }

    let mut pairs: Vec<(usize, usize)> =
        (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|&(u, v)| !g.has_edge(u, v)).collect();
    pairs.shuffle(rng);
    for &(u, v) in &pairs {
        let low = g.degree(u) < dmin || g.degree(v) < dmin;
        if low && g.degree(u) < dmax && g.degree(v) < dmax {
            g.add_edge(u, v).ok()?;
        }
    }
    // a vertex still short of dmin splits an edge between two non-neighbors
    for v in 0..n {
        while g.degree(v) < dmin {
            if !repair(&mut g, v, dmax, rng) {
                return None;
            }
        }
    }

    let density: f64 = rng.gen();
    pairs.shuffle(rng);
    for &(u, v) in &pairs {
        if !g.has_edge(u, v) && g.degree(u) < dmax && g.degree(v) < dmax && rng.gen_bool(density) {
            g.add_edge(u, v).ok()?;
        }
    }
    (g.is_connected() && (0..n).all(|v| (dmin..=dmax).contains(&g.degree(v)))).then_some(g)
}

/// Replaces an edge `ab` with `a`, `b` both non-adjacent to `v` by the path
/// `a v b`. Degrees of `a` and `b` are unchanged and connectivity is kept.
fn repair(g: &mut Graph, v: usize, dmax: usize, rng: &mut ChaCha8Rng) -> bool {
    if g.degree(v) + 2 > dmax {
        return false;
    }
    let candidates: Vec<(usize, usize)> =
        g.edges().filter(|&(a, b)| a != v && b != v && !g.has_edge(v, a) && !g.has_edge(v, b)).collect();
    let Some(&(a, b)) = candidates.choose(rng) else {
        return false;
    };
    g.remove_edge(a, b);
    g.add_edge(v, a).expect("checked non-adjacent");
    g.add_edge(v, b).expect("checked non-adjacent");
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::iso::is_isomorphic;

    #[test]
    fn square_of_cycle_examples() {
        let c6 = square_of_cycle(6).unwrap();
        assert_eq!((c6.n(), c6.edge_count()), (6, 12));
        let c8 = square_of_cycle(8).unwrap();
        assert_eq!((c8.n(), c8.edge_count()), (8, 16));
        let k5 = square_of_cycle(5).unwrap();
        assert_eq!(k5.edge_count(), 10);
        assert!(square_of_cycle(4).is_err());
    }

    #[test]
    fn square_of_cycle_is_vertex_transitive_looking() {
        for n in 5..12 {
            let g = square_of_cycle(n).unwrap();
            assert!((0..n).all(|v| g.degree(v) == 4));
            let tri = g.triangle_counts();
            assert!(tri.iter().all(|&t| t == tri[0]), "n={n}: {tri:?}");
        }
    }

    #[test]
    fn g8_structure() {
        let g = g8();
        assert_eq!((g.n(), g.edge_count()), (8, 16));
        assert!((0..8).all(|v| g.degree(v) == 4));
        assert!(g.every_edge_in_triangle());
        for r in [2, 3, 4] {
            for s in [2, 3, 4] {
                assert!(!g.has_edge(r, s));
            }
        }
        assert!(!is_isomorphic(&g, &square_of_cycle(8).unwrap()));
    }

    #[test]
    fn h_graph_structure() {
        for n in 2..7 {
            let g = h_graph(n).unwrap();
            assert_eq!(g.n(), 6 * n);
            assert_eq!(g.edge_count(), 11 * n);
            let (s, t) = g.class_counts();
            assert_eq!((s, t), (2 * n, 4 * n));
            assert_eq!(g.cost(), crate::Fifteenths::from_int(2 * n as i64));
            assert!(g.is_connected());
        }
        assert_eq!(h_graph(3).unwrap().n(), 18);
        assert!(h_graph(1).is_err());
    }

    #[test]
    fn h2_leaf_sets_never_disconnect() {
        let g = h_graph(2).unwrap();
        let edges: Vec<(usize, usize)> = g.edges().collect();
        let mut trees = 0;
        let mut pick = Vec::with_capacity(g.n() - 1);
        enumerate_trees(&g, &edges, 0, &mut pick, &mut |tree| {
            trees += 1;
            let keep: Vec<usize> = (0..g.n()).filter(|&v| tree.degree(v) > 1).collect();
            assert!(g.induced(&keep).0.is_connected());
        });
        assert!(trees > 0);
    }

    fn enumerate_trees(
        g: &Graph,
        edges: &[(usize, usize)],
        from: usize,
        pick: &mut Vec<(usize, usize)>,
        visit: &mut dyn FnMut(&crate::SpanningTree),
    ) {
        if pick.len() == g.n() - 1 {
            if let Ok(t) = crate::SpanningTree::from_edges(g.n(), pick.iter().copied()) {
                visit(&t);
            }
            return;
        }
        if edges.len() - from < g.n() - 1 - pick.len() || creates_cycle(g.n(), pick) {
            return;
        }
        for i in from..edges.len() {
            pick.push(edges[i]);
            enumerate_trees(g, edges, i + 1, pick, visit);
            pick.pop();
        }
    }

    fn creates_cycle(n: usize, edges: &[(usize, usize)]) -> bool {
        let mut root: Vec<usize> = (0..n).collect();
        fn find(root: &mut [usize], v: usize) -> usize {
            let mut v = v;
            while root[v] != v {
                root[v] = root[root[v]];
                v = root[v];
            }
            v
        }
        edges.iter().any(|&(a, b)| {
            let (ra, rb) = (find(&mut root, a), find(&mut root, b));
            root[ra] = rb;
            ra == rb
        })
    }

    #[test]
    fn random_single_edge() {
        for seed in 0..5 {
            let g = random_connected(2, 1, 1, seed).unwrap();
            assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1)]);
        }
    }

    #[test]
    fn random_is_deterministic() {
        let a = random_connected(12, 2, 5, 99).unwrap();
        let b = random_connected(12, 2, 5, 99).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn random_respects_bounds() {
        for seed in 0..50 {
            let g = random_connected(10, 3, 4, seed).unwrap();
            assert!(g.is_connected());
            assert!((0..10).all(|v| (3..=4).contains(&g.degree(v))));
        }
    }

    #[test]
    fn random_rejects_bad_parameters() {
        assert!(random_connected(5, 3, 2, 0).is_err());
        assert!(random_connected(5, 1, 5, 0).is_err());
        assert!(random_connected(5, 3, 3, 0).is_err());
        assert!(random_connected(4, 1, 1, 0).is_err());
    }
}
