//! Exact maximum leaf counts for small graphs and recognition of the three
//! exclusion graphs.
//!
//! For `n >= 3` the internal vertices of a spanning tree form a connected
//! dominating set, and any connected dominating set extends to a spanning
//! tree whose leaves are the remaining vertices, so the maximum leaf count is
//! `n` minus the size of a minimum connected dominating set.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::families::{g8, square_of_cycle};
use crate::graph::Graph;
use crate::iso::is_isomorphic;
use crate::tree::SpanningTree;

/// Largest graph the subset search accepts.
pub const MAX_ORACLE_N: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ExclusionKind {
    C6sq,
    C8sq,
    G8,
}

impl ExclusionKind {
    pub const ALL: [ExclusionKind; 3] = [ExclusionKind::C6sq, ExclusionKind::C8sq, ExclusionKind::G8];

    pub fn fixture(self) -> Graph {
        match self {
            ExclusionKind::C6sq => square_of_cycle(6).expect("n >= 5"),
            ExclusionKind::C8sq => square_of_cycle(8).expect("n >= 5"),
            ExclusionKind::G8 => g8(),
        }
    }
}

impl fmt::Display for ExclusionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ExclusionKind::C6sq => "C6sq",
            ExclusionKind::C8sq => "C8sq",
            ExclusionKind::G8 => "G8",
        })
    }
}

/// Which exclusion `g` is, if any.
pub fn classify_exclusion(g: &Graph) -> Option<ExclusionKind> {
    if g.n() != 6 && g.n() != 8 {
        return None;
    }
    if g.edge_count() != 2 * g.n() || (0..g.n()).any(|v| g.degree(v) != 4) {
        return None;
    }
    ExclusionKind::ALL.into_iter().find(|k| k.fixture().n() == g.n() && is_isomorphic(g, &k.fixture()))
}

fn check_input(g: &Graph) -> Result<()> {
    if g.n() > MAX_ORACLE_N {
        return Err(Error::TooLarge { n: g.n(), max: MAX_ORACLE_N });
    }
    if g.n() < 2 {
        return Err(Error::TooSmall { min: 2, got: g.n() });
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(())
}

/// Minimum connected dominating set; among the smallest, the one whose
/// sorted vertex list is lexicographically first.
pub fn min_cds(g: &Graph) -> Result<Vec<usize>> {
    check_input(g)?;
    if g.n() < 3 {
        return Err(Error::TooSmall { min: 3, got: g.n() });
    }
    let n = g.n();
    let closed: Vec<u32> = (0..n).map(|v| g.neighbors(v).iter().fold(1u32 << v, |m, &w| m | 1 << w)).collect();
    let open: Vec<u32> = (0..n).map(|v| closed[v] & !(1 << v)).collect();
    let full: u32 = if n == 32 { u32::MAX } else { (1 << n) - 1 };

    for k in 1..=n {
        let mut idx: Vec<usize> = (0..k).collect();
        loop {
            let mask = idx.iter().fold(0u32, |m, &v| m | 1 << v);
            let dominated = idx.iter().fold(0u32, |m, &v| m | closed[v]);
            if dominated == full && connected_within(mask, &open) {
                return Ok(idx);
            }
            if !next_combination(&mut idx, n) {
                break;
            }
        }
    }
    unreachable!("the full vertex set of a connected graph is a connected dominating set")
}

fn connected_within(mask: u32, open: &[u32]) -> bool {
    let start = mask.trailing_zeros() as usize;
    let mut reached = 1u32 << start;
    let mut frontier = reached;
    while frontier != 0 {
        let v = frontier.trailing_zeros() as usize;
        frontier &= frontier - 1;
        let fresh = open[v] & mask & !reached;
        reached |= fresh;
        frontier |= fresh;
    }
    reached == mask
}

fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let k = idx.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if idx[i] < n - k + i {
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Maximum number of leaves over all spanning trees of `g`.
pub fn exact_u(g: &Graph) -> Result<usize> {
    check_input(g)?;
    if g.n() == 2 {
        return Ok(2);
    }
    Ok(g.n() - min_cds(g)?.len())
}

/// A spanning tree attaining [`exact_u`]: BFS tree inside a minimum connected
/// dominating set, every other vertex hung off its smallest neighbor in the
/// set.
pub fn witness_tree(g: &Graph) -> Result<SpanningTree> {
    check_input(g)?;
    if g.n() == 2 {
        return SpanningTree::from_edges(2, [(0, 1)]);
    }
    let cds = min_cds(g)?;
    Ok(tree_from_cds(g, &cds))
}

/// Spanning tree whose internal vertices lie inside the connected
/// dominating set `cds`.
pub fn tree_from_cds(g: &Graph, cds: &[usize]) -> SpanningTree {
    let mut in_set = vec![false; g.n()];
    for &v in cds {
        in_set[v] = true;
    }
    let mut parent = vec![None; g.n()];
    let mut seen = vec![false; g.n()];
    let root = cds[0];
    seen[root] = true;
    let mut queue = std::collections::VecDeque::from([root]);
    while let Some(v) = queue.pop_front() {
        for &w in g.neighbors(v) {
            if in_set[w] && !seen[w] {
                seen[w] = true;
                parent[w] = Some(v);
                queue.push_back(w);
            }
        }
    }
    for v in 0..g.n() {
        if !in_set[v] {
            let hub = g.neighbors(v).iter().copied().find(|&w| in_set[w]).expect("dominated");
            parent[v] = Some(hub);
        }
    }
    SpanningTree::from_parents(&parent).expect("connected dominating set yields a tree")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::h_graph;
    use crate::Fifteenths;

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn star(k: usize) -> Graph {
        Graph::from_edges(k + 1, (1..=k).map(|i| (0, i))).unwrap()
    }

    /// Independent check: maximum leaf count over every spanning tree, by
    /// enumerating all (n-1)-edge subsets.
    fn brute_force_u(g: &Graph) -> usize {
        let edges: Vec<_> = g.edges().collect();
        let mut best = 0;
        let need = g.n() - 1;
        let m = edges.len();
        let mut idx: Vec<usize> = (0..need).collect();
        loop {
            if let Ok(t) = SpanningTree::from_edges(g.n(), idx.iter().map(|&i| edges[i])) {
                best = best.max(t.leaf_count());
            }
            if !next_combination(&mut idx, m) {
                break;
            }
        }
        best
    }

    #[test]
    fn cycles_have_two_leaves() {
        for n in 3..10 {
            assert_eq!(exact_u(&cycle(n)).unwrap(), 2);
        }
    }

    #[test]
    fn exclusion_values() {
        assert_eq!(exact_u(&square_of_cycle(6).unwrap()).unwrap(), 4);
        assert_eq!(exact_u(&square_of_cycle(8).unwrap()).unwrap(), 5);
        assert_eq!(exact_u(&g8()).unwrap(), 5);
    }

    #[test]
    fn matches_brute_force_on_exclusions() {
        assert_eq!(brute_force_u(&square_of_cycle(6).unwrap()), 4);
        assert_eq!(brute_force_u(&g8()), 5);
    }

    #[test]
    fn min_cds_examples() {
        assert_eq!(min_cds(&star(4)).unwrap(), vec![0]);
        let c6 = min_cds(&square_of_cycle(6).unwrap()).unwrap();
        assert_eq!(c6.len(), 2);
        assert!(square_of_cycle(6).unwrap().has_edge(c6[0], c6[1]));
        assert_eq!(min_cds(&h_graph(2).unwrap()).unwrap().len(), 6);
    }

    #[test]
    fn h2_is_tight() {
        let g = h_graph(2).unwrap();
        let u = exact_u(&g).unwrap();
        assert_eq!(u, 6);
        assert_eq!(Fifteenths::from_int(u as i64) - g.cost(), Fifteenths::TWO);
    }

    #[test]
    fn witness_attains_optimum() {
        for g in [square_of_cycle(7).unwrap(), g8(), h_graph(2).unwrap(), star(5), cycle(6)] {
            let t = witness_tree(&g).unwrap();
            assert!(t.is_spanning_tree_of(&g));
            assert_eq!(t.leaf_count(), exact_u(&g).unwrap());
        }
    }

    #[test]
    fn budget_and_small_inputs() {
        assert_eq!(exact_u(&Graph::from_edges(2, [(0, 1)]).unwrap()).unwrap(), 2);
        assert!(matches!(exact_u(&cycle(17)), Err(Error::TooLarge { .. })));
        assert!(matches!(exact_u(&Graph::new(3)), Err(Error::Disconnected)));
        assert_eq!(exact_u(&Graph::from_edges(5, (1..5).map(|i| (i - 1, i))).unwrap()).unwrap(), 2);
    }

    #[test]
    fn classify_examples() {
        assert_eq!(classify_exclusion(&square_of_cycle(6).unwrap()), Some(ExclusionKind::C6sq));
        assert_eq!(classify_exclusion(&square_of_cycle(8).unwrap()), Some(ExclusionKind::C8sq));
        assert_eq!(classify_exclusion(&square_of_cycle(10).unwrap()), None);
        let perm = [5, 2, 7, 0, 3, 6, 1, 4];
        assert_eq!(classify_exclusion(&g8().relabel(&perm)), Some(ExclusionKind::G8));
        assert_eq!(classify_exclusion(&h_graph(2).unwrap()), None);
    }

    #[test]
    fn exclusions_are_four_regular_with_triangles_everywhere() {
        for k in ExclusionKind::ALL {
            let g = k.fixture();
            assert!((0..g.n()).all(|v| g.degree(v) == 4));
            assert!(g.every_edge_in_triangle());
        }
    }
}
