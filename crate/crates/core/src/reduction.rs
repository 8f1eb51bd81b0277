//! Degree-2 suppression and degree-3 pair contraction, applied to a
//! fixpoint, plus lifting of spanning trees back through the applied events.
//!
//! Both rules preserve the graph cost, and a spanning tree of the reduced
//! graph lifts to a spanning tree of the original with at least as many
//! leaves.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::tree::SpanningTree;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ReductionKind {
    R1,
    R2,
}

/// One rule application. Vertex ids are those of the graph the event was
/// applied to; `remap` sends them to ids of the resulting graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum ReductionEvent {
    /// `x` has degree 2 and its neighbors `a`, `b` are non-adjacent:
    /// delete `x`, add `ab`.
    Suppress { x: usize, a: usize, b: usize, remap: Vec<Option<usize>> },
    /// `a1`, `a2` are adjacent, both of degree 3, with no common neighbor:
    /// contract `a1a2`. `n1`, `n2` are their neighborhoods minus each other.
    Contract { a1: usize, a2: usize, n1: Vec<usize>, n2: Vec<usize>, remap: Vec<usize> },
}

impl ReductionEvent {
    pub fn kind(&self) -> ReductionKind {
        match self {
            ReductionEvent::Suppress { .. } => ReductionKind::R1,
            ReductionEvent::Contract { .. } => ReductionKind::R2,
        }
    }

    /// Vertex count before the event.
    pub fn pre_n(&self) -> usize {
        match self {
            ReductionEvent::Suppress { remap, .. } => remap.len(),
            ReductionEvent::Contract { remap, .. } => remap.len(),
        }
    }

    /// Re-applies the event to the graph it was found on.
    pub fn apply(&self, g: &Graph) -> Result<Graph> {
        if g.n() != self.pre_n() {
            return Err(Error::InvalidTree(format!("event expects {} vertices, graph has {}", self.pre_n(), g.n())));
        }
        match self {
            ReductionEvent::Suppress { x, a, b, .. } => {
                let (mut h, remap) = g.remove_vertex(*x)?;
                h.add_edge(remap[*a].expect("a != x"), remap[*b].expect("b != x"))?;
                Ok(h)
            }
            ReductionEvent::Contract { a1, a2, .. } => Ok(g.contract(*a1, *a2)?.0),
        }
    }

    /// Turns a spanning tree of the post-event graph into one of the
    /// pre-event graph with no fewer leaves.
    pub fn lift(&self, tree: &SpanningTree) -> Result<SpanningTree> {
        let pre_n = self.pre_n();
        if tree.n() + 1 != pre_n {
            return Err(Error::InvalidTree(format!("tree has {} vertices, event produces {}", tree.n(), pre_n - 1)));
        }
        match self {
            ReductionEvent::Suppress { x, a, b, remap } => {
                let mut back = vec![0; tree.n()];
                for (old, new) in remap.iter().enumerate() {
                    if let Some(new) = new {
                        back[*new] = old;
                    }
                }
                let (na, nb) = (remap[*a].expect("a != x"), remap[*b].expect("b != x"));
                let mut edges: Vec<(usize, usize)> = tree
                    .edges()
                    .filter(|&(p, q)| (p, q) != (na.min(nb), na.max(nb)))
                    .map(|(p, q)| (back[p], back[q]))
                    .collect();
                if tree.has_edge(na, nb) {
                    edges.extend([(*a, *x), (*x, *b)]);
                } else {
                    edges.push((*a, *x));
                }
                SpanningTree::from_edges(pre_n, edges)
            }
            ReductionEvent::Contract { a1, a2, n1, n2, remap } => {
                let merged = remap[*a1];
                let mut back = vec![usize::MAX; tree.n()];
                for (old, &new) in remap.iter().enumerate() {
                    if old != *a1 && old != *a2 {
                        back[new] = old;
                    }
                }
                let mut edges = vec![(*a1, *a2)];
                for (p, q) in tree.edges() {
                    let (end, other) = match (p == merged, q == merged) {
                        (true, _) => (true, q),
                        (_, true) => (true, p),
                        _ => (false, usize::MAX),
                    };
                    if !end {
                        edges.push((back[p], back[q]));
                        continue;
                    }
                    let w = back[other];
                    if n1.contains(&w) {
                        edges.push((*a1, w));
                    } else if n2.contains(&w) {
                        edges.push((*a2, w));
                    } else {
                        return Err(Error::InvalidTree(format!(
                            "tree edge at merged vertex reaches {w}, not a neighbor of {a1} or {a2}"
                        )));
                    }
                }
                SpanningTree::from_edges(pre_n, edges)
            }
        }
    }
}

/// Events in application order.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionTrace {
    pub events: Vec<ReductionEvent>,
}

impl ReductionTrace {
    pub fn is_empty(&self) -> bool {
        self.events.is_empty()
    }

    pub fn len(&self) -> usize {
        self.events.len()
    }

    /// Applies the first `k` events to `g`.
    pub fn replay_prefix(&self, g: &Graph, k: usize) -> Result<Graph> {
        self.events[..k].iter().try_fold(g.clone(), |h, ev| ev.apply(&h))
    }

    pub fn replay(&self, g: &Graph) -> Result<Graph> {
        self.replay_prefix(g, self.events.len())
    }
}

/// The first applicable event: R1 with the smallest suppressed vertex, else
/// R2 with the lexicographically smallest pair.
pub fn find_reduction(g: &Graph) -> Option<ReductionEvent> {
    for x in 0..g.n() {
        if let &[a, b] = g.neighbors(x) {
            if !g.has_edge(a, b) {
                let remap = g.remove_vertex(x).expect("x in range").1;
                return Some(ReductionEvent::Suppress { x, a, b, remap });
            }
        }
    }
    for a1 in 0..g.n() {
        if g.degree(a1) != 3 {
            continue;
        }
        for &a2 in g.neighbors(a1) {
            if a2 > a1 && g.degree(a2) == 3 && g.common_neighbors(a1, a2).is_empty() {
                let n1 = g.neighbors(a1).iter().copied().filter(|&w| w != a2).collect();
                let n2 = g.neighbors(a2).iter().copied().filter(|&w| w != a1).collect();
                let remap = g.contract(a1, a2).expect("adjacent").1;
                return Some(ReductionEvent::Contract { a1, a2, n1, n2, remap });
            }
        }
    }
    None
}

/// Applies rules until neither is applicable.
pub fn reduce_fully(g: &Graph) -> (Graph, ReductionTrace) {
    let mut current = g.clone();
    let mut trace = ReductionTrace::default();
    while let Some(ev) = find_reduction(&current) {
        let next = ev.apply(&current).expect("event found on this graph");
        debug_assert_eq!(next.cost(), current.cost());
        current = next;
        trace.events.push(ev);
    }
    (current, trace)
}

/// Undoes the trace in reverse order.
pub fn lift_tree(trace: &ReductionTrace, reduced_tree: &SpanningTree) -> Result<SpanningTree> {
    trace.events.iter().rev().try_fold(reduced_tree.clone(), |t, ev| ev.lift(&t))
}

/// Whether `g` meets the fixpoint conditions: every degree-2 vertex closes
/// a triangle and every adjacent pair of degree-3 vertices shares a neighbor.
pub fn is_reduced(g: &Graph) -> bool {
    find_reduction(g).is_none()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::square_of_cycle;

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn path_suppresses_middle() {
        let g = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        match find_reduction(&g).unwrap() {
            ReductionEvent::Suppress { x, a, b, .. } => assert_eq!((x, a, b), (1, 0, 2)),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn triangle_is_reduced() {
        assert!(find_reduction(&cycle(3)).is_none());
    }

    #[test]
    fn five_cycle_reduces_to_triangle() {
        let (h, trace) = reduce_fully(&cycle(5));
        assert_eq!((h.n(), h.edge_count()), (3, 3));
        assert_eq!(trace.len(), 2);
        assert!(trace.events.iter().all(|e| e.kind() == ReductionKind::R1));
        assert_eq!(trace.replay(&cycle(5)).unwrap(), h);
    }

    #[test]
    fn c6_squared_is_fixpoint() {
        let g = square_of_cycle(6).unwrap();
        let (h, trace) = reduce_fully(&g);
        assert_eq!(h, g);
        assert!(trace.is_empty());
    }

    #[test]
    fn subdivided_c6_squared_reduces_back() {
        let mut g = square_of_cycle(6).unwrap();
        // subdivide edge 0-1 with a new vertex 6
        let mut h = Graph::new(7);
        g.remove_edge(0, 1);
        for (u, v) in g.edges() {
            h.add_edge(u, v).unwrap();
        }
        h.add_edge(0, 6).unwrap();
        h.add_edge(6, 1).unwrap();
        let (red, trace) = reduce_fully(&h);
        assert_eq!(trace.len(), 1);
        assert_eq!(trace.events[0].kind(), ReductionKind::R1);
        assert!(crate::iso::is_isomorphic(&red, &square_of_cycle(6).unwrap()));
    }

    #[test]
    fn r2_on_disjoint_pair() {
        // 0-1 adjacent degree 3, no shared neighbor; leaves complete it
        let g = Graph::from_edges(6, [(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)]).unwrap();
        // vertex 2..5 have degree 1, so R1 does not fire and R2 does
        let ev = find_reduction(&g).unwrap();
        assert_eq!(ev.kind(), ReductionKind::R2);
    }

    #[test]
    fn lift_r1_with_and_without_edge() {
        // path 0-1-2 plus pendant 3 on 2: x=1 suppressed, tree on 0,2,3 (ids 0,1,2)
        let g = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let ev = find_reduction(&g).unwrap();
        let reduced = ev.apply(&g).unwrap();
        let t = SpanningTree::from_edges(3, reduced.edges()).unwrap();
        let lifted = ev.lift(&t).unwrap();
        assert!(lifted.is_spanning_tree_of(&g));
        assert_eq!(lifted.leaf_count(), t.leaf_count());

        // ab not in the reduced tree: x hangs off a
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (0, 3), (3, 2), (3, 4)]).unwrap();
        let ev = ReductionEvent::Suppress { x: 1, a: 0, b: 2, remap: g.remove_vertex(1).unwrap().1 };
        let reduced = ev.apply(&g).unwrap();
        // reduced ids: 0->0, 2->1, 3->2, 4->3; tree avoids edge 0-1
        let t = SpanningTree::from_edges(4, [(0, 2), (2, 1), (2, 3)]).unwrap();
        assert!(t.is_spanning_tree_of(&reduced));
        let lifted = ev.lift(&t).unwrap();
        assert!(lifted.is_spanning_tree_of(&g));
        assert!(lifted.has_edge(0, 1));
        assert_eq!(lifted.leaf_count(), t.leaf_count());
    }

    #[test]
    fn lift_r2_never_loses_leaves() {
        // 6-vertex example: a1=0, a2=1, n1={2,3}, n2={4,5}, plus a cycle 2-4-3-5-2
        let g = Graph::from_edges(6, [(0, 1), (0, 2), (0, 3), (1, 4), (1, 5), (2, 4), (4, 3), (3, 5), (5, 2)]).unwrap();
        let ev = find_reduction(&g).unwrap();
        assert_eq!(ev.kind(), ReductionKind::R2);
        let reduced = ev.apply(&g).unwrap();
        // every spanning tree of the reduced graph, by brute force over edge subsets
        let edges: Vec<_> = reduced.edges().collect();
        let need = reduced.n() - 1;
        let mut checked = 0;
        for mask in 0u32..(1 << edges.len()) {
            if mask.count_ones() as usize != need {
                continue;
            }
            let chosen = edges.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e);
            let Ok(t) = SpanningTree::from_edges(reduced.n(), chosen) else { continue };
            let lifted = ev.lift(&t).unwrap();
            assert!(lifted.is_spanning_tree_of(&g));
            assert!(lifted.leaf_count() >= t.leaf_count());
            checked += 1;
        }
        assert!(checked > 10);
    }

    #[test]
    fn lift_rejects_wrong_size() {
        let (_, trace) = reduce_fully(&cycle(5));
        let t = SpanningTree::from_edges(2, [(0, 1)]).unwrap();
        assert!(lift_tree(&trace, &t).is_err());
    }
}
