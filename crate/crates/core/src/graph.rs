use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fifteenths::Fifteenths;

/// Degree class of a vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum VertexClass {
    /// Degree exactly 3.
    S,
    /// Degree at least 4.
    T,
    /// Degree at most 2.
    Other,
}

impl VertexClass {
    pub fn of_degree(d: usize) -> Self {
        match d {
            0..=2 => VertexClass::Other,
            3 => VertexClass::S,
            _ => VertexClass::T,
        }
    }

    pub fn cost(self) -> Fifteenths {
        match self {
            VertexClass::T => Fifteenths::TWO_FIFTHS,
            VertexClass::S => Fifteenths::ONE_FIFTH,
            VertexClass::Other => Fifteenths::ZERO,
        }
    }
}

/// A simple undirected graph on vertices `0..n`.
///
/// Neighbor lists are kept sorted and duplicate free.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Graph { adj: vec![Vec::new(); n] }
    }

    /// Builds a graph from an edge list. Duplicate edges collapse; loops and
    /// out-of-range endpoints are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::new(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Inserts `uv`; returns whether the edge was new.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<bool> {
        self.check(u)?;
        self.check(v)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        match self.adj[u].binary_search(&v) {
            Ok(_) => Ok(false),
            Err(pos) => {
                self.adj[u].insert(pos, v);
                let pos = self.adj[v].binary_search(&u).unwrap_err();
                self.adj[v].insert(pos, u);
                Ok(true)
            }
        }
    }

    /// Deletes `uv`; returns whether it was present.
    pub fn remove_edge(&mut self, u: usize, v: usize) -> bool {
        if u >= self.n() || v >= self.n() {
            return false;
        }
        match self.adj[u].binary_search(&v) {
            Ok(pos) => {
                self.adj[u].remove(pos);
                let pos = self.adj[v].binary_search(&u).expect("adjacency is symmetric");
                self.adj[v].remove(pos);
                true
            }
            Err(_) => false,
        }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, ns)| ns.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut seq: Vec<usize> = self.adj.iter().map(Vec::len).collect();
        seq.sort_unstable();
        seq
    }

    pub fn classify(&self, v: usize) -> Result<VertexClass> {
        self.check(v)?;
        Ok(self.class_of(v))
    }

    /// Unchecked variant of [`Graph::classify`].
    pub fn class_of(&self, v: usize) -> VertexClass {
        VertexClass::of_degree(self.degree(v))
    }

    pub fn vertex_cost(&self, v: usize) -> Fifteenths {
        self.class_of(v).cost()
    }

    /// `2/5` per vertex of degree at least 4 plus `1/5` per vertex of degree 3.
    pub fn cost(&self) -> Fifteenths {
        (0..self.n()).map(|v| self.vertex_cost(v)).sum()
    }

    /// Number of vertices of degree 3 and of degree at least 4.
    pub fn class_counts(&self) -> (usize, usize) {
        let s = (0..self.n()).filter(|&v| self.degree(v) == 3).count();
        let t = (0..self.n()).filter(|&v| self.degree(v) >= 4).count();
        (s, t)
    }

    pub fn common_neighbors(&self, u: usize, v: usize) -> Vec<usize> {
        let (a, b) = (&self.adj[u], &self.adj[v]);
        let (mut i, mut j) = (0, 0);
        let mut out = Vec::new();
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    out.push(a[i]);
                    i += 1;
                    j += 1;
                }
            }
        }
        out
    }

    /// Triangles through each vertex.
    pub fn triangle_counts(&self) -> Vec<usize> {
        (0..self.n())
            .map(|v| self.adj[v].iter().map(|&u| self.common_neighbors(u, v).len()).sum::<usize>() / 2)
            .collect()
    }

    pub fn every_edge_in_triangle(&self) -> bool {
        self.edges().all(|(u, v)| !self.common_neighbors(u, v).is_empty())
    }

    /// Merges the endpoints of edge `uv` into one vertex adjacent to
    /// `(N(u) ∪ N(v)) \ {u, v}`.
    ///
    /// The merged vertex takes the smaller id; ids above the larger one shift
    /// down by one. The returned vector maps every old id to its new id.
    pub fn contract(&self, u: usize, v: usize) -> Result<(Graph, Vec<usize>)> {
        self.check(u)?;
        self.check(v)?;
        if !self.has_edge(u, v) {
            return Err(Error::NotAnEdge(u, v));
        }
        let (lo, hi) = if u < v { (u, v) } else { (v, u) };
        let remap: Vec<usize> = (0..self.n())
            .map(|w| match w.cmp(&hi) {
                std::cmp::Ordering::Less => w,
                std::cmp::Ordering::Equal => lo,
                std::cmp::Ordering::Greater => w - 1,
            })
            .collect();
        let mut g = Graph::new(self.n() - 1);
        for (a, b) in self.edges() {
            let (a, b) = (remap[a], remap[b]);
            if a != b {
                g.add_edge(a, b)?;
            }
        }
        Ok((g, remap))
    }

    /// Deletes vertex `x`; ids above `x` shift down by one.
    pub fn remove_vertex(&self, x: usize) -> Result<(Graph, Vec<Option<usize>>)> {
        self.check(x)?;
        let remap: Vec<Option<usize>> = (0..self.n())
            .map(|w| match w.cmp(&x) {
                std::cmp::Ordering::Less => Some(w),
                std::cmp::Ordering::Equal => None,
                std::cmp::Ordering::Greater => Some(w - 1),
            })
            .collect();
        let mut g = Graph::new(self.n() - 1);
        for (a, b) in self.edges() {
            if let (Some(a), Some(b)) = (remap[a], remap[b]) {
                g.add_edge(a, b)?;
            }
        }
        Ok((g, remap))
    }

    /// Subgraph induced by `vertices` (in the given order). The returned
    /// vector maps new ids back to the ids of `self`.
    pub fn induced(&self, vertices: &[usize]) -> (Graph, Vec<usize>) {
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let mut g = Graph::new(vertices.len());
        for (i, &v) in vertices.iter().enumerate() {
            g.adj[i] = self.adj[v].iter().filter_map(|&w| (index[w] != usize::MAX).then_some(index[w])).collect();
            g.adj[i].sort_unstable();
        }
        (g, vertices.to_vec())
    }

    /// Applies a permutation: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        let mut g = Graph::new(self.n());
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]).expect("permutation keeps the graph simple");
        }
        g
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n()];
        let mut parts = Vec::new();
        for s in 0..self.n() {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut part = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for &w in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        part.push(w);
                        queue.push_back(w);
                    }
                }
            }
            part.sort_unstable();
            parts.push(part);
        }
        parts
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.components().len() == 1
    }

    fn check(&self, v: usize) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n() })
        }
    }
}
