use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A tree on vertices `0..n`, stored as sorted adjacency lists.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpanningTree {
    adj: Vec<Vec<usize>>,
}

impl SpanningTree {
    /// Validates that the edges form a tree on exactly `n` vertices.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let g = Graph::from_edges(n, edges).map_err(|e| Error::InvalidTree(e.to_string()))?;
        if n == 0 {
            return Err(Error::InvalidTree("empty tree".into()));
        }
        if g.edge_count() != n - 1 {
            return Err(Error::InvalidTree(format!("{} edges on {n} vertices", g.edge_count())));
        }
        if !g.is_connected() {
            return Err(Error::InvalidTree("not connected".into()));
        }
        Ok(SpanningTree { adj: (0..n).map(|v| g.neighbors(v).to_vec()).collect() })
    }

    /// `parents[v]` is the parent of `v`; exactly one root has `None`.
    pub fn from_parents(parents: &[Option<usize>]) -> Result<Self> {
        let roots = parents.iter().filter(|p| p.is_none()).count();
        if roots != 1 {
            return Err(Error::InvalidTree(format!("{roots} roots")));
        }
        let edges = parents.iter().enumerate().filter_map(|(v, p)| p.map(|p| (v, p)));
        SpanningTree::from_edges(parents.len(), edges)
    }

    pub fn n(&self) -> usize {
        self.adj.len()
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

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, ns)| ns.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub fn leaves(&self) -> Vec<usize> {
        (0..self.n()).filter(|&v| self.degree(v) == 1).collect()
    }

    pub fn leaf_count(&self) -> usize {
        self.adj.iter().filter(|ns| ns.len() == 1).count()
    }

    /// Every tree edge is an edge of `g` and the vertex sets agree.
    pub fn is_spanning_tree_of(&self, g: &Graph) -> bool {
        self.n() == g.n() && self.edges().all(|(u, v)| g.has_edge(u, v))
    }

    /// Parent array of the tree rooted at `root`.
    pub fn parents(&self, root: usize) -> Vec<Option<usize>> {
        let mut parent = vec![None; self.n()];
        let mut seen = vec![false; self.n()];
        seen[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for &w in &self.adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    parent[w] = Some(v);
                    queue.push_back(w);
                }
            }
        }
        parent
    }
}
