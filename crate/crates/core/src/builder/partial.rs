use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::tree::SpanningTree;

/// A tree grown inside a graph. Vertices outside the tree form the set `W`.
///
/// A leaf is dead when it has no neighbor in `W`; leaf and dead counts are
/// kept up to date on every attachment.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialTree {
    in_tree: Vec<bool>,
    parent: Vec<Option<usize>>,
    tree_deg: Vec<usize>,
    outside_deg: Vec<usize>,
    root: usize,
    size: usize,
    leaves: usize,
    dead: usize,
}

impl PartialTree {
    /// The single-vertex tree `{root}`.
    pub fn new(g: &Graph, root: usize) -> Result<Self> {
        let n = g.n();
        if root >= n {
            return Err(Error::VertexOutOfRange { vertex: root, n });
        }
        let mut outside_deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
        for &w in g.neighbors(root) {
            outside_deg[w] -= 1;
        }
        let mut in_tree = vec![false; n];
        in_tree[root] = true;
        Ok(PartialTree {
            in_tree,
            parent: vec![None; n],
            tree_deg: vec![0; n],
            outside_deg,
            root,
            size: 1,
            leaves: 0,
            dead: 0,
        })
    }

    /// `center` together with all its neighbors.
    pub fn star(g: &Graph, center: usize) -> Result<Self> {
        let mut f = PartialTree::new(g, center)?;
        for &w in g.neighbors(center) {
            f.attach(g, w, center)?;
        }
        Ok(f)
    }

    /// The adjacent centers `a`, `b` together with all their neighbors; a
    /// common neighbor hangs off `a`.
    pub fn double_star(g: &Graph, a: usize, b: usize) -> Result<Self> {
        if !g.has_edge(a, b) {
            return Err(Error::NotAnEdge(a, b));
        }
        let mut f = PartialTree::star(g, a)?;
        for &w in g.neighbors(b) {
            if !f.contains(w) {
                f.attach(g, w, b)?;
            }
        }
        Ok(f)
    }

    pub fn n(&self) -> usize {
        self.in_tree.len()
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn contains(&self, v: usize) -> bool {
        self.in_tree[v]
    }

    pub fn is_spanning(&self) -> bool {
        self.size == self.n()
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.n()).filter(|&v| self.in_tree[v])
    }

    pub fn outside(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.n()).filter(|&v| !self.in_tree[v])
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        self.parent[v]
    }

    pub fn tree_degree(&self, v: usize) -> usize {
        self.tree_deg[v]
    }

    /// Number of neighbors of `v` outside the tree.
    pub fn outside_degree(&self, v: usize) -> usize {
        self.outside_deg[v]
    }

    pub fn is_leaf(&self, v: usize) -> bool {
        self.in_tree[v] && self.tree_deg[v] == 1
    }

    pub fn is_dead(&self, v: usize) -> bool {
        self.is_leaf(v) && self.outside_deg[v] == 0
    }

    pub fn leaf_count(&self) -> usize {
        self.leaves
    }

    pub fn dead_count(&self) -> usize {
        self.dead
    }

    fn weight(&self, v: usize) -> (usize, usize) {
        (self.is_leaf(v) as usize, self.is_dead(v) as usize)
    }

    /// Adds the outside vertex `child` as a neighbor of the tree vertex
    /// `parent`.
    pub fn attach(&mut self, g: &Graph, child: usize, parent: usize) -> Result<()> {
        let n = self.n();
        for v in [child, parent] {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
        }
        if self.in_tree[child] || !self.in_tree[parent] {
            return Err(Error::StalePlan(format!(
                "cannot attach {child} to {parent}: child must be outside and parent inside the tree"
            )));
        }
        if !g.has_edge(child, parent) {
            return Err(Error::NotAnEdge(child, parent));
        }
        let mut touched: Vec<usize> = g.neighbors(child).iter().copied().filter(|&v| self.in_tree[v]).collect();
        touched.push(child);
        for &v in &touched {
            let (l, d) = self.weight(v);
            self.leaves -= l;
            self.dead -= d;
        }
        self.in_tree[child] = true;
        self.parent[child] = Some(parent);
        self.tree_deg[child] += 1;
        self.tree_deg[parent] += 1;
        for &w in g.neighbors(child) {
            self.outside_deg[w] -= 1;
        }
        self.size += 1;
        for &v in &touched {
            let (l, d) = self.weight(v);
            self.leaves += l;
            self.dead += d;
        }
        Ok(())
    }

    /// Tree edges as `(child, parent)` pairs.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n()).filter_map(|v| self.parent[v].map(|p| (v, p))).collect()
    }

    /// Tree neighbors of the outside vertex `w`, ascending.
    pub fn tree_neighbors(&self, g: &Graph, w: usize) -> Vec<usize> {
        g.neighbors(w).iter().copied().filter(|&v| self.in_tree[v]).collect()
    }

    /// Outside neighbors of `v`, ascending.
    pub fn outside_neighbors(&self, g: &Graph, v: usize) -> Vec<usize> {
        g.neighbors(v).iter().copied().filter(|&w| !self.in_tree[w]).collect()
    }

    /// An outside vertex with at least one tree neighbor.
    pub fn is_level1(&self, g: &Graph, v: usize) -> bool {
        !self.in_tree[v] && self.outside_deg[v] < g.degree(v)
    }

    pub fn to_spanning_tree(&self) -> Result<SpanningTree> {
        if !self.is_spanning() {
            return Err(Error::InvalidTree(format!("{} of {} vertices covered", self.size, self.n())));
        }
        SpanningTree::from_parents(&self.parent)
    }
}

/// Outside vertices split by distance to the tree: level 1 touches the tree,
/// level 2 touches level 1 only.
pub fn levels(g: &Graph, f: &PartialTree) -> (Vec<usize>, Vec<usize>) {
    let level1: Vec<usize> = f.outside().filter(|&v| f.is_level1(g, v)).collect();
    let mut is_l1 = vec![false; g.n()];
    for &v in &level1 {
        is_l1[v] = true;
    }
    let level2 = f.outside().filter(|&v| !is_l1[v] && g.neighbors(v).iter().any(|&w| is_l1[w])).collect();
    (level1, level2)
}
