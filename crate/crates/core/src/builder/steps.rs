//! Step selection and execution. Every step is planned in full against the
//! current tree, then committed in one go.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexClass};
use crate::ledger::{catalog_row, Lead, MnCase, StepLabel, StepRecord};

use super::partial::PartialTree;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StepPlan {
    /// Attach vertices in order; each pair is `(child, parent)`.
    Grow {
        label: StepLabel,
        attachments: Vec<(usize, usize)>,
        tree_size: usize,
    },
    /// Every level-1 vertex has exactly one outside neighbor: cut the outside
    /// part loose and build it separately.
    Split {
        level1: Vec<usize>,
        tree_size: usize,
    },
    Done,
}

struct View<'a> {
    g: &'a Graph,
    f: &'a PartialTree,
}

impl View<'_> {
    fn is_t(&self, v: usize) -> bool {
        self.g.degree(v) >= 4
    }

    fn wdeg(&self, v: usize) -> usize {
        self.f.outside_degree(v)
    }

    fn level1(&self, v: usize) -> bool {
        self.f.is_level1(self.g, v)
    }

    fn first_p(&self, w: usize) -> usize {
        *self.g.neighbors(w).iter().find(|&&v| self.f.contains(v)).expect("level-1 vertex")
    }

    fn w_nbrs(&self, v: usize) -> Vec<usize> {
        self.f.outside_neighbors(self.g, v)
    }

    /// Outside neighbors of `v` not in `taken`.
    fn free_nbrs(&self, v: usize, taken: &[usize]) -> Vec<usize> {
        self.g.neighbors(v).iter().copied().filter(|&w| !self.f.contains(w) && !taken.contains(&w)).collect()
    }

    fn defect(&self, what: &str) -> Error {
        Error::Defect(format!(
            "{what}; tree has {} of {} vertices, outside = {:?}",
            self.f.size(),
            self.f.n(),
            self.f.outside().collect::<Vec<_>>()
        ))
    }
}

/// The first applicable step in priority order
/// A1, A2, A3, A4, M, N, Z1, Z2, Z3, Z4.
pub fn next_step(g: &Graph, f: &PartialTree) -> Result<StepPlan> {
    if g.n() != f.n() {
        return Err(Error::StalePlan(format!("tree over {} vertices, graph has {}", f.n(), g.n())));
    }
    if f.is_spanning() {
        return Ok(StepPlan::Done);
    }
    let v = View { g, f };
    let tree_size = f.size();
    let grow = |label, attachments| Ok(StepPlan::Grow { label, attachments, tree_size });

    for x in f.vertices() {
        if f.tree_degree(x) >= 2 && v.wdeg(x) >= 1 {
            return grow(StepLabel::A1, vec![(v.w_nbrs(x)[0], x)]);
        }
    }
    for x in f.vertices() {
        if v.wdeg(x) >= 2 {
            let ys = v.w_nbrs(x);
            return grow(StepLabel::A2, vec![(ys[0], x), (ys[1], x)]);
        }
    }
    let level1: Vec<usize> = f.outside().filter(|&w| v.level1(w)).collect();
    if level1.is_empty() {
        return Err(v.defect("no outside vertex touches the tree"));
    }
    for &x in &level1 {
        if v.wdeg(x) >= 3 {
            let ys = v.w_nbrs(x);
            let mut att = vec![(x, v.first_p(x))];
            att.extend(ys[..3].iter().map(|&y| (y, x)));
            return grow(StepLabel::A3, att);
        }
    }
    for &x in &level1 {
        if g.degree(x) == 3 && v.wdeg(x) == 1 {
            let y = v.w_nbrs(x)[0];
            if v.is_t(y) && !v.level1(y) {
                let zs = v.free_nbrs(y, &[x]);
                let mut att = vec![(x, v.first_p(x)), (y, x)];
                att.extend(zs[..3].iter().map(|&z| (z, y)));
                return grow(StepLabel::A4, att);
            }
        }
    }
    for lead in [Lead::M, Lead::N] {
        for &x in &level1 {
            let fits = match lead {
                Lead::M => v.is_t(x),
                Lead::N => g.degree(x) == 3,
            };
            if fits && v.wdeg(x) == 2 {
                let (case, att) = plan_mn(&v, x)?;
                return grow(StepLabel::Mn(lead, case), att);
            }
        }
    }
    for &w in &level1 {
        if v.wdeg(w) == 0 {
            return grow(StepLabel::Z1(g.class_of(w)), vec![(w, v.first_p(w))]);
        }
    }
    for &a in &level1 {
        if let Some(&b) = v.w_nbrs(a).iter().find(|&&b| v.level1(b)) {
            let label = match (g.class_of(a), g.class_of(b)) {
                (VertexClass::T, VertexClass::T) => StepLabel::Z2(VertexClass::T),
                (VertexClass::T, VertexClass::S) | (VertexClass::S, VertexClass::T) => StepLabel::Z2(VertexClass::S),
                _ => return Err(v.defect(&format!("adjacent level-1 pair {a}, {b} outside the step catalog"))),
            };
            return grow(label, vec![(a, v.first_p(a)), (b, v.first_p(b))]);
        }
    }
    for &w in &level1 {
        if let Some(&u) = v.w_nbrs(w).iter().find(|&&u| g.degree(u) <= 2) {
            let class = g.class_of(w);
            if class == VertexClass::Other {
                return Err(v.defect(&format!("level-1 vertex {w} of degree {}", g.degree(w))));
            }
            return grow(StepLabel::Z3(class), vec![(w, v.first_p(w)), (u, w)]);
        }
    }
    for &w in &level1 {
        let p = f.tree_neighbors(g, w).len();
        if !v.is_t(w) || v.wdeg(w) != 1 || p < 3 {
            return Err(
                v.defect(&format!("level-1 vertex {w} blocks the split (degree {}, {p} tree neighbors)", g.degree(w)))
            );
        }
    }
    Ok(StepPlan::Split { level1, tree_size })
}

/// Resolves the chain that starts at the level-1 vertex `x` with exactly two
/// outside neighbors.
fn plan_mn(v: &View, x: usize) -> Result<(MnCase, Vec<(usize, usize)>)> {
    let ys = v.w_nbrs(x);
    let (ya, yb) = (ys[0], ys[1]);
    let mut att = vec![(x, v.first_p(x))];
    if !v.is_t(ya) && !v.is_t(yb) {
        att.extend([(ya, x), (yb, x)]);
        return Ok((MnCase::One, att));
    }
    let w1_taken = [x, ya, yb];
    let (y1, y2) = match (v.is_t(ya), v.is_t(yb)) {
        (true, false) => (ya, yb),
        (false, true) => (yb, ya),
        _ => {
            if v.free_nbrs(yb, &w1_taken).len() > v.free_nbrs(ya, &w1_taken).len() {
                (yb, ya)
            } else {
                (ya, yb)
            }
        }
    };
    att.extend([(y1, x), (y2, x)]);

    let zs = v.free_nbrs(y1, &w1_taken);
    if zs.len() >= 3 {
        att.extend(zs[..3].iter().map(|&z| (z, y1)));
        return Ok((MnCase::Two, att));
    }
    if zs.len() <= 1 {
        let case = if v.is_t(y2) { MnCase::ThreeOne } else { MnCase::ThreeTwo };
        return Ok((case, att));
    }
    let (za, zb) = (zs[0], zs[1]);
    att.extend([(za, y1), (zb, y1)]);

    let trio = [y2, za, zb];
    if trio.iter().any(|&u| v.level1(u)) {
        let case = if trio.iter().any(|&u| v.level1(u) && v.is_t(u)) { MnCase::FourOneOne } else { MnCase::FourOneTwo };
        return Ok((case, att));
    }
    if trio.iter().any(|&u| !v.is_t(u)) {
        return Ok((MnCase::FourTwo, att));
    }
    let mut ny2 = v.g.neighbors(y2).to_vec();
    let mut expected = vec![x, y1, za, zb];
    ny2.sort_unstable();
    expected.sort_unstable();
    if ny2 == expected {
        return Ok((MnCase::FourThree, att));
    }

    let w2_taken = [x, ya, yb, za, zb];
    for z in [za, zb] {
        let rest = v.free_nbrs(z, &w2_taken);
        if rest.len() >= 3 {
            att.extend(rest[..3].iter().map(|&r| (r, z)));
            return Ok((MnCase::FourFour, att));
        }
    }
    let (z1, z2) = if !v.g.has_edge(y2, za) {
        (za, zb)
    } else if !v.g.has_edge(y2, zb) {
        (zb, za)
    } else {
        return Err(v.defect(&format!("{y2} is adjacent to both {za} and {zb}")));
    };
    let ps = v.free_nbrs(z1, &w2_taken);
    if ps.len() < 2 {
        return Err(v.defect(&format!("{z1} has {} free outside neighbors", ps.len())));
    }
    let (pa, pb) = (ps[0], ps[1]);
    att.extend([(pa, z1), (pb, z1)]);
    if [pa, pb].iter().any(|&p| v.is_t(p) && v.level1(p)) {
        return Ok((MnCase::FourFiveOne, att));
    }
    if [pa, pb].iter().any(|&p| !v.is_t(p)) {
        return Ok((MnCase::FourFiveTwo, att));
    }
    let w3_taken = [x, ya, yb, za, zb, pa, pb];
    if [y2, z2, pa, pb].iter().any(|&u| v.free_nbrs(u, &w3_taken).is_empty()) {
        return Ok((MnCase::FourFiveThree, att));
    }
    for p in [pa, pb] {
        let qs = v.free_nbrs(p, &w3_taken);
        if qs.len() >= 2 {
            let (qa, qb) = (qs[0], qs[1]);
            att.extend([(qa, p), (qb, p)]);
            let case = if [qa, qb].iter().any(|&q| v.level1(q) && v.is_t(q)) {
                MnCase::FourFiveFourOne
            } else if [qa, qb].iter().any(|&q| v.level1(q)) {
                MnCase::FourFiveFourTwo
            } else {
                MnCase::FourFiveFour
            };
            return Ok((case, att));
        }
    }
    let r = v.free_nbrs(y2, &w3_taken)[0];
    att.push((r, y2));
    Ok((MnCase::FourFiveFive, att))
}

/// Commits a [`StepPlan::Grow`]. The main record claims the catalog's change
/// in alive leaves; every further leaf that died is logged as its own `Z0`.
pub fn apply_step(g: &Graph, f: &mut PartialTree, plan: &StepPlan) -> Result<Vec<StepRecord>> {
    let StepPlan::Grow { label, attachments, tree_size } = plan else {
        return Err(Error::StalePlan("only growth steps can be applied directly".into()));
    };
    if *tree_size != f.size() {
        return Err(Error::StalePlan(format!("planned at tree size {tree_size}, tree now has {}", f.size())));
    }
    let (u0, b0) = (f.leaf_count() as i64, f.dead_count() as i64);
    let mut next = f.clone();
    for &(child, parent) in attachments {
        next.attach(g, child, parent)?;
    }
    *f = next;
    let du = f.leaf_count() as i64 - u0;
    let db = f.dead_count() as i64 - b0;
    let added: Vec<usize> = attachments.iter().map(|&(c, _)| c).collect();
    let dt = added.iter().filter(|&&c| g.degree(c) >= 4).count() as i64;
    let ds = added.iter().filter(|&&c| g.degree(c) == 3).count() as i64;
    let claimed = match catalog_row(*label).alive_delta {
        Some(d) => (du - d).clamp(0, db.max(0)),
        None => db,
    };
    let mut records = vec![StepRecord::new(*label, du, claimed, dt, ds, added)];
    records.extend((claimed..db).map(|_| StepRecord::z0()));
    Ok(records)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::square_of_cycle;

    fn grow_label(plan: &StepPlan) -> StepLabel {
        match plan {
            StepPlan::Grow { label, .. } => *label,
            other => panic!("expected a growth step, got {other:?}"),
        }
    }

    #[test]
    fn a1_on_non_pendant_vertex() {
        // path 0-1-2 with 1 also adjacent to 3
        let g = Graph::from_edges(4, [(0, 1), (1, 2), (1, 3)]).unwrap();
        let mut f = PartialTree::new(&g, 0).unwrap();
        f.attach(&g, 1, 0).unwrap();
        f.attach(&g, 2, 1).unwrap();
        let plan = next_step(&g, &f).unwrap();
        assert_eq!(grow_label(&plan), StepLabel::A1);
        let recs = apply_step(&g, &mut f, &plan).unwrap();
        // the new leaf 3 is dead at once and shows up as a Z0
        assert_eq!(recs.len(), 2);
        assert_eq!((recs[0].du, recs[0].db), (1, 0));
        assert_eq!(recs[1].label, StepLabel::Z0);
        assert_eq!(next_step(&g, &f).unwrap(), StepPlan::Done);
    }

    #[test]
    fn a2_on_leaf() {
        // 0-1, and 1 adjacent to 2 and 3
        let g = Graph::from_edges(4, [(0, 1), (1, 2), (1, 3)]).unwrap();
        let mut f = PartialTree::new(&g, 0).unwrap();
        f.attach(&g, 1, 0).unwrap();
        let plan = next_step(&g, &f).unwrap();
        assert_eq!(grow_label(&plan), StepLabel::A2);
    }

    #[test]
    fn z1_on_degree_four_level1_vertex() {
        let g = square_of_cycle(6).unwrap();
        let mut f = PartialTree::star(&g, 0).unwrap();
        let plan = next_step(&g, &f).unwrap();
        assert_eq!(grow_label(&plan), StepLabel::Z1(VertexClass::T));
        let recs = apply_step(&g, &mut f, &plan).unwrap();
        assert_eq!(recs[0].db, 4);
        assert_eq!(recs[0].profit.num(), 2);
        assert!(f.is_spanning());
    }

    #[test]
    fn stale_plan_rejected() {
        let g = square_of_cycle(8).unwrap();
        let mut f = PartialTree::star(&g, 0).unwrap();
        let plan = next_step(&g, &f).unwrap();
        apply_step(&g, &mut f, &plan).unwrap();
        assert!(matches!(apply_step(&g, &mut f, &plan), Err(Error::StalePlan(_))));
    }
}
