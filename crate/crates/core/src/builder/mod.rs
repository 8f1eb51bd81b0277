//! Spanning-tree construction with guaranteed leaf counts.
//!
//! A build reduces the graph, grows a tree from each admissible base with
//! the prioritized step engine, keeps the tree with the most leaves and
//! lifts it back to the input graph.

mod bases;
mod partial;
mod steps;

pub use bases::{choose_bases, BaseCase};
pub use partial::{levels, PartialTree};
pub use steps::{apply_step, next_step, StepPlan};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fifteenths::Fifteenths;
use crate::graph::Graph;
use crate::ledger::{alpha_prime, Ledger, NestedLedger, StepLabel, StepRecord};
use crate::oracle::{classify_exclusion, witness_tree, ExclusionKind, MAX_ORACLE_N};
use crate::reduction::{lift_tree, reduce_fully, ReductionTrace};
use crate::tree::SpanningTree;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BuildOptions {
    /// Cap on the number of base trees tried per (sub)graph.
    pub max_bases: usize,
}

impl Default for BuildOptions {
    fn default() -> Self {
        BuildOptions { max_bases: 64 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BuildReport {
    pub tree: SpanningTree,
    pub leaves: usize,
    pub cost: Fifteenths,
    /// `leaves − cost`.
    pub alpha: Fifteenths,
    pub ledger: Ledger,
    pub reduction_trace: ReductionTrace,
    pub base_case: BaseCase,
    pub recursion_depth: usize,
    /// Exclusion graph the reduced input is isomorphic to.
    pub exclusion: Option<ExclusionKind>,
    /// Bases abandoned because the engine got stuck; empty on a healthy run.
    pub defects: Vec<String>,
}

impl BuildReport {
    /// The lower bound this graph is entitled to.
    pub fn guaranteed_alpha(&self) -> Fifteenths {
        if self.exclusion.is_some() {
            Fifteenths::EIGHT_FIFTHS
        } else {
            Fifteenths::TWO
        }
    }

    pub fn bound_ok(&self) -> bool {
        self.alpha >= self.guaranteed_alpha()
    }
}

/// Builds with default options.
pub fn build(g: &Graph) -> Result<BuildReport> {
    build_with(g, BuildOptions::default())
}

pub fn build_with(g: &Graph, opts: BuildOptions) -> Result<BuildReport> {
    build_inner(g, opts, 0)
}

struct Run {
    tree: SpanningTree,
    ledger: Ledger,
    depth: usize,
    defects: Vec<String>,
}

fn build_inner(g: &Graph, opts: BuildOptions, depth: usize) -> Result<BuildReport> {
    if g.n() < 2 {
        return Err(Error::TooSmall { min: 2, got: g.n() });
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let (reduced, trace) = reduce_fully(g);
    let exclusion = classify_exclusion(&reduced);

    // Next to an exclusion, stop one event early and search that graph.
    let lift_len = match exclusion {
        Some(_) if !trace.is_empty() => trace.len() - 1,
        _ => trace.len(),
    };
    let work = if lift_len == trace.len() { reduced } else { trace.replay_prefix(g, lift_len)? };

    let (run, base_case) = if exclusion.is_some() {
        (exact_run(&work)?, BaseCase::ExclusionDirect)
    } else {
        ensemble(&work, opts, depth)?
    };

    let lifted_trace = ReductionTrace { events: trace.events[..lift_len].to_vec() };
    let tree = lift_tree(&lifted_trace, &run.tree)?;
    let mut ledger = run.ledger;
    let gain = tree.leaf_count() as i64 - run.tree.leaf_count() as i64;
    if gain > 0 {
        ledger.steps.push(StepRecord::new(StepLabel::Lift, gain, gain, 0, 0, Vec::new()));
    }
    let leaves = tree.leaf_count();
    let cost = g.cost();
    Ok(BuildReport {
        tree,
        leaves,
        cost,
        alpha: Fifteenths::from_int(leaves as i64) - cost,
        ledger,
        reduction_trace: trace,
        base_case,
        recursion_depth: run.depth,
        exclusion,
        defects: run.defects,
    })
}

fn exact_run(g: &Graph) -> Result<Run> {
    let tree = witness_tree(g)?;
    let base_alpha = Fifteenths::from_int(tree.leaf_count() as i64) - g.cost();
    Ok(Run { tree, ledger: Ledger::new(base_alpha), depth: 0, defects: Vec::new() })
}

/// Runs the engine from every base and keeps the tree with the most leaves.
fn ensemble(g: &Graph, opts: BuildOptions, depth: usize) -> Result<(Run, BaseCase)> {
    let mut best: Option<(Run, BaseCase)> = None;
    let mut defects = Vec::new();
    for (base, case) in choose_bases(g).into_iter().take(opts.max_bases.max(1)) {
        match run_engine(g, base, opts, depth) {
            Ok(run) => {
                defects.extend(run.defects.iter().cloned());
                if best.as_ref().is_none_or(|(b, _)| run.tree.leaf_count() > b.tree.leaf_count()) {
                    best = Some((run, case));
                }
            }
            Err(Error::Defect(msg)) => defects.push(format!("{case}: {msg}")),
            Err(e) => return Err(e),
        }
    }
    match best {
        Some((mut run, case)) => {
            run.defects = defects;
            Ok((run, case))
        }
        None if g.n() <= MAX_ORACLE_N => {
            let mut run = exact_run(g)?;
            run.defects = defects;
            Ok((run, BaseCase::OracleFallback))
        }
        None => Err(Error::Defect(defects.join("; "))),
    }
}

/// Grows `f` to a spanning tree of the reduced graph `g`.
fn run_engine(g: &Graph, mut f: PartialTree, opts: BuildOptions, depth: usize) -> Result<Run> {
    let mut ledger = Ledger::new(alpha_prime(g, &f));
    loop {
        match next_step(g, &f)? {
            StepPlan::Done => {
                let tree = f.to_spanning_tree()?;
                return Ok(Run { tree, ledger, depth, defects: Vec::new() });
            }
            plan @ StepPlan::Grow { .. } => {
                let records = apply_step(g, &mut f, &plan)?;
                ledger.steps.extend(records);
            }
            StepPlan::Split { level1, .. } => {
                let split = split_z4(g, &f, &level1, opts, depth)?;
                let index = ledger.steps.len();
                ledger.steps.push(split.record);
                for (graph, report) in split.parts {
                    ledger.nested.push(NestedLedger {
                        step_index: index,
                        graph,
                        tree: report.tree,
                        ledger: report.ledger,
                    });
                }
                return Ok(Run { tree: split.tree, ledger, depth: split.depth, defects: split.defects });
            }
        }
    }
}

struct Split {
    tree: SpanningTree,
    record: StepRecord,
    parts: Vec<(Graph, BuildReport)>,
    depth: usize,
    defects: Vec<String>,
}

/// Cuts the outside part off the tree, builds each of its components on its
/// own and hangs every component back by one edge at its smallest level-1
/// vertex.
fn split_z4(g: &Graph, f: &PartialTree, level1: &[usize], opts: BuildOptions, depth: usize) -> Result<Split> {
    let outside: Vec<usize> = f.outside().collect();
    let (w_graph, w_ids) = g.induced(&outside);
    let mut edges = f.edges();
    let mut parts = Vec::new();
    let mut max_depth = depth + 1;
    let mut defects = Vec::new();
    for comp in w_graph.components() {
        let ids: Vec<usize> = comp.iter().map(|&i| w_ids[i]).collect();
        let (h, back) = g.induced(&ids);
        let report = build_inner(&h, opts, depth + 1)?;
        if report.exclusion.is_some() && report.reduction_trace.is_empty() {
            return Err(Error::Defect(format!("split produced an exclusion component {:?}", ids)));
        }
        edges.extend(report.tree.edges().map(|(a, b)| (back[a], back[b])));
        let w = *ids
            .iter()
            .find(|v| level1.contains(v))
            .ok_or_else(|| Error::Defect(format!("component {ids:?} does not touch the tree")))?;
        let p = *f.tree_neighbors(g, w).first().expect("level-1 vertex");
        edges.push((w, p));
        max_depth = max_depth.max(report.recursion_depth + depth + 1);
        defects.extend(report.defects.iter().cloned());
        parts.push((h, report));
    }
    let tree = SpanningTree::from_edges(g.n(), edges)?;
    let leaves = tree.leaf_count() as i64;
    let dt = outside.iter().filter(|&&v| g.degree(v) >= 4).count() as i64;
    let ds = outside.iter().filter(|&&v| g.degree(v) == 3).count() as i64;
    let record =
        StepRecord::new(StepLabel::Z4, leaves - f.leaf_count() as i64, leaves - f.dead_count() as i64, dt, ds, outside);
    Ok(Split { tree, record, parts, depth: max_depth, defects })
}
