//! Batch runs over generated graphs, in parallel, reported in input order.

use std::fmt::Write as _;
use std::ops::RangeInclusive;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::builder::build;
use crate::families::FamilySpec;
use crate::fifteenths::Fifteenths;
use crate::oracle::{exact_u, ExclusionKind};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepRow {
    pub graph: String,
    pub n: usize,
    pub e: usize,
    pub s: usize,
    pub t: usize,
    pub cost: Fifteenths,
    pub leaves: Option<usize>,
    /// Exact optimum, for graphs small enough to search.
    pub oracle: Option<usize>,
    pub alpha: Option<Fifteenths>,
    pub bound_ok: bool,
    pub exclusion: Option<ExclusionKind>,
    pub error: Option<String>,
}

impl SweepRow {
    /// Builder leaves above the exact optimum; impossible for a correct build.
    pub fn exceeds_oracle(&self) -> bool {
        matches!((self.leaves, self.oracle), (Some(l), Some(o)) if l > o)
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepSummary {
    pub rows: usize,
    pub bound_ok: usize,
    pub errors: usize,
    pub oracle_checked: usize,
    pub oracle_exceeded: usize,
    pub exclusions: usize,
    pub min_alpha: Option<Fifteenths>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepReport {
    pub rows: Vec<SweepRow>,
    pub summary: SweepSummary,
}

impl SweepReport {
    /// Every row bound-ok and no build beats the exact optimum.
    pub fn all_ok(&self) -> bool {
        self.summary.bound_ok == self.summary.rows && self.summary.oracle_exceeded == 0
    }

    pub fn render_table(&self) -> String {
        let mut out = String::from("graph\tn\te\tS\tT\tcost\tleaves\toracle\talpha\tbound\texclusion\n");
        let opt = |x: Option<String>| x.unwrap_or_else(|| "-".into());
        for r in &self.rows {
            let _ = writeln!(
                out,
                "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
                r.graph,
                r.n,
                r.e,
                r.s,
                r.t,
                r.cost,
                opt(r.leaves.map(|l| l.to_string())),
                opt(r.oracle.map(|o| o.to_string())),
                opt(r.alpha.map(|a| a.to_string())),
                if r.bound_ok { "ok" } else { "FAIL" },
                match (&r.error, r.exclusion) {
                    (Some(e), _) => format!("error: {e}"),
                    (None, Some(x)) => x.to_string(),
                    (None, None) => "-".into(),
                },
            );
        }
        let s = &self.summary;
        let _ = writeln!(
            out,
            "# rows={} bound_ok={} errors={} oracle_checked={} oracle_exceeded={} exclusions={} min_alpha={}",
            s.rows,
            s.bound_ok,
            s.errors,
            s.oracle_checked,
            s.oracle_exceeded,
            s.exclusions,
            opt(s.min_alpha.map(|a| a.to_string())),
        );
        out
    }
}

/// Random graphs per size; degree bounds are clamped to `[1, n − 1]` for
/// each size so that small sizes stay feasible.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RandomSweep {
    pub sizes: RangeInclusive<usize>,
    pub per_size: usize,
    pub dmin: usize,
    pub dmax: usize,
    pub seed: u64,
    pub oracle_max: usize,
}

impl RandomSweep {
    pub fn specs(&self) -> Vec<FamilySpec> {
        let mut out = Vec::new();
        for n in self.sizes.clone() {
            let dmax = self.dmax.min(n - 1).max(1);
            let dmin = self.dmin.clamp(1, dmax);
            for i in 0..self.per_size {
                let seed = self.seed.wrapping_mul(0x9E37_79B9_7F4A_7C15) ^ ((n as u64) << 32 | i as u64);
                out.push(FamilySpec::RandomConnected { n, dmin, dmax, seed });
            }
        }
        out
    }

    pub fn run(&self) -> SweepReport {
        sweep_specs(&self.specs(), self.oracle_max)
    }
}

/// Generates, builds and (up to `oracle_max` vertices) solves every spec.
pub fn sweep_specs(specs: &[FamilySpec], oracle_max: usize) -> SweepReport {
    let rows: Vec<SweepRow> = specs.par_iter().map(|spec| sweep_one(spec, oracle_max)).collect();
    summarize(rows)
}

fn sweep_one(spec: &FamilySpec, oracle_max: usize) -> SweepRow {
    let mut row = SweepRow {
        graph: spec.to_string(),
        n: 0,
        e: 0,
        s: 0,
        t: 0,
        cost: Fifteenths::ZERO,
        leaves: None,
        oracle: None,
        alpha: None,
        bound_ok: false,
        exclusion: None,
        error: None,
    };
    let g = match spec.generate() {
        Ok(g) => g,
        Err(e) => {
            row.error = Some(e.to_string());
            return row;
        }
    };
    (row.n, row.e) = (g.n(), g.edge_count());
    (row.s, row.t) = g.class_counts();
    row.cost = g.cost();
    match build(&g) {
        Ok(r) => {
            row.leaves = Some(r.leaves);
            row.alpha = Some(r.alpha);
            row.bound_ok = r.bound_ok();
            row.exclusion = r.exclusion;
        }
        Err(e) => row.error = Some(e.to_string()),
    }
    if g.n() <= oracle_max {
        match exact_u(&g) {
            Ok(u) => row.oracle = Some(u),
            Err(e) => row.error = Some(e.to_string()),
        }
    }
    row
}

fn summarize(rows: Vec<SweepRow>) -> SweepReport {
    let summary = SweepSummary {
        rows: rows.len(),
        bound_ok: rows.iter().filter(|r| r.bound_ok).count(),
        errors: rows.iter().filter(|r| r.error.is_some()).count(),
        oracle_checked: rows.iter().filter(|r| r.oracle.is_some()).count(),
        oracle_exceeded: rows.iter().filter(|r| r.exceeds_oracle()).count(),
        exclusions: rows.iter().filter(|r| r.exclusion.is_some()).count(),
        min_alpha: rows.iter().filter_map(|r| r.alpha).min(),
    };
    SweepReport { rows, summary }
}
