//! Exact bookkeeping of the tree potential and of every construction step.
//!
//! For a partial tree `F` with `u` leaves, `b` of them dead, the potential is
//! `13/15·u + 2/15·b − c_G(F)`. A step that adds `dt` vertices of degree at
//! least 4 and `ds` of degree 3 while changing the leaf counts by `du`, `db`
//! changes the potential by exactly `13·du + 2·db − 6·dt − 3·ds` fifteenths.
//! Once the tree spans the graph every leaf is dead and the potential equals
//! `leaves − cost(G)`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::builder::PartialTree;
use crate::fifteenths::Fifteenths;
use crate::graph::{Graph, VertexClass};
use crate::tree::SpanningTree;

/// First vertex of an MN step: degree at least 4 (`M`) or exactly 3 (`N`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Lead {
    M,
    N,
}

/// How an MN step was resolved.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MnCase {
    One,
    Two,
    ThreeOne,
    ThreeTwo,
    FourOneOne,
    FourOneTwo,
    FourTwo,
    FourThree,
    FourFour,
    FourFiveOne,
    FourFiveTwo,
    FourFiveThree,
    FourFiveFour,
    FourFiveFourOne,
    FourFiveFourTwo,
    FourFiveFive,
}

impl MnCase {
    const ALL: [MnCase; 16] = [
        MnCase::One,
        MnCase::Two,
        MnCase::ThreeOne,
        MnCase::ThreeTwo,
        MnCase::FourOneOne,
        MnCase::FourOneTwo,
        MnCase::FourTwo,
        MnCase::FourThree,
        MnCase::FourFour,
        MnCase::FourFiveOne,
        MnCase::FourFiveTwo,
        MnCase::FourFiveThree,
        MnCase::FourFiveFour,
        MnCase::FourFiveFourOne,
        MnCase::FourFiveFourTwo,
        MnCase::FourFiveFive,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            MnCase::One => "1",
            MnCase::Two => "2",
            MnCase::ThreeOne => "3.1",
            MnCase::ThreeTwo => "3.2",
            MnCase::FourOneOne => "4.1.1",
            MnCase::FourOneTwo => "4.1.2",
            MnCase::FourTwo => "4.2",
            MnCase::FourThree => "4.3",
            MnCase::FourFour => "4.4",
            MnCase::FourFiveOne => "4.5.1",
            MnCase::FourFiveTwo => "4.5.2",
            MnCase::FourFiveThree => "4.5.3",
            MnCase::FourFiveFour => "4.5.4",
            MnCase::FourFiveFourOne => "4.5.4.1",
            MnCase::FourFiveFourTwo => "4.5.4.2",
            MnCase::FourFiveFive => "4.5.5",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum StepLabel {
    A1,
    A2,
    A3,
    A4,
    Mn(Lead, MnCase),
    /// A leaf counted as alive turned out dead.
    Z0,
    /// Level-1 vertex without outside neighbors; degree class `T`, `S`, other.
    Z1(VertexClass),
    /// Adjacent level-1 pair: one of degree 3 and one of degree ≥ 4 (`S`),
    /// or both of degree ≥ 4 (`T`).
    Z2(VertexClass),
    /// Level-1 vertex next to an outside vertex of degree ≤ 2.
    Z3(VertexClass),
    /// Split off the outside part and recurse.
    Z4,
    /// Leaves gained while undoing reductions.
    Lift,
}

impl fmt::Display for StepLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sub = |c: &VertexClass| match c {
            VertexClass::T => "1",
            VertexClass::S => "2",
            VertexClass::Other => "3",
        };
        match self {
            StepLabel::A1 => f.write_str("A1"),
            StepLabel::A2 => f.write_str("A2"),
            StepLabel::A3 => f.write_str("A3"),
            StepLabel::A4 => f.write_str("A4"),
            StepLabel::Mn(lead, case) => write!(f, "{:?}{}", lead, case.as_str()),
            StepLabel::Z0 => f.write_str("Z0"),
            StepLabel::Z1(c) => write!(f, "Z1.{}", sub(c)),
            StepLabel::Z2(c) => write!(f, "Z2.{}", if *c == VertexClass::T { "2" } else { "1" }),
            StepLabel::Z3(c) => write!(f, "Z3.{}", if *c == VertexClass::T { "2" } else { "1" }),
            StepLabel::Z4 => f.write_str("Z4"),
            StepLabel::Lift => f.write_str("lift"),
        }
    }
}

impl FromStr for StepLabel {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let label = match s {
            "A1" => StepLabel::A1,
            "A2" => StepLabel::A2,
            "A3" => StepLabel::A3,
            "A4" => StepLabel::A4,
            "Z0" => StepLabel::Z0,
            "Z1.1" => StepLabel::Z1(VertexClass::T),
            "Z1.2" => StepLabel::Z1(VertexClass::S),
            "Z1.3" => StepLabel::Z1(VertexClass::Other),
            "Z2.1" => StepLabel::Z2(VertexClass::S),
            "Z2.2" => StepLabel::Z2(VertexClass::T),
            "Z3.1" => StepLabel::Z3(VertexClass::S),
            "Z3.2" => StepLabel::Z3(VertexClass::T),
            "Z4" => StepLabel::Z4,
            "lift" => StepLabel::Lift,
            _ => {
                let lead = match s.chars().next() {
                    Some('M') => Lead::M,
                    Some('N') => Lead::N,
                    _ => return Err(format!("unknown step label {s:?}")),
                };
                let case = MnCase::ALL
                    .into_iter()
                    .find(|c| c.as_str() == &s[1..])
                    .ok_or_else(|| format!("unknown step label {s:?}"))?;
                StepLabel::Mn(lead, case)
            }
        };
        Ok(label)
    }
}

/// Guaranteed parameters of a step kind: the change in alive leaves
/// (`du − db`, when fixed) and the least profit in fifteenths.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CatalogRow {
    pub alive_delta: Option<i64>,
    pub min_profit15: i64,
}

/// Lower bounds for every step kind the engine can emit.
pub fn catalog_row(label: StepLabel) -> CatalogRow {
    use MnCase::*;
    let row = |d: i64, p: i64| CatalogRow { alive_delta: Some(d), min_profit15: p };
    match label {
        StepLabel::A1 => row(1, 7),
        StepLabel::A2 => row(1, 1),
        StepLabel::A3 => row(2, 2),
        StepLabel::A4 => row(1, 1),
        StepLabel::Mn(lead, case) => {
            let (m, n) = match case {
                One => ((0, 3), (1, 4)),
                Two => ((2, 5), (3, 6)),
                ThreeOne => ((-4, 5), (-3, 6)),
                ThreeTwo => ((-2, 4), (-1, 5)),
                FourOneOne => ((-1, 2), (0, 3)),
                FourOneTwo => ((0, 3), (1, 4)),
                FourTwo => ((1, 1), (2, 2)),
                FourThree => ((0, 0), (1, 1)),
                FourFour => ((3, 6), (4, 7)),
                FourFiveOne => ((0, 3), (1, 4)),
                FourFiveTwo => ((2, 2), (3, 3)),
                FourFiveThree => ((1, 1), (2, 2)),
                FourFiveFour => ((3, 0), (4, 1)),
                FourFiveFourOne => ((1, 4), (2, 5)),
                FourFiveFourTwo => ((2, 5), (3, 6)),
                FourFiveFive => ((-2, 1), (-1, 2)),
            };
            let (d, p) = if lead == Lead::M { m } else { n };
            row(d, p)
        }
        StepLabel::Z0 => row(-1, 2),
        StepLabel::Z1(VertexClass::T) => row(-4, 2),
        StepLabel::Z1(VertexClass::S) => row(-3, 3),
        StepLabel::Z1(VertexClass::Other) => CatalogRow { alive_delta: None, min_profit15: 2 },
        StepLabel::Z2(VertexClass::T) => row(-6, 0),
        StepLabel::Z2(_) => row(-5, 1),
        StepLabel::Z3(VertexClass::T) => row(-3, 0),
        StepLabel::Z3(_) => row(-2, 1),
        StepLabel::Z4 | StepLabel::Lift => CatalogRow { alive_delta: None, min_profit15: 0 },
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepRecord {
    pub label: StepLabel,
    pub du: i64,
    pub db: i64,
    pub dt: i64,
    pub ds: i64,
    pub profit: Fifteenths,
    pub added_vertices: Vec<usize>,
}

impl StepRecord {
    pub fn new(label: StepLabel, du: i64, db: i64, dt: i64, ds: i64, added_vertices: Vec<usize>) -> Self {
        StepRecord { label, du, db, dt, ds, profit: profit_of(du, db, dt, ds), added_vertices }
    }

    pub fn z0() -> Self {
        StepRecord::new(StepLabel::Z0, 0, 1, 0, 0, Vec::new())
    }

    /// Change in the number of alive leaves.
    pub fn alive_delta(&self) -> i64 {
        self.du - self.db
    }
}

pub fn profit_of(du: i64, db: i64, dt: i64, ds: i64) -> Fifteenths {
    Fifteenths(13 * du + 2 * db - 6 * dt - 3 * ds)
}

/// Recomputes the profit from the record's own counts.
pub fn profit(rec: &StepRecord) -> Fifteenths {
    profit_of(rec.du, rec.db, rec.dt, rec.ds)
}

/// Ledger of a component built recursively during a split step.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NestedLedger {
    /// Index of the split step in the parent ledger.
    pub step_index: usize,
    pub graph: Graph,
    pub tree: SpanningTree,
    pub ledger: Ledger,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Ledger {
    pub base_alpha: Fifteenths,
    pub steps: Vec<StepRecord>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub nested: Vec<NestedLedger>,
}

impl Ledger {
    pub fn new(base_alpha: Fifteenths) -> Self {
        Ledger { base_alpha, steps: Vec::new(), nested: Vec::new() }
    }

    pub fn total(&self) -> Fifteenths {
        self.base_alpha + self.steps.iter().map(|r| r.profit).sum()
    }

    /// Potential after each step, starting with the base.
    pub fn running(&self) -> Vec<Fifteenths> {
        let mut acc = self.base_alpha;
        let mut out = vec![acc];
        for r in &self.steps {
            acc += r.profit;
            out.push(acc);
        }
        out
    }

    /// One line per step: `label du db dt ds profit15`, after a
    /// `# base_alpha <p>/15` header.
    pub fn to_log(&self) -> String {
        let mut out = format!("# base_alpha {}\n", self.base_alpha);
        for r in &self.steps {
            out.push_str(&format!("{} {} {} {} {} {}\n", r.label, r.du, r.db, r.dt, r.ds, r.profit.num()));
        }
        out
    }

    /// Parses [`Ledger::to_log`] output. Added-vertex lists and nested
    /// ledgers are not part of the log.
    pub fn from_log(text: &str) -> Result<Ledger, String> {
        let mut ledger = Ledger::default();
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if let Some(rest) = line.strip_prefix("# base_alpha") {
                ledger.base_alpha = rest.trim().parse()?;
                continue;
            }
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            let [label, du, db, dt, ds, p] = fields[..] else {
                return Err(format!("line {}: expected 6 fields", i + 1));
            };
            let num = |s: &str| s.parse::<i64>().map_err(|e| format!("line {}: {e}", i + 1));
            ledger.steps.push(StepRecord {
                label: label.parse()?,
                du: num(du)?,
                db: num(db)?,
                dt: num(dt)?,
                ds: num(ds)?,
                profit: Fifteenths(num(p)?),
                added_vertices: Vec::new(),
            });
        }
        Ok(ledger)
    }
}

/// `13/15·u(F) + 2/15·b(F) − c_G(F)` for a tree inside `g`.
pub fn alpha_prime(g: &Graph, f: &PartialTree) -> Fifteenths {
    let cost: Fifteenths = f.vertices().map(|v| g.vertex_cost(v)).sum();
    Fifteenths(13 * f.leaf_count() as i64 + 2 * f.dead_count() as i64) - cost
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LedgerMismatch {
    /// Offending step, `None` when the totals disagree.
    pub step: Option<usize>,
    pub reason: String,
}

impl fmt::Display for LedgerMismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.step {
            Some(i) => write!(f, "step {i}: {}", self.reason),
            None => f.write_str(&self.reason),
        }
    }
}

/// Checks that every record's profit matches its counts and that the base
/// potential plus all profits equals `leaves − cost(g)` for `tree`; nested
/// ledgers are checked against their own components.
pub fn verify_ledger(g: &Graph, ledger: &Ledger, tree: &SpanningTree) -> Result<(), LedgerMismatch> {
    if !tree.is_spanning_tree_of(g) {
        return Err(LedgerMismatch { step: None, reason: "tree does not span the graph".into() });
    }
    for (i, r) in ledger.steps.iter().enumerate() {
        if r.profit != profit(r) {
            return Err(LedgerMismatch {
                step: Some(i),
                reason: format!("{} records profit {} but its counts give {}", r.label, r.profit, profit(r)),
            });
        }
    }
    let achieved = Fifteenths::from_int(tree.leaf_count() as i64) - g.cost();
    if ledger.total() != achieved {
        return Err(LedgerMismatch {
            step: None,
            reason: format!("ledger sums to {} but the tree achieves {}", ledger.total(), achieved),
        });
    }
    for nested in &ledger.nested {
        verify_ledger(&nested.graph, &nested.ledger, &nested.tree)
            .map_err(|e| LedgerMismatch { step: Some(nested.step_index), reason: format!("nested build: {e}") })?;
    }
    Ok(())
}

/// Checks every record (nested ones included) against [`catalog_row`]:
/// the alive-leaf change must equal the row where the row fixes it, and the
/// profit must reach the row's minimum.
pub fn check_catalog(ledger: &Ledger) -> Result<(), LedgerMismatch> {
    for (i, r) in ledger.steps.iter().enumerate() {
        let row = catalog_row(r.label);
        if let Some(d) = row.alive_delta {
            if r.alive_delta() != d {
                return Err(LedgerMismatch {
                    step: Some(i),
                    reason: format!("{} changes alive leaves by {}, expected {d}", r.label, r.alive_delta()),
                });
            }
        }
        if r.profit.num() < row.min_profit15 {
            return Err(LedgerMismatch {
                step: Some(i),
                reason: format!("{} has profit {} below {}/15", r.label, r.profit, row.min_profit15),
            });
        }
    }
    for nested in &ledger.nested {
        check_catalog(&nested.ledger)
            .map_err(|e| LedgerMismatch { step: Some(nested.step_index), reason: format!("nested build: {e}") })?;
    }
    Ok(())
}
