use std::io::Read;
use std::ops::RangeInclusive;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use leafspan::families::{random_connected, FamilySpec};
use leafspan::io::{parse_any, render_edge_list, to_graph6};
use leafspan::sweep::{sweep_specs, RandomSweep, SweepReport};
use leafspan::{build_with, exact_u, BuildOptions, Graph};

#[derive(Parser)]
#[command(name = "leafspan", version, about = "Spanning trees with many leaves")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a spanning tree and report leaves, cost and alpha.
    Build {
        /// Edge-list or graph6 file, `-` for stdin.
        #[arg(default_value = "-")]
        input: String,
        /// Print the step ledger after the summary.
        #[arg(long)]
        log_steps: bool,
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = BuildOptions::default().max_bases)]
        max_bases: usize,
    },
    /// Exact maximum leaf count by exhaustive search (at most 16 vertices).
    Oracle {
        #[arg(default_value = "-")]
        input: String,
        #[arg(long)]
        json: bool,
    },
    /// Build many generated graphs and check the bound on each.
    Sweep {
        #[arg(long, value_parser = parse_range, default_value = "3..10")]
        sizes: RangeInclusive<usize>,
        #[arg(long, default_value_t = 20)]
        per_size: usize,
        #[arg(long, default_value_t = 1)]
        dmin: usize,
        #[arg(long, default_value_t = usize::MAX)]
        dmax: usize,
        #[arg(long, env = "LEAFSPAN_SEED", default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 10)]
        oracle_max: usize,
        /// Sweep a named family over `--n` instead of random graphs.
        #[arg(long, value_enum)]
        family: Option<Family>,
        #[arg(long, value_parser = parse_range, default_value = "2..5")]
        n: RangeInclusive<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Print a generated graph.
    Gen {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value_t = 3)]
        dmin: usize,
        #[arg(long, default_value_t = 4)]
        dmax: usize,
        #[arg(long, env = "LEAFSPAN_SEED", default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        graph6: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    /// Square of a cycle.
    C2,
    G8,
    /// Tightness family.
    H,
    Random,
}

fn parse_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    let (a, b) = match s.split_once("..") {
        Some((a, b)) => (a, b.strip_prefix('=').unwrap_or(b)),
        None => (s, s),
    };
    let a: usize = a.trim().parse().map_err(|e| format!("bad range start {a:?}: {e}"))?;
    let b: usize = b.trim().parse().map_err(|e| format!("bad range end {b:?}: {e}"))?;
    if a > b {
        return Err(format!("empty range {s:?}"));
    }
    Ok(a..=b)
}

fn read_graphs(input: &str) -> Result<Vec<Graph>, String> {
    let text = if input == "-" {
        let mut buf = String::new();
        std::io::stdin().read_to_string(&mut buf).map_err(|e| e.to_string())?;
        buf
    } else {
        std::fs::read_to_string(input).map_err(|e| format!("{input}: {e}"))?
    };
    parse_any(&text).map_err(|e| e.to_string())
}

fn family_spec(family: Family, n: Option<usize>) -> Result<FamilySpec, String> {
    let need = || n.ok_or_else(|| "this family needs --n".to_string());
    Ok(match family {
        Family::C2 => FamilySpec::SquareOfCycle(need()?),
        Family::G8 => FamilySpec::G8,
        Family::H => FamilySpec::H(need()?),
        Family::Random => return Err("use `gen --family random` or a random sweep".into()),
    })
}

fn main() -> ExitCode {
    match run(Cli::parse().command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

/// `Ok(false)` when a reported bound check fails.
fn run(command: Command) -> Result<bool, String> {
    match command {
        Command::Build { input, log_steps, json, max_bases } => {
            let mut ok = true;
            for g in read_graphs(&input)? {
                let r = build_with(&g, BuildOptions { max_bases }).map_err(|e| e.to_string())?;
                ok &= r.bound_ok();
                if json {
                    println!("{}", serde_json::to_string_pretty(&r).map_err(|e| e.to_string())?);
                    continue;
                }
                let mut line = format!("leaves={} cost={} alpha={}", r.leaves, r.cost, r.alpha);
                if let Some(x) = r.exclusion {
                    line.push_str(&format!(" exclusion={x}"));
                }
                println!("{line}");
                println!(
                    "base={} reductions={} depth={} bound={}",
                    r.base_case,
                    r.reduction_trace.len(),
                    r.recursion_depth,
                    if r.bound_ok() { "ok" } else { "FAIL" }
                );
                for d in &r.defects {
                    eprintln!("defect: {d}");
                }
                if log_steps {
                    print!("{}", r.ledger.to_log());
                }
            }
            Ok(ok)
        }
        Command::Oracle { input, json } => {
            for g in read_graphs(&input)? {
                let u = exact_u(&g).map_err(|e| e.to_string())?;
                let tree = leafspan::oracle::witness_tree(&g).map_err(|e| e.to_string())?;
                let parents: Vec<String> =
                    tree.parents(0).iter().map(|p| p.map_or("-".into(), |p| p.to_string())).collect();
                if json {
                    println!("{}", json!({ "exact_u": u, "parents": tree.parents(0) }));
                } else {
                    println!("exact_u={u}");
                    println!("parents={}", parents.join(" "));
                }
            }
            Ok(true)
        }
        Command::Sweep { sizes, per_size, dmin, dmax, seed, oracle_max, family, n, json } => {
            let report: SweepReport = match family {
                Some(Family::Random) | None => RandomSweep { sizes, per_size, dmin, dmax, seed, oracle_max }.run(),
                Some(Family::G8) => sweep_specs(&[FamilySpec::G8], oracle_max),
                Some(f) => {
                    let specs = n.map(|k| family_spec(f, Some(k))).collect::<Result<Vec<_>, _>>()?;
                    sweep_specs(&specs, oracle_max)
                }
            };
            if json {
                println!("{}", serde_json::to_string_pretty(&report).map_err(|e| e.to_string())?);
            } else {
                print!("{}", report.render_table());
            }
            Ok(report.all_ok())
        }
        Command::Gen { family, n, dmin, dmax, seed, graph6 } => {
            let g = match family {
                Family::Random => random_connected(n.ok_or("random graphs need --n")?, dmin, dmax, seed),
                f => family_spec(f, n)?.generate(),
            }
            .map_err(|e| e.to_string())?;
            if graph6 {
                println!("{}", to_graph6(&g));
            } else {
                print!("{}", render_edge_list(&g));
            }
            Ok(true)
        }
    }
}
