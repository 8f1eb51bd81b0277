//! Seeded bound check over many random graphs, oracle-checked where small.

use leafspan::sweep::RandomSweep;

fn main() {
    let sweep = RandomSweep { sizes: 4..=14, per_size: 40, dmin: 2, dmax: 5, seed: 7, oracle_max: 10 };
    let report = sweep.run();
    let s = &report.summary;
    println!(
        "{} rows, {} bound-ok, {} oracle-checked, {} exclusions, min alpha {}",
        s.rows,
        s.bound_ok,
        s.oracle_checked,
        s.exclusions,
        s.min_alpha.map_or("-".into(), |a| a.to_string())
    );
    for row in report.rows.iter().filter(|r| r.exclusion.is_some()).take(5) {
        println!("  {} is an exclusion: {:?}", row.graph, row.exclusion);
    }
    assert!(report.all_ok());
}
