//! Drive the step engine by hand from a single base tree and watch the
//! potential move.

use leafspan::builder::{apply_step, choose_bases, levels, next_step, StepPlan};
use leafspan::families::random_connected;
use leafspan::ledger::alpha_prime;
use leafspan::reduce_fully;

fn main() -> leafspan::Result<()> {
    let (g, _) = reduce_fully(&random_connected(16, 3, 4, 5)?);
    let (mut f, base) = choose_bases(&g).into_iter().next().expect("graph has a vertex of degree 3");
    println!("base {base}: {} vertices, alpha' {}", f.size(), alpha_prime(&g, &f));

    loop {
        let plan = next_step(&g, &f)?;
        match &plan {
            StepPlan::Grow { label, attachments, .. } => {
                let (level1, _) = levels(&g, &f);
                let records = apply_step(&g, &mut f, &plan)?;
                let gained: Vec<String> = records.iter().map(|r| format!("{} {}", r.label, r.profit)).collect();
                println!(
                    "{:8} +{} vertices ({} at level 1 before) -> {}",
                    label.to_string(),
                    attachments.len(),
                    level1.len(),
                    gained.join(", ")
                );
            }
            StepPlan::Split { level1, .. } => {
                println!("split at level-1 vertices {level1:?}; build() recurses from here");
                break;
            }
            StepPlan::Done => break,
        }
    }
    println!("leaves {} dead {} alpha' {}", f.leaf_count(), f.dead_count(), alpha_prime(&g, &f));
    Ok(())
}
