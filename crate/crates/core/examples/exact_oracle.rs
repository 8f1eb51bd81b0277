//! Exact maximum leaf count on small graphs, with the minimum connected
//! dominating set that realizes it.

use leafspan::families::{g8, square_of_cycle};
use leafspan::oracle::{classify_exclusion, exact_u, min_cds, witness_tree};

fn main() -> leafspan::Result<()> {
    for (name, g) in
        [("C6^2", square_of_cycle(6)?), ("C7^2", square_of_cycle(7)?), ("C8^2", square_of_cycle(8)?), ("G8", g8())]
    {
        let u = exact_u(&g)?;
        let cds = min_cds(&g)?;
        let tree = witness_tree(&g)?;
        assert_eq!(tree.leaf_count(), u);
        println!("{name:5} u={u} cost={} cds={cds:?} exclusion={:?}", g.cost(), classify_exclusion(&g));
    }
    Ok(())
}
