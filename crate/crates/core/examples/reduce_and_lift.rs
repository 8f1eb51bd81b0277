//! Shrink a graph with the two reduction rules, solve the small graph and
//! carry the tree back.

use leafspan::families::random_connected;
use leafspan::reduction::ReductionEvent;
use leafspan::{build, lift_tree, reduce_fully};

fn main() -> leafspan::Result<()> {
    let g = random_connected(24, 2, 3, 11)?;
    let (reduced, trace) = reduce_fully(&g);
    println!("{} vertices -> {} after {} events", g.n(), reduced.n(), trace.len());
    for event in &trace.events {
        match event {
            ReductionEvent::Suppress { x, a, b, .. } => println!("  R1: drop {x}, join {a}-{b}"),
            ReductionEvent::Contract { a1, a2, .. } => println!("  R2: contract {a1}-{a2}"),
        }
    }
    assert_eq!(g.cost(), reduced.cost());

    let small = build(&reduced)?;
    let lifted = lift_tree(&trace, &small.tree)?;
    assert!(lifted.is_spanning_tree_of(&g));
    println!("leaves: {} on the reduced graph, {} after lifting", small.leaves, lifted.leaf_count());
    Ok(())
}
