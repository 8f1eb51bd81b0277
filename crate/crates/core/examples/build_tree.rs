//! Build a many-leaf spanning tree and compare it with the guaranteed count.
//!
//! ```text
//! cargo run --example build_tree
//! ```

use leafspan::families::h_graph;
use leafspan::{build, Graph};

fn main() -> leafspan::Result<()> {
    // a wheel: hub 0 joined to a 7-cycle
    let mut wheel = Graph::new(8);
    for i in 1..8 {
        wheel.add_edge(0, i)?;
        wheel.add_edge(i, i % 7 + 1)?;
    }

    for (name, g) in [("wheel W7", wheel), ("H_3", h_graph(3)?)] {
        let r = build(&g)?;
        println!("{name}: n={} leaves={} cost={} alpha={} base={}", g.n(), r.leaves, r.cost, r.alpha, r.base_case);
        println!("  guaranteed alpha {} -> {}", r.guaranteed_alpha(), if r.bound_ok() { "met" } else { "MISSED" });
        let edges: Vec<String> = r.tree.edges().map(|(u, v)| format!("{u}-{v}")).collect();
        println!("  tree: {}", edges.join(" "));
    }
    Ok(())
}
