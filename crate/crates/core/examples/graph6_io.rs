//! Read a graph6 catalog, build on every graph and write edge lists back.

use leafspan::build;
use leafspan::io::{parse_any, parse_edge_list, render_edge_list, to_graph6};

const CATALOG: &str = "C~\nDhc\nE}lw\nG}hPW{\n";

fn main() -> leafspan::Result<()> {
    for g in parse_any(CATALOG)? {
        let r = build(&g)?;
        println!("{:8} n={:2} leaves={} alpha={}", to_graph6(&g), g.n(), r.leaves, r.alpha);
        assert_eq!(parse_edge_list(&render_edge_list(&g))?, g);
    }
    Ok(())
}
