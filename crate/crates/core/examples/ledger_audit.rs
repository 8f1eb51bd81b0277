//! Print the step log of a build and re-check it independently.

use leafspan::families::random_connected;
use leafspan::ledger::{check_catalog, Ledger};
use leafspan::{build, verify_ledger};

fn main() -> leafspan::Result<()> {
    let g = random_connected(14, 3, 5, 2024)?;
    let r = build(&g)?;
    let log = r.ledger.to_log();
    print!("{log}");

    let running = r.ledger.running();
    println!("running potential: {}", running.iter().map(|a| a.to_string()).collect::<Vec<_>>().join(" "));
    println!("final alpha {} (ledger total {})", r.alpha, r.ledger.total());

    let reparsed = Ledger::from_log(&log).expect("log round-trips");
    assert_eq!(reparsed.steps.len(), r.ledger.steps.len());
    match verify_ledger(&g, &r.ledger, &r.tree).and_then(|()| check_catalog(&r.ledger)) {
        Ok(()) => println!("ledger verified"),
        Err(e) => println!("ledger mismatch: {e}"),
    }
    Ok(())
}
