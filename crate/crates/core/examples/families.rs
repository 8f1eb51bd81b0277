//! The named graph families and the seeded random generator.

use leafspan::io::render_edge_list;
use leafspan::FamilySpec;

fn main() -> leafspan::Result<()> {
    let specs = [
        FamilySpec::SquareOfCycle(6),
        FamilySpec::G8,
        FamilySpec::H(2),
        FamilySpec::RandomConnected { n: 10, dmin: 3, dmax: 4, seed: 1 },
    ];
    for spec in specs {
        let g = spec.generate()?;
        let (s, t) = g.class_counts();
        println!("{spec}: n={} e={} |S|={s} |T|={t} cost={}", g.n(), g.edge_count(), g.cost());
    }
    print!("{}", render_edge_list(&FamilySpec::H(2).generate()?));
    Ok(())
}
