//! Induced saturation checks and greedy saturation.

use posat::{catalog, greedy_saturate, SearchConfig, SetFamily, SetOrdering};

fn main() -> posat::Result<()> {
    let diamond = catalog("diamond", None)?;

    let empty = SetFamily::empty(2)?;
    let report = empty.is_induced_saturated(std::slice::from_ref(&diamond))?;
    println!(
        "empty family: saturated={} ({})",
        report.saturated,
        report.violation.unwrap()
    );

    let b2 = SetFamily::boolean_lattice(2)?;
    let report = b2.is_induced_saturated(std::slice::from_ref(&diamond))?;
    println!(
        "all of 2^[2]: saturated={} ({})",
        report.saturated,
        report.violation.unwrap()
    );

    let lex = SearchConfig {
        ordering: SetOrdering::Lex,
        ..SearchConfig::default()
    };
    let g = greedy_saturate(2, std::slice::from_ref(&diamond), &empty, &lex)?;
    println!("greedy in lex order:\n{g}");

    // several forbidden posets at once: a copy of either one counts
    let both = [catalog("X", None)?, catalog("N", None)?];
    for seed in 0..3 {
        let cfg = SearchConfig {
            ordering: SetOrdering::Random { seed: Some(seed) },
            ..SearchConfig::default()
        };
        let g = greedy_saturate(4, &both, &SetFamily::empty(4)?, &cfg)?;
        assert!(g.is_induced_saturated(&both)?.saturated);
        println!(
            "seed {seed}: {} sets saturated for X and N together",
            g.len()
        );
    }
    Ok(())
}
