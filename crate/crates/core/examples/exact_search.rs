//! Exact `sat*(n, P)` for every small catalog poset, with timings.
//!
//! ```text
//! cargo run --release --example exact_search -- 4
//! ```

use std::time::Instant;

use posat::{catalog_up_to, exact_sat_star, SearchConfig};

fn main() -> posat::Result<()> {
    let max_n: usize = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(3);
    for p in catalog_up_to(5) {
        for n in 1..=max_n {
            let started = Instant::now();
            let r = exact_sat_star(n, std::slice::from_ref(&p), &SearchConfig::for_n(n))?;
            println!(
                "{:<12} n={n} sat*={:<3} lower_kind={:<11} nodes={:<9} {:.3}s",
                p.name().unwrap_or("?"),
                r.upper,
                r.lower.certificate.kind(),
                r.nodes,
                started.elapsed().as_secs_f64()
            );
        }
    }
    Ok(())
}
