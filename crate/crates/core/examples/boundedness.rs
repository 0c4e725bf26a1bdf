//! Blow-ups, the boundedness witness, and the singleton-difference size bound.

use posat::search::{boundedness_witness_check, digraph_lower_bound_check, DigraphBoundVerdict};
use posat::{block_residue_family, catalog_up_to, saturated_families};

fn main() -> posat::Result<()> {
    for p in catalog_up_to(5) {
        let forbidden = std::slice::from_ref(&p);
        for f in saturated_families(3, forbidden)? {
            if let Some(w) = boundedness_witness_check(&f, forbidden)? {
                println!(
                    "{p}: {} sets at n=3 with no pair separating {}, so sat*(m, {p}) <= {} for m >= 3",
                    f.len(),
                    w.i,
                    w.bound
                );
                println!("  lifted to n=4:\n{}", w.blown_up);
                break;
            }
        }
    }

    for n in [9, 16, 25] {
        match digraph_lower_bound_check(&block_residue_family(n)?)? {
            DigraphBoundVerdict::HypothesisHolds { size, bound, .. } => {
                println!("n={n}: every element separated, {size} sets >= {bound}")
            }
            DigraphBoundVerdict::Missing(i) => println!("n={n}: {i} not separated"),
        }
    }
    Ok(())
}
