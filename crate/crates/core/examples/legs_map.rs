//! The injective legs witness map on saturated families.

use posat::{catalog, double_legs_images, legs_witness_map, saturated_families};

fn main() -> posat::Result<()> {
    let wedge = catalog("wedge", Some(2))?;
    let families = saturated_families(3, std::slice::from_ref(&wedge))?;
    let f = families
        .iter()
        .find(|f| (1..=3).any(|i| !f.contains_bits(1 << (i - 1))))
        .expect("a family missing a singleton");
    println!("family:\n{f}");
    for e in legs_witness_map(f, &wedge)?.entries {
        match e.copy {
            None => println!("  {} -> {} (singleton present)", e.i, e.image),
            Some(c) => println!(
                "  {} -> {} via other leg {} and copy {:?}",
                e.i,
                e.image,
                c.other_leg,
                c.sets.iter().map(|s| s.to_string()).collect::<Vec<_>>()
            ),
        }
    }

    let x = catalog("X", None)?;
    let q = posat::x_upper_family(4)?;
    let d = double_legs_images(&q, &x)?;
    println!(
        "\nX at n=4: direct {:?}, transported {:?}, disjoint={}",
        d.direct.iter().map(|s| s.to_string()).collect::<Vec<_>>(),
        d.transported
            .iter()
            .map(|s| s.to_string())
            .collect::<Vec<_>>(),
        d.is_disjoint_and_proper()
    );
    Ok(())
}
