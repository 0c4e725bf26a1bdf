//! The standard upper-bound families and their saturation status.

use posat::{
    block_residue_family, catalog, wedge_upper_family, x_upper_family, xell_upper_family,
    y_upper_family,
};

fn main() -> posat::Result<()> {
    let (y, x) = (catalog("Y", None)?, catalog("X", None)?);
    for n in 3..=6 {
        let fy = y_upper_family(n)?;
        let fx = x_upper_family(n)?;
        println!(
            "n={n}: Y family {} sets saturated={}, X family {} sets saturated={}",
            fy.len(),
            fy.is_induced_saturated(std::slice::from_ref(&y))?.saturated,
            fx.len(),
            fx.is_induced_saturated(std::slice::from_ref(&x))?.saturated
        );
    }

    for (n, l) in [(5, 2), (6, 2), (7, 3)] {
        let wedge = catalog("wedge", Some(l + 1))?;
        let xell = catalog("Xell", Some(l))?;
        let fw = wedge_upper_family(n, l)?;
        let fx = xell_upper_family(n, l)?;
        let rx = fx.is_induced_saturated(std::slice::from_ref(&xell))?;
        println!(
            "n={n} l={l}: wedge({}) family {} sets saturated={}; with complements {} sets, Xell({l}) saturated={}{}",
            l + 1,
            fw.len(),
            fw.is_induced_saturated(std::slice::from_ref(&wedge))?.saturated,
            fx.len(),
            rx.saturated,
            rx.violation.map(|v| format!(" ({v})")).unwrap_or_default()
        );
    }

    let star = block_residue_family(9)?;
    println!("\nblock/residue family over [9]:\n{star}");
    for i in 1..=9 {
        let (a, b) = star.singleton_difference_pairs(i)[0];
        println!("  {{{i}}} = {} \\ {}", star.members()[a], star.members()[b]);
    }
    Ok(())
}
