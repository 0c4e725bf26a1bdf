//! Catalog posets, duals, dot extensions, legs and induced embeddings.

use posat::{catalog, catalog_spec, Poset};

fn main() -> posat::Result<()> {
    for spec in [
        "fork", "diamond", "N", "Y", "Yinv", "X", "wedge:3", "vee:3", "Xell:2",
    ] {
        let p = catalog_spec(spec)?;
        let legs = match p.has_legs() {
            Some(w) => format!("legs {},{} hip {}", w.leg1 + 1, w.leg2 + 1, w.hip + 1),
            None => "no legs".to_string(),
        };
        println!(
            "{spec:<8} size={} covers={:?} self-dual={} {legs}",
            p.size(),
            p.covers(),
            p.dual().is_isomorphic(&p)
        );
    }

    let y = catalog("Y", None)?;
    assert!(y.dual().is_isomorphic(&catalog("Yinv", None)?));

    // the dot extension of a 2-antichain is a 3-element poset with a top
    let dotted = Poset::antichain(2).dot_extension();
    println!("\n{}", dotted.to_text());

    let x = catalog("X", None)?;
    let xell = catalog("Xell", Some(2))?;
    let w = x.is_induced_subposet(&xell).expect("X sits inside Xell(2)");
    println!("X -> Xell(2): {:?}", w.map);

    println!("\n{}", catalog("diamond", None)?.to_dot());
    Ok(())
}
