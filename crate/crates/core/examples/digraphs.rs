//! Auxiliary digraphs, transitive cycles, cycle contraction and the edge
//! maximum for digraphs without transitive cycles.

use posat::{
    auxiliary_digraph, block_residue_family, max_tc_free_edges_bruteforce, turan_bipartite,
    turan_bound, Digraph,
};

fn main() -> posat::Result<()> {
    let aux = auxiliary_digraph(&block_residue_family(9)?)?;
    println!("{aux}");
    println!("transitive cycle: {:?}\n", aux.has_transitive_cycle());

    let tc = Digraph::new(3, &[(0, 1), (1, 2), (0, 2)])?;
    println!(
        "path plus chord: {:?}",
        tc.has_transitive_cycle().map(|c| c.vertices)
    );

    let d = Digraph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 0), (4, 0), (2, 4)])?;
    let cycle = d.find_induced_oriented_cycle().expect("cyclic");
    let c = d.contract_cycle(&cycle)?;
    println!(
        "contracting {:?}: {} edges -> {} edges",
        cycle,
        d.edge_count(),
        c.digraph.edge_count()
    );

    for n in 1..=5 {
        let m = max_tc_free_edges_bruteforce(n, false)?;
        println!(
            "n={n}: maximum {} (bound {}, bipartite {}), {} digraphs visited",
            m.max_edges,
            turan_bound(n),
            turan_bipartite(n).edge_count(),
            m.visited
        );
    }
    Ok(())
}
