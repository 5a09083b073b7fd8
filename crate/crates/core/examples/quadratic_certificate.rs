//! Write a tiling binomial of a simply connected region as a combination of
//! flip binomials, then check the identity by expansion.

use tiling_ideals::{
    binomial_of_tilings, cycle_cover, cycle_decomposition, enumerate_tilings, quadratic_decomposition, verify_certificate,
    DecompositionCertificate, Region, TilingGraph,
};

fn main() {
    let graph = TilingGraph::new(&Region::rectangle(4, 4));
    let tilings = enumerate_tilings(&graph);
    // The pair whose union has the longest single cycle.
    let (a, b) = tilings
        .iter()
        .flat_map(|a| tilings.iter().map(move |b| (a, b)))
        .max_by_key(|(a, b)| cycle_cover(&graph, a, b).unwrap().cycles.iter().map(|c| c.len()).max())
        .unwrap();
    println!("B = {}", binomial_of_tilings(a, b));

    let cycles = cycle_decomposition(&graph, a, b).unwrap();
    println!("\nby cycles, {} term(s):\n{cycles}", cycles.len());

    let flips = quadratic_decomposition(&graph, a, b).unwrap();
    println!("by flips, {} term(s):\n{flips}", flips.len());

    let reparsed: DecompositionCertificate = flips.to_text().parse().unwrap();
    match verify_certificate(&reparsed, Some(&graph)) {
        Ok(()) => println!("verified"),
        Err(e) => println!("mismatch: {e}"),
    }
}
