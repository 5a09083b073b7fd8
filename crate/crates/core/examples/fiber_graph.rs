//! The graph on tilings joined by flips, and a shortest flip path.

use tiling_ideals::moves::{connection_path, fiber_graph, flip_moves};
use tiling_ideals::{enumerate_tilings, Region, TilingGraph};

fn main() {
    let graph = TilingGraph::new(&Region::rectangle(3, 4));
    let tilings = enumerate_tilings(&graph);
    let flips = flip_moves(&graph);
    let fiber = fiber_graph(&tilings, &flips);
    for (i, t) in tilings.iter().enumerate() {
        let nbrs: Vec<String> = fiber.neighbors(i).iter().map(|j| format!("T{}", j + 1)).collect();
        println!("T{:<2} {:<16} -> {}", i + 1, t.to_string(), nbrs.join(" "));
    }
    let (a, b) = (&tilings[0], &tilings[tilings.len() - 1]);
    let path = connection_path(a, b, &flips).unwrap();
    println!("\nT1 to T{} in {} flips:", tilings.len(), path.len());
    let mut t = a.clone();
    for m in &path {
        t = m.apply(&t).unwrap();
        println!("  {m}  ->  {t}");
    }
}
