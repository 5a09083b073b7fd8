//! Count and list the domino tilings of a region.
//!
//! ```text
//! cargo run --example count_tilings
//! cargo run --example count_tilings -- fixtures/box4x4.region
//! ```

use tiling_ideals::{count_tilings, enumerate_tilings, Region, TilingGraph};

fn main() {
    let region = match std::env::args().nth(1) {
        Some(path) => Region::parse(&std::fs::read_to_string(&path).expect("readable region file")).expect("valid region"),
        None => Region::rectangle(2, 3),
    };
    let graph = TilingGraph::new(&region);
    println!("{region}");
    println!("{} cells, {} edges in G_R", graph.num_vertices(), graph.num_edges());
    println!("{} tilings", count_tilings(&graph));
    for (i, t) in enumerate_tilings(&graph).iter().enumerate().take(12) {
        println!("  T{} = {t}", i + 1);
    }
}
