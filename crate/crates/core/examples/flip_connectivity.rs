//! Flip connectivity two ways: the fiber graph, and whether the tiling
//! ideal sits inside the flip ideal.

use tiling_ideals::ideal::DEFAULT_BUDGET;
use tiling_ideals::{is_connected_by, tiling_subset_flip, MoveKind, Region, TilingGraph};

fn main() {
    let regions = [
        ("3x4 box", "####\n####\n####"),
        ("ring", "###\n#.#\n###"),
        ("L", "#..\n#..\n###\n###"),
        ("ring 4x4", "####\n#..#\n#..#\n####"),
    ];
    for (name, text) in regions {
        let graph = TilingGraph::new(&Region::parse(text).unwrap());
        let fiber = is_connected_by(&graph, MoveKind::Flip).unwrap();
        let ideal = tiling_subset_flip(&graph, DEFAULT_BUDGET).unwrap();
        println!(
            "{name:>9}: simply connected={} components={} I_tiling in I_flip={}",
            graph.region().is_simply_connected().unwrap(),
            fiber.components,
            ideal.contained
        );
        if let Some(w) = ideal.witness {
            println!("           witness {w}");
        }
    }
}
