//! A 3D region whose two tilings differ by a trit: flips alone cannot
//! connect them, and the tiling binomial is outside the flip ideal.

use tiling_ideals::ideal::{binomial_in_binomial_ideal, flip_ideal_generators, DEFAULT_BUDGET};
use tiling_ideals::{binomial_of_tilings, enumerate_tilings, is_connected_by, MoveKind, Region, TilingGraph};

const TRIT: &str = "dim 3
0 0 0
0 0 1
0 1 0
0 1 1
1 0 0
1 0 1
1 1 0
1 1 1
-1 0 0
2 1 1
";

fn main() {
    let graph = TilingGraph::new(&Region::parse(TRIT).unwrap());
    let tilings = enumerate_tilings(&graph);
    println!("{} tilings", tilings.len());
    for kind in [MoveKind::Flip, MoveKind::FlipTrit, MoveKind::Cycles] {
        let c = is_connected_by(&graph, kind).unwrap();
        println!("{kind:>9}: components={} largest move={}", c.components, c.max_move_size);
    }
    let b = binomial_of_tilings(&tilings[0], &tilings[1]);
    let (m, core) = b.factor();
    println!("B = {b}");
    println!("  = {m} * ({core})");
    let verdict = binomial_in_binomial_ideal(&graph, &b, &flip_ideal_generators(&graph), DEFAULT_BUDGET).unwrap();
    println!("in I_flip: {verdict:?}");
}
