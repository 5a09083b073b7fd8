//! Uniform sampling of tilings with a lazy Metropolis walk on flips.

use tiling_ideals::sampler::{empirical_distribution, occupation_distribution, ChainConfig};
use tiling_ideals::{enumerate_tilings, MoveKind, Region, TilingGraph};

fn main() {
    let graph = TilingGraph::new(&Region::rectangle(3, 4));
    let tilings = enumerate_tilings(&graph);
    let mut cfg = ChainConfig { moves: MoveKind::Flip, steps: 100, seed: 0, start: tilings[0].clone() };

    for steps in [10, 100, 1_000, 100_000] {
        cfg.steps = steps;
        let d = occupation_distribution(&graph, &cfg, 3).unwrap();
        println!("{steps:>7} steps x 3 chains: TV from uniform {:.4}", d.tv_from_uniform(&tilings));
    }

    cfg.steps = 200;
    let d = empirical_distribution(&graph, &cfg, 11_000, 100).unwrap();
    println!("\nfinal states of 11000 restarts (1/11 = {:.4}):", 1.0 / 11.0);
    print!("{}", d.to_table());
}
