//! Toric, flip and tiling ideals of a few boxes, and how they compare.

use tiling_ideals::ideal::{
    contains_all, flip_ideal_generators, ideals_equal, tiling_ideal_generators, toric_generators, DEFAULT_BUDGET,
};
use tiling_ideals::{enumerate_tilings, Region, TilingGraph};

fn main() {
    for (name, region) in [
        ("2x3", Region::rectangle(2, 3)),
        ("3x4", Region::rectangle(3, 4)),
        ("2x2x2", Region::boxed(&[2, 2, 2])),
    ] {
        let graph = TilingGraph::new(&region);
        let toric = toric_generators(&graph);
        let flip = flip_ideal_generators(&graph);
        let tiling = tiling_ideal_generators(&graph, &enumerate_tilings(&graph)).unwrap();
        println!("== {name}");
        println!("I_G      degrees {:?}", toric.degrees());
        print!("{}", toric.to_plain());
        println!("I_flip   {} generators", flip.len());
        println!("I_tiling {} generators, degrees {:?}", tiling.len(), tiling.degrees());
        println!("I_flip = I_G:        {}", ideals_equal(&graph, &flip, &toric, DEFAULT_BUDGET).unwrap());
        println!("I_tiling in I_flip:  {}", contains_all(&graph, &flip, &tiling, DEFAULT_BUDGET).unwrap());
    }
}
