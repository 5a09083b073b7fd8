//! Emit ideals for Macaulay2 or Singular.
//!
//! ```text
//! cargo run --example cas_export > cube.m2
//! M2 --script cube.m2
//! ```

use tiling_ideals::ideal::{presentation, CasStyle};
use tiling_ideals::{IdealKind, Region, TilingGraph};

fn main() {
    let graph = TilingGraph::new(&Region::boxed(&[2, 2, 2]));
    for kind in [IdealKind::Toric, IdealKind::Flip, IdealKind::Tiling] {
        let p = presentation(&graph, kind).unwrap();
        println!("-- {kind} ideal");
        print!("{}", p.export(CasStyle::Macaulay2));
        println!("gens gb I");
    }
    println!("\n// Singular");
    print!("{}", presentation(&graph, IdealKind::Flip).unwrap().export(CasStyle::Singular));
}
