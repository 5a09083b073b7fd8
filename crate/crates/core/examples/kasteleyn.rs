//! Kasteleyn's product formula against brute-force enumeration.

use tiling_ideals::tiling::count_rectangle_kasteleyn;
use tiling_ideals::{count_tilings, Region, TilingGraph};

fn main() {
    println!("{:>6} {:>14} {:>14}", "box", "formula", "enumerated");
    for (m, n) in [(1, 1), (1, 2), (1, 3), (2, 2), (2, 3), (1, 6)] {
        let formula = count_rectangle_kasteleyn(m, n).unwrap();
        let counted = count_tilings(&TilingGraph::new(&Region::rectangle(2 * m, 2 * n)));
        println!("{:>6} {formula:>14} {counted:>14}", format!("{}x{}", 2 * m, 2 * n));
    }
    for (m, n) in [(4, 4), (5, 5), (8, 8)] {
        println!("{:>6} {:>14}", format!("{}x{}", 2 * m, 2 * n), count_rectangle_kasteleyn(m, n).unwrap());
    }
}
