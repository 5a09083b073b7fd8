//! Domino tilings of cubiculated regions in `Z^n`, studied through the
//! binomial ideals of their adjacency graphs.
//!
//! A region is a finite set of unit cells; its graph `G_R` has a vertex per
//! cell and an edge per shared face, and a tiling is a perfect matching of
//! `G_R`. Each edge `e` carries an indeterminate `y_e`, so a tiling `T`
//! gives a squarefree monomial `y^T` and two tilings give a binomial
//! `y^{T1} - y^{T2}`. The crate builds
//!
//! * the toric ideal of `G_R` (one generator per chordless cycle), the
//!   tiling ideal and the flip ideal ([`ideal`]),
//! * connectivity of the tiling space under flips, trits or all cycle moves
//!   ([`moves`]),
//! * explicit certificates expressing tiling binomials through flips on
//!   simply connected planar regions ([`binomial`]),
//! * a seeded Metropolis sampler ([`sampler`]) and the `domtile` command
//!   line ([`cli`]).
//!
//! ```
//! use tiling_ideals::{enumerate_tilings, quadratic_decomposition, verify_certificate, Region, TilingGraph};
//!
//! let graph = TilingGraph::new(&Region::rectangle(2, 3));
//! let tilings = enumerate_tilings(&graph);
//! assert_eq!(tilings.len(), 3);
//! let cert = quadratic_decomposition(&graph, &tilings[0], &tilings[2]).unwrap();
//! assert!(cert.is_quadratic());
//! assert!(verify_certificate(&cert, Some(&graph)).is_ok());
//! ```

pub mod binomial;
pub mod cli;
pub mod graph;
pub mod ideal;
pub mod moves;
pub mod region;
pub mod sampler;
pub mod tiling;

pub use binomial::{
    binomial_of_tilings, cycle_decomposition, quadratic_decomposition, verify_certificate, Binomial,
    DecompositionCertificate, Monomial,
};
pub use graph::{Cycle, EdgeId, TilingGraph};
pub use ideal::{tiling_subset_flip, IdealKind, IdealPresentation, Membership};
pub use moves::{is_connected_by, Move, MoveKind};
pub use region::{Cell, Region};
pub use tiling::{count_tilings, cycle_cover, enumerate_tilings, Tiling};
