//! Linear 3-uniform hypergraphs without wickets.
//!
//! - [`gf3`]: vectors over `F_3`, cap sets, products and exact small maxima.
//! - [`hypergraph`]: three-partite hypergraphs and the wicket / (6,3) detectors.
//! - [`rsz`]: the constructions over `F_3^{n+1}`, `Z/(k²−k+1)` and the
//!   triangular lattice, plane enumeration, colouring and exponent formulas.
//! - [`eqfree`]: solution-free sets for linear equations and
//!   equilateral-triangle-free lattice sets.
//! - [`claim`]: the exhaustive 3×3×3 check.
//! - [`formats`]: text formats for caps, hypergraphs and sets.

pub mod claim;
pub mod eqfree;
pub mod error;
pub mod formats;
pub mod gf3;
pub mod hypergraph;
pub mod rsz;

pub use error::{Error, Result};
pub use gf3::{max_cap_exact, CapSet, F3Vector};
pub use hypergraph::{
    DegreeProfile, Edge, EdgeId, SixThreeWitness, TripartiteHypergraph, WicketWitness,
};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/caps.md")]
    mod caps {}
    #[doc = include_str!("../../../book/src/hypergraphs.md")]
    mod hypergraphs {}
    #[doc = include_str!("../../../book/src/construction.md")]
    mod construction {}
    #[doc = include_str!("../../../book/src/bounds.md")]
    mod bounds {}
    #[doc = include_str!("../../../book/src/solution-free.md")]
    mod solution_free {}
    #[doc = include_str!("../../../book/src/grid-check.md")]
    mod grid_check {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
