//! Ruzsa–Szemerédi style hypergraphs: the `F_3^{n+1}` construction with its
//! plane-structured wickets and colouring, the modular and Eisenstein
//! variants, and the exponent arithmetic.

mod bounds;
mod coloring;
mod eisenstein;
mod f3;
mod modular;

pub use bounds::{
    asymptotic_exponent, corollary_cap_bound, gl_constant, BoundsReport, CorollaryBound,
    CAP_UPPER_BASE,
};
pub use coloring::{
    color_edges, default_budget, dependency_degrees, lll_color_count, max_dependency_degree,
    ColoringOutcome, EdgeColoring,
};
pub use eisenstein::EisensteinBuild;
pub use f3::{enumerate_plane_wickets, plane_wickets, PlaneWicketFamily, RszF3Build, WicketLabels};
pub use modular::ModularBuild;

use crate::error::Result;

/// Builds the construction, colours it with `⌈(120|S|)^{1/4}⌉` colours and
/// summarises the result.
pub fn color_f3_build(build: &RszF3Build, seed: u64) -> Result<(ColoringOutcome, BoundsReport)> {
    let families = enumerate_plane_wickets(build);
    let wickets = plane_wickets(&families);
    let h = build.hypergraph();
    let k = lll_color_count(build.cap().len());
    let outcome = color_edges(h, &wickets, k, seed, default_budget(wickets.len()))?;
    let report = BoundsReport::new(
        build.n(),
        build.cap().len(),
        h.num_edges(),
        wickets.len(),
        max_dependency_degree(&wickets, h.num_edges()),
        k,
        outcome.selected_edges.len(),
    );
    Ok((outcome, report))
}
