//! Solution-free sets: linear equations over the integers and `Z/m`, and
//! equilateral-triangle-free sets of the triangular lattice.

mod eisenstein;
mod equation;
mod search;

pub use eisenstein::{
    equilateral_apexes, find_eisenstein_wicket, find_equilateral, is_equilateral, region,
    EisensteinPoint, EisensteinWicketSolution, NormMode,
};
pub use equation::{
    find_solution, has_solution, modular_order, modular_wicket_edges, EquationSpec, Triviality,
};
pub use search::{
    greedy, max_free_exhaustive, max_free_heuristic, max_trianglefree, AnnealingSchedule,
    EquationProblem, FreenessProblem, Method, SearchResult, TriangleMode, TriangleProblem,
    EXHAUSTIVE_LIMIT, TRIANGLE_AUTO_LIMIT,
};
