//! Exhaustive check that every linear 5-edge system inside the 3×3×3 grid of
//! transversal triples contains a wicket or a (6,3)-configuration.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::hypergraph::{Edge, TripartiteHypergraph};

/// The 27 triples `[a, b, c]` with `a, b, c ∈ {0, 1, 2}`, in lexicographic order.
pub fn grid_edges() -> Vec<Edge> {
    (0..27).map(|i| [i / 9, (i / 3) % 3, i % 3]).collect()
}

/// Which of the two patterns a system contains.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Classification {
    WicketOnly,
    SixThreeOnly,
    Both,
    Neither,
}

impl Classification {
    pub fn from_flags(wicket: bool, sixthree: bool) -> Self {
        match (wicket, sixthree) {
            (true, false) => Self::WicketOnly,
            (false, true) => Self::SixThreeOnly,
            (true, true) => Self::Both,
            (false, false) => Self::Neither,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Self::WicketOnly => "wicket_only",
            Self::SixThreeOnly => "sixthree_only",
            Self::Both => "both",
            Self::Neither => "neither",
        }
    }
}

/// One linear system of the enumeration.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SystemRecord {
    /// Indices into [`grid_edges`].
    pub edges: Vec<usize>,
    pub vertices: usize,
    pub classification: Classification,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClaimReport {
    /// Candidate edge sets, `C(27, 5)`.
    pub examined: usize,
    pub linear: usize,
    pub wicket_only: usize,
    pub sixthree_only: usize,
    pub both: usize,
    /// Linear systems with neither pattern.
    pub counterexamples: Vec<Vec<usize>>,
    /// Linear systems covering all nine vertices.
    pub on_nine_vertices: usize,
    /// Linear systems covering fewer than nine.
    pub on_fewer_vertices: usize,
    pub verified: bool,
}

/// Every `k`-subset of `0..n` in lexicographic order, grouped by first element.
fn subsets_from(first: usize, n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = vec![first];
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(first + 1, n, k, &mut cur, &mut out);
    out
}

/// All `k`-subsets of the grid edges in lexicographic order, each paired
/// with its hypergraph.
fn grid_systems(k: usize) -> Vec<(Vec<usize>, TripartiteHypergraph)> {
    let grid = grid_edges();
    (0..grid.len())
        .into_par_iter()
        .flat_map_iter(|first| subsets_from(first, grid.len(), k))
        .map(|ids| {
            let h = TripartiteHypergraph::new([3; 3], ids.iter().map(|&i| grid[i]).collect())
                .expect("grid edges are in range and distinct");
            (ids, h)
        })
        .collect()
}

/// `(contains wicket, contains (6,3))` with the library detectors.
pub fn detect_patterns(h: &TripartiteHypergraph) -> (bool, bool) {
    let wicket = !h.find_wickets(Some(1)).expect("linear").is_empty();
    let sixthree = !h.find_63(Some(1)).expect("linear").is_empty();
    (wicket, sixthree)
}

/// Classifies every linear 5-edge system of the grid with `detect`.
pub fn classify_systems<F>(detect: F) -> (usize, Vec<SystemRecord>)
where
    F: Fn(&TripartiteHypergraph) -> (bool, bool) + Sync,
{
    let systems = grid_systems(5);
    let examined = systems.len();
    let records = systems
        .into_par_iter()
        .filter(|(_, h)| h.is_linear())
        .map(|(edges, h)| {
            let (wicket, sixthree) = detect(&h);
            SystemRecord {
                edges,
                vertices: h.degree_profile().covered(),
                classification: Classification::from_flags(wicket, sixthree),
            }
        })
        .collect();
    (examined, records)
}

pub fn summarize(examined: usize, records: &[SystemRecord]) -> ClaimReport {
    let count = |c: Classification| records.iter().filter(|r| r.classification == c).count();
    let counterexamples: Vec<Vec<usize>> = records
        .iter()
        .filter(|r| r.classification == Classification::Neither)
        .map(|r| r.edges.clone())
        .collect();
    let on_nine_vertices = records.iter().filter(|r| r.vertices == 9).count();
    ClaimReport {
        examined,
        linear: records.len(),
        wicket_only: count(Classification::WicketOnly),
        sixthree_only: count(Classification::SixThreeOnly),
        both: count(Classification::Both),
        verified: counterexamples.is_empty(),
        counterexamples,
        on_nine_vertices,
        on_fewer_vertices: records.len() - on_nine_vertices,
    }
}

pub fn verify_claim1() -> ClaimReport {
    let (examined, records) = classify_systems(detect_patterns);
    summarize(examined, &records)
}

/// CSV with header `edges,vertices,classification`; edge ids separated by spaces.
pub fn records_csv(records: &[SystemRecord]) -> String {
    let mut out = String::from("edges,vertices,classification\n");
    for r in records {
        let ids: Vec<String> = r.edges.iter().map(usize::to_string).collect();
        out.push_str(&format!(
            "{},{},{}\n",
            ids.join(" "),
            r.vertices,
            r.classification.as_str()
        ));
    }
    out
}

/// Linear 4-edge systems with neither pattern.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MinimalityReport {
    pub examined: usize,
    pub linear: usize,
    pub witnesses: usize,
    /// Lexicographically first witness, as grid edge indices.
    pub first: Option<Vec<usize>>,
    /// Its edges as `[a, b, c]` triples.
    pub first_edges: Option<Vec<Edge>>,
    pub first_max_degree: Option<usize>,
}

pub fn minimality_check() -> MinimalityReport {
    let systems = grid_systems(4);
    let examined = systems.len();
    let linear: Vec<_> = systems.into_iter().filter(|(_, h)| h.is_linear()).collect();
    let witnesses: Vec<_> = linear
        .par_iter()
        .filter(|(_, h)| detect_patterns(h) == (false, false))
        .collect();
    let first = witnesses.first();
    MinimalityReport {
        examined,
        linear: linear.len(),
        witnesses: witnesses.len(),
        first: first.map(|(ids, _)| ids.clone()),
        first_edges: first.map(|(_, h)| h.edges().to_vec()),
        first_max_degree: first.map(|(_, h)| h.degree_profile().max_degree()),
    }
}

/// Degree statistics over the linear 5-edge systems.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeAudit {
    /// Sorted degree sequence of the covered vertices (e.g. `"2,2,2,2,2,2,1,1,1"`)
    /// → classification → count.
    pub distribution: BTreeMap<String, BTreeMap<String, usize>>,
    /// Systems with a vertex of degree at least 3.
    pub high_degree: usize,
    /// Of those, how many avoid every (6,3); the degree argument needs 0.
    pub high_degree_without_sixthree: usize,
    /// Systems containing a wicket whose profile is not six 2s and three 1s.
    pub irregular_wicket_profiles: usize,
    pub consistent: bool,
}

pub fn degree_structure_audit() -> DegreeAudit {
    let systems = grid_systems(5);
    let rows: Vec<(Vec<usize>, Classification)> = systems
        .into_par_iter()
        .filter(|(_, h)| h.is_linear())
        .map(|(_, h)| {
            let degrees: Vec<usize> = h
                .degree_profile()
                .sorted_degrees()
                .into_iter()
                .filter(|&d| d > 0)
                .collect();
            let (wicket, sixthree) = detect_patterns(&h);
            (degrees, Classification::from_flags(wicket, sixthree))
        })
        .collect();
    let mut distribution: BTreeMap<String, BTreeMap<String, usize>> = BTreeMap::new();
    let (mut high_degree, mut high_degree_without_sixthree, mut irregular_wicket_profiles) =
        (0, 0, 0);
    for (degrees, class) in &rows {
        let key: Vec<String> = degrees.iter().map(usize::to_string).collect();
        *distribution
            .entry(key.join(","))
            .or_default()
            .entry(class.as_str().to_string())
            .or_default() += 1;
        if degrees.first().is_some_and(|&d| d >= 3) {
            high_degree += 1;
            if matches!(class, Classification::WicketOnly | Classification::Neither) {
                high_degree_without_sixthree += 1;
            }
        }
        if matches!(class, Classification::WicketOnly | Classification::Both)
            && degrees.as_slice() != [2, 2, 2, 2, 2, 2, 1, 1, 1]
        {
            irregular_wicket_profiles += 1;
        }
    }
    DegreeAudit {
        distribution,
        high_degree,
        high_degree_without_sixthree,
        irregular_wicket_profiles,
        consistent: high_degree_without_sixthree == 0 && irregular_wicket_profiles == 0,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_order() {
        let g = grid_edges();
        assert_eq!(g.len(), 27);
        assert_eq!(g[0], [0, 0, 0]);
        assert_eq!(g[5], [0, 1, 2]);
        assert_eq!(g[26], [2, 2, 2]);
    }

    #[test]
    fn subset_counts() {
        let total: usize = (0..27).map(|f| subsets_from(f, 27, 5).len()).sum();
        assert_eq!(total, 80730);
        assert_eq!(
            subsets_from(0, 4, 2),
            vec![vec![0, 1], vec![0, 2], vec![0, 3]]
        );
    }

    #[test]
    fn canonical_wicket_classification() {
        // rows (0,0,0),(1,1,1),(2,2,2); columns (0,1,2),(1,2,0)
        let h = TripartiteHypergraph::new(
            [3; 3],
            vec![[0, 0, 0], [1, 1, 1], [2, 2, 2], [0, 1, 2], [1, 2, 0]],
        )
        .unwrap();
        assert_eq!(detect_patterns(&h), (true, false));
        let mut degrees = h.degree_profile().sorted_degrees();
        degrees.retain(|&d| d > 0);
        assert_eq!(degrees, vec![2, 2, 2, 2, 2, 2, 1, 1, 1]);
    }

    #[test]
    fn rows_plus_one_column_has_neither() {
        let h = TripartiteHypergraph::new([3; 3], vec![[0, 0, 0], [1, 1, 1], [2, 2, 2], [0, 1, 2]])
            .unwrap();
        assert_eq!(detect_patterns(&h), (false, false));
    }
}
