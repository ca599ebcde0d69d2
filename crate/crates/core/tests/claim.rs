use std::collections::BTreeSet;

use wicketlab::claim::{
    classify_systems, degree_structure_audit, detect_patterns, grid_edges, minimality_check,
    records_csv, summarize, verify_claim1, Classification,
};
use wicketlab::hypergraph::shared_vertices;
use wicketlab::{Edge, TripartiteHypergraph};

fn vertices(edges: &[&Edge]) -> usize {
    edges
        .iter()
        .flat_map(|e| (0..3).map(move |c| (c, e[c])))
        .collect::<BTreeSet<_>>()
        .len()
}

/// Subset predicates with no shared code with the library detectors.
fn brute_patterns(h: &TripartiteHypergraph) -> (bool, bool) {
    let e = h.edges();
    let idx: Vec<usize> = (0..e.len()).collect();
    let mut wicket = false;
    if e.len() == 5 && vertices(&e.iter().collect::<Vec<_>>()) == 9 {
        for a in 0..5 {
            for b in a + 1..5 {
                let rows: Vec<&Edge> = idx
                    .iter()
                    .filter(|&&i| i != a && i != b)
                    .map(|&i| &e[i])
                    .collect();
                let cols = [&e[a], &e[b]];
                wicket |= shared_vertices(cols[0], cols[1]) == 0
                    && (0..3).all(|i| (i + 1..3).all(|j| shared_vertices(rows[i], rows[j]) == 0))
                    && rows
                        .iter()
                        .all(|r| cols.iter().all(|c| shared_vertices(r, c) == 1));
            }
        }
    }
    let mut sixthree = false;
    for a in 0..e.len() {
        for b in a + 1..e.len() {
            for c in b + 1..e.len() {
                sixthree |= vertices(&[&e[a], &e[b], &e[c]]) == 6
                    && shared_vertices(&e[a], &e[b]) == 1
                    && shared_vertices(&e[b], &e[c]) == 1
                    && shared_vertices(&e[a], &e[c]) == 1;
            }
        }
    }
    (wicket, sixthree)
}

#[test]
fn every_linear_five_edge_system_is_covered() {
    let r = verify_claim1();
    assert_eq!(r.examined, 80730);
    assert_eq!(r.linear, 3834);
    assert_eq!(r.wicket_only, 216);
    assert_eq!(r.sixthree_only, 3618);
    assert_eq!(r.both, 0);
    assert!(r.counterexamples.is_empty() && r.verified);
    assert_eq!(r.on_nine_vertices, 2862);
    assert_eq!(r.on_fewer_vertices, 972);
    assert_eq!(
        r.wicket_only + r.sixthree_only + r.both + r.counterexamples.len(),
        r.linear
    );
}

#[test]
fn brute_force_predicates_give_identical_counts() {
    let (examined, fast) = classify_systems(detect_patterns);
    let (_, slow) = classify_systems(brute_patterns);
    assert_eq!(fast, slow);
    assert_eq!(summarize(examined, &fast), verify_claim1());
}

#[test]
fn minimal_systems_without_either_pattern() {
    let m = minimality_check();
    assert_eq!(m.examined, 17550);
    assert_eq!(m.witnesses, 1188);
    let first = m.first_edges.unwrap();
    assert_eq!(first.len(), 4);
    assert!(m.first_max_degree.unwrap() <= 2);
    let h = TripartiteHypergraph::new([3; 3], first).unwrap();
    assert!(h.is_linear());
    assert_eq!(brute_patterns(&h), (false, false));
}

#[test]
fn degree_audit_is_consistent() {
    let a = degree_structure_audit();
    assert!(a.consistent);
    assert!(a.high_degree > 0);
    let wickets: usize = a
        .distribution
        .get("2,2,2,2,2,2,1,1,1")
        .and_then(|m| m.get("wicket_only"))
        .copied()
        .unwrap_or(0);
    assert_eq!(wickets, 216);
}

#[test]
fn csv_rows() {
    let (_, records) = classify_systems(detect_patterns);
    let csv = records_csv(&records);
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines[0], "edges,vertices,classification");
    assert_eq!(lines.len(), 3835);
    let canonical: Vec<usize> = [[0, 0, 0], [1, 1, 1], [2, 2, 2], [0, 1, 2], [1, 2, 0]]
        .iter()
        .map(|e| grid_edges().iter().position(|g| g == e).unwrap())
        .collect();
    let mut sorted = canonical.clone();
    sorted.sort_unstable();
    let rec = records.iter().find(|r| r.edges == sorted).unwrap();
    assert_eq!(rec.classification, Classification::WicketOnly);
}
