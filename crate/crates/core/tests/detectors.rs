use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use wicketlab::hypergraph::shared_vertices;
use wicketlab::{Edge, TripartiteHypergraph};

fn vertex_count(edges: &[&Edge]) -> usize {
    edges
        .iter()
        .flat_map(|e| (0..3).map(move |c| (c, e[c])))
        .collect::<BTreeSet<_>>()
        .len()
}

/// Tries all ten ways of choosing the two columns.
fn is_wicket(five: [&Edge; 5]) -> bool {
    if vertex_count(&five) != 9 {
        return false;
    }
    for a in 0..5 {
        for b in a + 1..5 {
            let cols = [five[a], five[b]];
            let rows: Vec<&Edge> = (0..5)
                .filter(|&i| i != a && i != b)
                .map(|i| five[i])
                .collect();
            let ok = shared_vertices(cols[0], cols[1]) == 0
                && (0..3).all(|i| (i + 1..3).all(|j| shared_vertices(rows[i], rows[j]) == 0))
                && rows
                    .iter()
                    .all(|r| cols.iter().all(|c| shared_vertices(r, c) == 1));
            if ok {
                return true;
            }
        }
    }
    false
}

fn is_sixthree(three: [&Edge; 3]) -> bool {
    vertex_count(&three) == 6
        && shared_vertices(three[0], three[1]) == 1
        && shared_vertices(three[1], three[2]) == 1
        && shared_vertices(three[0], three[2]) == 1
}

fn brute_wickets(h: &TripartiteHypergraph) -> BTreeSet<Vec<usize>> {
    let e = h.edges();
    let m = e.len();
    let mut out = BTreeSet::new();
    for a in 0..m {
        for b in a + 1..m {
            for c in b + 1..m {
                for d in c + 1..m {
                    for f in d + 1..m {
                        if is_wicket([&e[a], &e[b], &e[c], &e[d], &e[f]]) {
                            out.insert(vec![a, b, c, d, f]);
                        }
                    }
                }
            }
        }
    }
    out
}

fn brute_sixthree(h: &TripartiteHypergraph) -> BTreeSet<Vec<usize>> {
    let e = h.edges();
    let m = e.len();
    let mut out = BTreeSet::new();
    for a in 0..m {
        for b in a + 1..m {
            for c in b + 1..m {
                if is_sixthree([&e[a], &e[b], &e[c]]) {
                    out.insert(vec![a, b, c]);
                }
            }
        }
    }
    out
}

fn detected_wickets(h: &TripartiteHypergraph) -> BTreeSet<Vec<usize>> {
    h.find_wickets(None)
        .unwrap()
        .iter()
        .inspect(|w| assert!(w.is_valid(h)))
        .map(|w| w.edge_set().to_vec())
        .collect()
}

fn detected_sixthree(h: &TripartiteHypergraph) -> BTreeSet<Vec<usize>> {
    h.find_63(None)
        .unwrap()
        .iter()
        .inspect(|w| assert!(w.is_valid(h)))
        .map(|w| w.edges.to_vec())
        .collect()
}

/// Random linear hypergraph: edges are proposed uniformly and kept when they
/// meet every kept edge in at most one vertex.
fn random_linear(rng: &mut ChaCha8Rng, max_edges: usize) -> TripartiteHypergraph {
    let sizes = [
        rng.gen_range(3..=4),
        rng.gen_range(3..=4),
        rng.gen_range(3..=4),
    ];
    let target = rng.gen_range(max_edges / 2..=max_edges);
    let mut edges: Vec<Edge> = Vec::new();
    for _ in 0..400 {
        if edges.len() == target {
            break;
        }
        let e = [
            rng.gen_range(0..sizes[0]),
            rng.gen_range(0..sizes[1]),
            rng.gen_range(0..sizes[2]),
        ];
        if edges.iter().all(|f| shared_vertices(&e, f) <= 1) {
            edges.push(e);
        }
    }
    TripartiteHypergraph::new(sizes, edges).unwrap()
}

fn relabel(set: &BTreeSet<Vec<usize>>, map: &[usize]) -> BTreeSet<Vec<usize>> {
    set.iter()
        .map(|ids| {
            let mut v: Vec<usize> = ids.iter().map(|&i| map[i]).collect();
            v.sort_unstable();
            v
        })
        .collect()
}

#[test]
fn wicket_detector_matches_five_subset_scan() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut with_wicket = 0;
    for _ in 0..150 {
        let h = random_linear(&mut rng, 12);
        let found = detected_wickets(&h);
        assert_eq!(found, brute_wickets(&h), "{:?}", h.edges());
        with_wicket += usize::from(!found.is_empty());
    }
    assert!(with_wicket >= 10, "family too sparse: {with_wicket}");
}

#[test]
fn sixthree_detector_matches_triple_scan() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..150 {
        let h = random_linear(&mut rng, 20);
        assert_eq!(detected_sixthree(&h), brute_sixthree(&h), "{:?}", h.edges());
    }
}

#[test]
fn detectors_ignore_edge_order() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..100 {
        let h = random_linear(&mut rng, 12);
        let mut order: Vec<usize> = (0..h.num_edges()).collect();
        order.shuffle(&mut rng);
        // new id i holds old edge order[i]
        let g = TripartiteHypergraph::new(
            h.class_sizes(),
            order.iter().map(|&i| h.edges()[i]).collect(),
        )
        .unwrap();
        assert_eq!(relabel(&detected_wickets(&g), &order), detected_wickets(&h));
        assert_eq!(
            relabel(&detected_sixthree(&g), &order),
            detected_sixthree(&h)
        );
    }
}

#[test]
fn limits_and_linearity() {
    let grid = vec![
        [0, 0, 0],
        [1, 1, 1],
        [2, 2, 2],
        [0, 1, 2],
        [1, 2, 0],
        [2, 0, 1],
    ];
    let h = TripartiteHypergraph::new([3; 3], grid).unwrap();
    assert_eq!(h.find_wickets(None).unwrap().len(), 6);
    assert_eq!(h.find_wickets(Some(2)).unwrap().len(), 2);
    assert!(h.find_wickets(Some(0)).unwrap().is_empty());
    let bad = TripartiteHypergraph::new([3; 3], vec![[0, 0, 0], [0, 0, 1]]).unwrap();
    assert!(!bad.is_linear());
    assert!(bad.find_wickets(None).is_err());
    assert!(bad.find_63(None).is_err());
}
