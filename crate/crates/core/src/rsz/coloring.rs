//! Edge colorings without monochromatic wickets, by Moser–Tardos resampling.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::hypergraph::{EdgeId, TripartiteHypergraph, WicketWitness};

/// Smallest `k ≥ 2` with `k⁴ ≥ 120·|S|`, i.e. `⌈(120|S|)^{1/4}⌉`.
///
/// With this many colours a wicket is monochromatic with probability
/// `k⁻⁴ ≤ 1/(120|S|)` while it shares edges with at most `30|S|` others,
/// which satisfies the local lemma condition `e·p·(d+1) ≤ 1`.
pub fn lll_color_count(cap_size: usize) -> usize {
    let target = 120 * cap_size as u128;
    let mut k = 2usize;
    while (k as u128).pow(4) < target {
        k += 1;
    }
    k
}

/// For every wicket, how many other wickets share at least one edge with it.
pub fn dependency_degrees(wickets: &[WicketWitness], num_edges: usize) -> Vec<usize> {
    let by_edge = wickets_by_edge(wickets, num_edges);
    let mut marks = vec![usize::MAX; wickets.len()];
    wickets
        .iter()
        .enumerate()
        .map(|(i, w)| {
            let mut degree = 0;
            for e in w.edge_set() {
                for &o in &by_edge[e] {
                    if o != i && marks[o] != i {
                        marks[o] = i;
                        degree += 1;
                    }
                }
            }
            degree
        })
        .collect()
}

/// Maximum of [`dependency_degrees`], 0 without wickets.
pub fn max_dependency_degree(wickets: &[WicketWitness], num_edges: usize) -> usize {
    dependency_degrees(wickets, num_edges)
        .into_iter()
        .max()
        .unwrap_or(0)
}

fn wickets_by_edge(wickets: &[WicketWitness], num_edges: usize) -> Vec<Vec<usize>> {
    let mut by_edge = vec![Vec::new(); num_edges];
    for (i, w) in wickets.iter().enumerate() {
        for e in w.edge_set() {
            by_edge[e].push(i);
        }
    }
    by_edge
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EdgeColoring {
    pub k: usize,
    /// Colour of each edge, in `0..k`.
    pub assignment: Vec<usize>,
    pub seed: u64,
    pub resample_count: u64,
}

impl EdgeColoring {
    pub fn class_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.k];
        for &c in &self.assignment {
            sizes[c] += 1;
        }
        sizes
    }

    pub fn is_monochromatic(&self, w: &WicketWitness) -> bool {
        let ids = w.edge_set();
        ids.iter()
            .all(|&e| self.assignment[e] == self.assignment[ids[0]])
    }
}

/// A coloring and its largest colour class.
#[derive(Clone, Debug)]
pub struct ColoringOutcome {
    pub coloring: EdgeColoring,
    pub selected_color: usize,
    /// Ids (in the input hypergraph) of the edges of the selected class.
    pub selected_edges: Vec<EdgeId>,
    pub selected: TripartiteHypergraph,
}

/// Default resample budget for a wicket list.
pub fn default_budget(num_wickets: usize) -> u64 {
    100 * (num_wickets as u64 + 1)
}

/// Colours the edges of `h` with `k` colours so that none of `wickets` is
/// monochromatic, then extracts the largest colour class.
///
/// Colours start uniform at random from a ChaCha8 stream seeded with `seed`.
/// While some listed wicket is monochromatic, the one with the smallest index
/// gets its five edges recoloured. The class is checked with
/// [`TripartiteHypergraph::find_wickets`], so an incomplete wicket list is
/// reported rather than silently producing a class that contains one.
pub fn color_edges(
    h: &TripartiteHypergraph,
    wickets: &[WicketWitness],
    k: usize,
    seed: u64,
    budget: u64,
) -> Result<ColoringOutcome> {
    if k < 2 {
        return Err(Error::InvalidParameter(format!(
            "need at least 2 colours, got {k}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut coloring = EdgeColoring {
        k,
        assignment: (0..h.num_edges()).map(|_| rng.gen_range(0..k)).collect(),
        seed,
        resample_count: 0,
    };
    let by_edge = wickets_by_edge(wickets, h.num_edges());
    let mut violated: BTreeSet<usize> = (0..wickets.len())
        .filter(|&i| coloring.is_monochromatic(&wickets[i]))
        .collect();

    while let Some(&bad) = violated.iter().next() {
        if coloring.resample_count >= budget {
            return Err(Error::BudgetExceeded {
                budget,
                violated: violated.len(),
            });
        }
        let edges = wickets[bad].edge_set();
        for &e in &edges {
            coloring.assignment[e] = rng.gen_range(0..k);
        }
        coloring.resample_count += 1;
        for &e in &edges {
            for &o in &by_edge[e] {
                if coloring.is_monochromatic(&wickets[o]) {
                    violated.insert(o);
                } else {
                    violated.remove(&o);
                }
            }
        }
    }

    let sizes = coloring.class_sizes();
    let selected_color = (0..k)
        .max_by_key(|&c| (sizes[c], std::cmp::Reverse(c)))
        .unwrap_or(0);
    let selected_edges: Vec<EdgeId> = (0..h.num_edges())
        .filter(|&e| coloring.assignment[e] == selected_color)
        .collect();
    let selected = h.sub_hypergraph(&selected_edges)?;
    if !selected.find_wickets(Some(1))?.is_empty() {
        return Err(Error::InvalidParameter(
            "selected colour class contains a wicket missing from the wicket list".into(),
        ));
    }
    Ok(ColoringOutcome {
        coloring,
        selected_color,
        selected_edges,
        selected,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn color_counts() {
        assert_eq!(lll_color_count(0), 2);
        assert_eq!(lll_color_count(1), 4);
        assert_eq!(lll_color_count(2), 4);
        assert_eq!(lll_color_count(8), 6);
        // 120 · 14 = 1680 > 6⁴ = 1296, and 7⁴ = 2401.
        assert_eq!(lll_color_count(14), 7);
    }

    #[test]
    fn wicket_free_input_needs_no_resampling() {
        let h =
            TripartiteHypergraph::new([3, 3, 3], vec![[0, 0, 0], [1, 1, 1], [2, 2, 2]]).unwrap();
        let out = color_edges(&h, &[], 4, 9, default_budget(0)).unwrap();
        assert_eq!(out.coloring.resample_count, 0);
        assert!(!out.selected_edges.is_empty());
        assert!(color_edges(&h, &[], 1, 0, 10).is_err());
    }

    #[test]
    fn incomplete_wicket_list_is_caught() {
        let h = TripartiteHypergraph::new(
            [3, 3, 3],
            vec![[0, 0, 0], [1, 1, 1], [2, 2, 2], [0, 1, 2], [1, 2, 0]],
        )
        .unwrap();
        // two colours over five edges: try seeds until the class keeps the whole wicket
        let caught = (0..200).any(|seed| color_edges(&h, &[], 2, seed, 10).is_err());
        assert!(caught);
    }
}
