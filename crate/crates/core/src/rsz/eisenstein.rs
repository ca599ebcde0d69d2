//! The construction on the triangular lattice: edges `(a, a − s, a + ωs)`.

use std::collections::{BTreeSet, HashMap};

use crate::eqfree::{region, EisensteinPoint, NormMode};
use crate::error::Result;
use crate::hypergraph::{EdgeId, TripartiteHypergraph};

#[derive(Clone, Debug)]
pub struct EisensteinBuild {
    bound: i64,
    norm: NormMode,
    set: Vec<EisensteinPoint>,
    starts: Vec<EisensteinPoint>,
    vertices: Vec<EisensteinPoint>,
    hypergraph: TripartiteHypergraph,
}

impl EisensteinBuild {
    /// Edges start at every point `a` of the region of norm at most `bound`.
    ///
    /// All three classes are labelled by the same sorted point list, the
    /// region widened by `{0} ∪ (−S) ∪ ωS` so that every edge endpoint is a
    /// vertex. Edge `i·|S| + j` starts at `starts[i]` with direction `S[j]`.
    pub fn new(set: &[EisensteinPoint], bound: i64, norm: NormMode) -> Result<Self> {
        let mut set = set.to_vec();
        set.sort_unstable();
        set.dedup();
        let starts = region(bound, norm);
        let shifts: Vec<EisensteinPoint> = std::iter::once(EisensteinPoint::ZERO)
            .chain(set.iter().map(|&s| -s))
            .chain(set.iter().map(|&s| s.mul_omega()))
            .collect();
        let vertices: Vec<EisensteinPoint> = starts
            .iter()
            .flat_map(|&p| shifts.iter().map(move |&d| p + d))
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let index: HashMap<EisensteinPoint, usize> =
            vertices.iter().enumerate().map(|(i, &p)| (p, i)).collect();
        let mut edges = Vec::with_capacity(starts.len() * set.len());
        for &a in &starts {
            for &s in &set {
                edges.push([index[&a], index[&(a - s)], index[&(a + s.mul_omega())]]);
            }
        }
        let hypergraph = TripartiteHypergraph::new([vertices.len(); 3], edges)?;
        Ok(Self {
            bound,
            norm,
            set,
            starts,
            vertices,
            hypergraph,
        })
    }

    pub fn bound(&self) -> i64 {
        self.bound
    }

    pub fn norm(&self) -> NormMode {
        self.norm
    }

    pub fn set(&self) -> &[EisensteinPoint] {
        &self.set
    }

    /// Region points where edges start.
    pub fn starts(&self) -> &[EisensteinPoint] {
        &self.starts
    }

    /// Point labelling vertex `i` of every class.
    pub fn vertices(&self) -> &[EisensteinPoint] {
        &self.vertices
    }

    pub fn hypergraph(&self) -> &TripartiteHypergraph {
        &self.hypergraph
    }

    pub fn provenance(&self, edge: EdgeId) -> (EisensteinPoint, EisensteinPoint) {
        let len = self.set.len();
        (self.starts[edge / len], self.set[edge % len])
    }
}
