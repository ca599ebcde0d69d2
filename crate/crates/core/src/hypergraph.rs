//! Three-partite 3-uniform hypergraphs and detectors for the two forbidden
//! patterns: the wicket and the (6,3)-configuration.
//!
//! Vertex classes are plain index spaces `0..|A|`, `0..|B|`, `0..|C|`; an edge
//! is a triple `[a, b, c]`, one vertex per class. Two edges can only share a
//! vertex in the same class, so their intersection size is the number of
//! positions where the triples agree.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type EdgeId = usize;
pub type Edge = [usize; 3];

/// A vertex, tagged with its class (0 = A, 1 = B, 2 = C).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vertex {
    pub class: usize,
    pub index: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TripartiteHypergraph {
    class_sizes: [usize; 3],
    edges: Vec<Edge>,
    incidence: [Vec<Vec<EdgeId>>; 3],
}

/// Number of vertices two edges share.
pub fn shared_vertices(e: &Edge, f: &Edge) -> usize {
    (0..3).filter(|&i| e[i] == f[i]).count()
}

impl TripartiteHypergraph {
    pub fn new(class_sizes: [usize; 3], edges: Vec<Edge>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for e in &edges {
            for class in 0..3 {
                if e[class] >= class_sizes[class] {
                    return Err(Error::VertexOutOfRange {
                        class,
                        index: e[class],
                        size: class_sizes[class],
                    });
                }
            }
            if !seen.insert(*e) {
                return Err(Error::DuplicateEdge(e[0], e[1], e[2]));
            }
        }
        let mut incidence: [Vec<Vec<EdgeId>>; 3] =
            std::array::from_fn(|class| vec![Vec::new(); class_sizes[class]]);
        for (id, e) in edges.iter().enumerate() {
            for class in 0..3 {
                incidence[class][e[class]].push(id);
            }
        }
        Ok(Self {
            class_sizes,
            edges,
            incidence,
        })
    }

    pub fn class_sizes(&self) -> [usize; 3] {
        self.class_sizes
    }

    pub fn num_vertices(&self) -> usize {
        self.class_sizes.iter().sum()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, id: EdgeId) -> &Edge {
        &self.edges[id]
    }

    /// Edges through vertex `index` of class `class`, in increasing id order.
    pub fn incident(&self, class: usize, index: usize) -> &[EdgeId] {
        &self.incidence[class][index]
    }

    pub fn vertices_of(&self, id: EdgeId) -> [Vertex; 3] {
        let e = &self.edges[id];
        std::array::from_fn(|class| Vertex {
            class,
            index: e[class],
        })
    }

    /// The hypergraph on the same vertex classes spanned by `ids`; new edge
    /// `i` is old edge `ids[i]`.
    pub fn sub_hypergraph(&self, ids: &[EdgeId]) -> Result<TripartiteHypergraph> {
        TripartiteHypergraph::new(
            self.class_sizes,
            ids.iter().map(|&i| self.edges[i]).collect(),
        )
    }

    /// First pair of edges sharing two or more vertices, if any.
    pub fn find_nonlinear_pair(&self) -> Option<(EdgeId, EdgeId)> {
        for (id, e) in self.edges.iter().enumerate() {
            for class in 0..3 {
                for &other in &self.incidence[class][e[class]] {
                    if other > id && shared_vertices(e, &self.edges[other]) > 1 {
                        return Some((id, other));
                    }
                }
            }
        }
        None
    }

    pub fn is_linear(&self) -> bool {
        self.find_nonlinear_pair().is_none()
    }

    fn require_linear(&self) -> Result<()> {
        match self.find_nonlinear_pair() {
            Some((a, b)) => Err(Error::NotLinear(a, b)),
            None => Ok(()),
        }
    }

    /// Enumerates wickets, up to `limit` of them.
    ///
    /// For every pair of disjoint edges taken as the two columns, collects the
    /// edges meeting each column in exactly one vertex; any three pairwise
    /// disjoint such edges are the rows. Wickets are deduplicated by their
    /// 5-edge set and reported in discovery order.
    pub fn find_wickets(&self, limit: Option<usize>) -> Result<Vec<WicketWitness>> {
        self.require_linear()?;
        let limit = limit.unwrap_or(usize::MAX);
        let mut seen = BTreeSet::new();
        let mut found = Vec::new();
        if limit == 0 {
            return Ok(found);
        }
        let mut candidates = Vec::new();
        for c1 in 0..self.edges.len() {
            let e1 = &self.edges[c1];
            for c2 in c1 + 1..self.edges.len() {
                let e2 = &self.edges[c2];
                if shared_vertices(e1, e2) != 0 {
                    continue;
                }
                candidates.clear();
                for (incidence, &v) in self.incidence.iter().zip(e1) {
                    for &r in &incidence[v] {
                        if r != c1 && shared_vertices(&self.edges[r], e2) == 1 {
                            candidates.push(r);
                        }
                    }
                }
                if candidates.len() < 3 {
                    continue;
                }
                candidates.sort_unstable();
                for (i, &r1) in candidates.iter().enumerate() {
                    for (j, &r2) in candidates.iter().enumerate().skip(i + 1) {
                        if shared_vertices(&self.edges[r1], &self.edges[r2]) != 0 {
                            continue;
                        }
                        for &r3 in &candidates[j + 1..] {
                            if shared_vertices(&self.edges[r1], &self.edges[r3]) != 0
                                || shared_vertices(&self.edges[r2], &self.edges[r3]) != 0
                            {
                                continue;
                            }
                            let w = WicketWitness {
                                rows: [r1, r2, r3],
                                columns: [c1, c2],
                            };
                            if seen.insert(w.edge_set()) {
                                found.push(w);
                                if found.len() >= limit {
                                    return Ok(found);
                                }
                            }
                        }
                    }
                }
            }
        }
        Ok(found)
    }

    /// Enumerates (6,3)-configurations (edge triangles), up to `limit`.
    ///
    /// For every pair `e, f` sharing a vertex `v`, looks for `g` through a
    /// vertex of `e` other than `v` that meets `f` away from `v`.
    pub fn find_63(&self, limit: Option<usize>) -> Result<Vec<SixThreeWitness>> {
        self.require_linear()?;
        let limit = limit.unwrap_or(usize::MAX);
        let mut seen = BTreeSet::new();
        let mut found = Vec::new();
        if limit == 0 {
            return Ok(found);
        }
        for (ei, e) in self.edges.iter().enumerate() {
            for v_class in 0..3 {
                for &fi in &self.incidence[v_class][e[v_class]] {
                    if fi <= ei {
                        continue;
                    }
                    let f = &self.edges[fi];
                    for p_class in (0..3).filter(|&c| c != v_class) {
                        for &gi in &self.incidence[p_class][e[p_class]] {
                            if gi == ei || gi == fi {
                                continue;
                            }
                            let g = &self.edges[gi];
                            if g[v_class] == e[v_class] || shared_vertices(g, f) != 1 {
                                continue;
                            }
                            let w = SixThreeWitness::sorted([ei, fi, gi]);
                            if seen.insert(w.edges) {
                                found.push(w);
                                if found.len() >= limit {
                                    return Ok(found);
                                }
                            }
                        }
                    }
                }
            }
        }
        Ok(found)
    }

    pub fn degree_profile(&self) -> DegreeProfile {
        DegreeProfile {
            per_class: std::array::from_fn(|class| {
                self.incidence[class].iter().map(Vec::len).collect()
            }),
        }
    }
}

/// Three rows and two columns of a 3×3 point matrix, as edge ids.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WicketWitness {
    pub rows: [EdgeId; 3],
    pub columns: [EdgeId; 2],
}

impl WicketWitness {
    /// The five edges, sorted.
    pub fn edge_set(&self) -> [EdgeId; 5] {
        let mut s = [
            self.rows[0],
            self.rows[1],
            self.rows[2],
            self.columns[0],
            self.columns[1],
        ];
        s.sort_unstable();
        s
    }

    /// Re-checks the wicket conditions against `h`.
    pub fn is_valid(&self, h: &TripartiteHypergraph) -> bool {
        let ids = self.edge_set();
        if ids.iter().any(|&i| i >= h.num_edges()) || ids.windows(2).any(|w| w[0] == w[1]) {
            return false;
        }
        let r = self.rows.map(|i| h.edge(i));
        let c = self.columns.map(|i| h.edge(i));
        let rows_disjoint = shared_vertices(r[0], r[1]) == 0
            && shared_vertices(r[0], r[2]) == 0
            && shared_vertices(r[1], r[2]) == 0;
        let cols_disjoint = shared_vertices(c[0], c[1]) == 0;
        let grid = r
            .iter()
            .all(|row| c.iter().all(|col| shared_vertices(row, col) == 1));
        let vertices: BTreeSet<Vertex> = ids.iter().flat_map(|&i| h.vertices_of(i)).collect();
        rows_disjoint && cols_disjoint && grid && vertices.len() == 9
    }
}

/// Three edges spanning six vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SixThreeWitness {
    pub edges: [EdgeId; 3],
}

impl SixThreeWitness {
    fn sorted(mut edges: [EdgeId; 3]) -> Self {
        edges.sort_unstable();
        Self { edges }
    }

    pub fn is_valid(&self, h: &TripartiteHypergraph) -> bool {
        let [a, b, c] = self.edges;
        if a == b || b == c || a == c || self.edges.iter().any(|&i| i >= h.num_edges()) {
            return false;
        }
        let (ea, eb, ec) = (h.edge(a), h.edge(b), h.edge(c));
        let pairwise = shared_vertices(ea, eb) == 1
            && shared_vertices(eb, ec) == 1
            && shared_vertices(ea, ec) == 1;
        let common = (0..3).any(|i| ea[i] == eb[i] && eb[i] == ec[i]);
        let vertices: BTreeSet<Vertex> =
            self.edges.iter().flat_map(|&i| h.vertices_of(i)).collect();
        pairwise && !common && vertices.len() == 6
    }
}

/// Vertex degrees, one vector per class.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeProfile {
    pub per_class: [Vec<usize>; 3],
}

impl DegreeProfile {
    /// All degrees, largest first.
    pub fn sorted_degrees(&self) -> Vec<usize> {
        let mut all: Vec<usize> = self.per_class.iter().flatten().copied().collect();
        all.sort_unstable_by(|a, b| b.cmp(a));
        all
    }

    pub fn max_degree(&self) -> usize {
        self.per_class.iter().flatten().copied().max().unwrap_or(0)
    }

    /// Vertices of positive degree.
    pub fn covered(&self) -> usize {
        self.per_class.iter().flatten().filter(|&&d| d > 0).count()
    }
}
