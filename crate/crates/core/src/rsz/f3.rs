//! The construction over `F_3^{n+1}`: three parallel hyperplanes as vertex
//! classes and the lines in directions `S × {1}` as edges.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf3::{code_add, code_scale, pow3, CapSet, F3Vector};
use crate::hypergraph::{EdgeId, TripartiteHypergraph, WicketWitness};

/// Hypergraph on `A = F_3^n × {0}`, `B = F_3^n × {1}`, `C = F_3^n × {2}`
/// whose edges are the lines `{(a,0), (a,0)+s', (a,0)+2s'}` with `s' ∈ S × {1}`.
///
/// Vertex `i` of each class is the point whose first `n` coordinates encode
/// to `i`. Edge `a·|S| + j` starts at `a` and has direction `S[j]`.
#[derive(Clone, Debug)]
pub struct RszF3Build {
    n: usize,
    cap: CapSet,
    directions: CapSet,
    hypergraph: TripartiteHypergraph,
}

impl RszF3Build {
    pub fn new(cap: &CapSet) -> Result<Self> {
        if !cap.is_verified() {
            return Err(Error::UnverifiedCap);
        }
        let n = cap.dimension();
        let size = pow3(n);
        let codes: Vec<u64> = cap.iter().map(F3Vector::code).collect();
        let mut edges = Vec::with_capacity(size as usize * codes.len());
        for a in 0..size {
            for &s in &codes {
                let b = code_add(a, s, n);
                let c = code_add(a, code_scale(s, 2, n), n);
                edges.push([a as usize, b as usize, c as usize]);
            }
        }
        let hypergraph = TripartiteHypergraph::new([size as usize; 3], edges)?;
        Ok(Self {
            n,
            directions: cap.lift()?,
            cap: cap.clone(),
            hypergraph,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn cap(&self) -> &CapSet {
        &self.cap
    }

    /// The lifted directions `S × {1}`.
    pub fn directions(&self) -> &CapSet {
        &self.directions
    }

    pub fn hypergraph(&self) -> &TripartiteHypergraph {
        &self.hypergraph
    }

    /// Total vertex count `3^{n+1}`.
    pub fn vertex_count(&self) -> u64 {
        pow3(self.n + 1)
    }

    pub fn edge_id(&self, start: u64, direction: usize) -> EdgeId {
        start as usize * self.cap.len() + direction
    }

    /// `(a, s')`: the start point in `F_3^n` and the lifted direction of an edge.
    pub fn provenance(&self, edge: EdgeId) -> (F3Vector, F3Vector) {
        let a = (edge / self.cap.len()) as u64;
        let j = edge % self.cap.len();
        (
            F3Vector::from_code(a, self.n),
            self.directions.elements()[j].clone(),
        )
    }

    /// The three points of an edge in `F_3^{n+1}`.
    pub fn edge_points(&self, edge: EdgeId) -> [F3Vector; 3] {
        let (a, s) = self.provenance(edge);
        let a0 = a.extend(0).expect("dimension");
        let b = a0.add(&s).expect("dimension");
        let c = b.add(&s).expect("dimension");
        [a0, b, c]
    }

    /// Labels a wicket by the four vertex coincidences of its edges.
    ///
    /// Columns `(x, s)` and `(y, u)`, rows `(y, t)`, `(z, v)` and `(x, w)`
    /// with `x + s = y + t`, `x + 2s = z + 2v`, `y + u = z + v` and
    /// `x + 2w = y + 2u` in `F_3^{n+1}` (`x, y, z` in the hyperplane `A`).
    /// Returns `None` if no orientation of the columns satisfies all four.
    pub fn decode_wicket(&self, w: &WicketWitness) -> Option<WicketLabels> {
        for columns in [[w.columns[0], w.columns[1]], [w.columns[1], w.columns[0]]] {
            let (x, s) = self.provenance(columns[0]);
            let (y, u) = self.provenance(columns[1]);
            let by_start = |start: &F3Vector| {
                w.rows
                    .iter()
                    .copied()
                    .find(|&r| self.provenance(r).0 == *start)
            };
            let (Some(row_w), Some(row_t)) = (by_start(&x), by_start(&y)) else {
                continue;
            };
            let Some(row_v) = w.rows.iter().copied().find(|&r| r != row_w && r != row_t) else {
                continue;
            };
            let (_, wd) = self.provenance(row_w);
            let (_, t) = self.provenance(row_t);
            let (z, v) = self.provenance(row_v);
            let labels = WicketLabels {
                x: x.extend(0).ok()?,
                y: y.extend(0).ok()?,
                z: z.extend(0).ok()?,
                s,
                t,
                u,
                v,
                w: wd,
            };
            if labels.equations_hold() {
                return Some(labels);
            }
        }
        None
    }
}

/// Names of the points and directions of a decoded wicket.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WicketLabels {
    pub x: F3Vector,
    pub y: F3Vector,
    pub z: F3Vector,
    pub s: F3Vector,
    pub t: F3Vector,
    pub u: F3Vector,
    pub v: F3Vector,
    pub w: F3Vector,
}

impl WicketLabels {
    pub fn equations_hold(&self) -> bool {
        let add = |a: &F3Vector, b: &F3Vector| a.add(b).expect("dimension");
        let twice = |a: &F3Vector| a.scale(2).expect("digit");
        add(&self.x, &self.s) == add(&self.y, &self.t)
            && add(&self.x, &twice(&self.s)) == add(&self.z, &twice(&self.v))
            && add(&self.y, &self.u) == add(&self.z, &self.v)
            && add(&self.x, &twice(&self.w)) == add(&self.y, &twice(&self.u))
    }

    /// `w + v = 2t` and `s + t = u + v`, what remains after eliminating the points.
    pub fn eliminated_hold(&self) -> bool {
        let add = |a: &F3Vector, b: &F3Vector| a.add(b).expect("dimension");
        add(&self.w, &self.v) == self.t.scale(2).expect("digit")
            && add(&self.s, &self.t) == add(&self.u, &self.v)
    }

    /// `t = v = w`, `s = u` and `s ≠ t`.
    pub fn is_planar(&self) -> bool {
        self.t == self.v && self.v == self.w && self.s == self.u && self.s != self.t
    }
}

/// The six lines of two directions `s, t` inside one affine plane
/// `x + span{s, t}`, and the six wickets they carry.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PlaneWicketFamily {
    /// Minimal encoding among the plane's nine points.
    pub base: u64,
    /// Indices of the two directions in the cap.
    pub directions: [usize; 2],
    /// Three lines in the first direction, then three in the second.
    pub edges: [EdgeId; 6],
    /// Wicket `i` omits `edges[i]`.
    pub wickets: Vec<WicketWitness>,
}

/// Enumerates every plane family: for each unordered pair of distinct
/// directions and each coset of their span, the six lines and six wickets.
///
/// Cosets are represented by their minimal encoding. Families come out
/// ordered by direction pair, then base.
pub fn enumerate_plane_wickets(build: &RszF3Build) -> Vec<PlaneWicketFamily> {
    let dim = build.n + 1;
    let dirs: Vec<u64> = build.directions.iter().map(F3Vector::code).collect();
    let pairs: Vec<(usize, usize)> = (0..dirs.len())
        .flat_map(|i| (i + 1..dirs.len()).map(move |j| (i, j)))
        .collect();
    let total = pow3(dim);

    pairs
        .par_iter()
        .map(|&(i, j)| {
            let (s, t) = (dirs[i], dirs[j]);
            let (s2, t2) = (code_scale(s, 2, dim), code_scale(t, 2, dim));
            let mut fams = Vec::new();
            for x in 0..total {
                let mut min = x;
                for sa in [0, s, s2] {
                    for tb in [0, t, t2] {
                        min = min.min(code_add(code_add(x, sa, dim), tb, dim));
                    }
                }
                if min != x {
                    continue;
                }
                // The line through p in direction d starts at the point of the
                // line whose last coordinate is 0; its encoding divided by 3
                // is the start in F_3^n.
                let line = |p: u64, d: u64, di: usize| -> EdgeId {
                    let last = p % 3;
                    let back = (3 - last) % 3;
                    let start = code_add(p, code_scale(d, back, dim), dim);
                    debug_assert_eq!(start % 3, 0);
                    build.edge_id(start / 3, di)
                };
                let mut edges = [0; 6];
                for (k, tb) in [0, t, t2].into_iter().enumerate() {
                    edges[k] = line(code_add(x, tb, dim), s, i);
                }
                for (k, sa) in [0, s, s2].into_iter().enumerate() {
                    edges[3 + k] = line(code_add(x, sa, dim), t, j);
                }
                let wickets = (0..6)
                    .map(|omit| {
                        let (rows, cols) = if omit < 3 { (3..6, 0..3) } else { (0..3, 3..6) };
                        let rows: Vec<EdgeId> = rows.map(|r| edges[r]).collect();
                        let cols: Vec<EdgeId> =
                            cols.filter(|&c| c != omit).map(|c| edges[c]).collect();
                        WicketWitness {
                            rows: [rows[0], rows[1], rows[2]],
                            columns: [cols[0], cols[1]],
                        }
                    })
                    .collect();
                fams.push(PlaneWicketFamily {
                    base: x,
                    directions: [i, j],
                    edges,
                    wickets,
                });
            }
            fams
        })
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect()
}

/// All wickets of the plane families, in family order.
pub fn plane_wickets(families: &[PlaneWicketFamily]) -> Vec<WicketWitness> {
    families
        .iter()
        .flat_map(|f| f.wickets.iter().copied())
        .collect()
}
