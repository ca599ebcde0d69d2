//! Exact arithmetic on the Eisenstein integers `a + ωb`, `ω = (−1 + i√3)/2`.
//!
//! Everything reduces to `ω² = −1 − ω`, so `ω·(a + ωb) = −b + (a − b)ω` and
//! the norm of `a + ωb` is `a² − ab + b²`.

use std::collections::HashSet;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(
    Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize,
)]
pub struct EisensteinPoint {
    pub a: i64,
    pub b: i64,
}

impl EisensteinPoint {
    pub const ZERO: Self = Self { a: 0, b: 0 };
    pub const ONE: Self = Self { a: 1, b: 0 };
    pub const OMEGA: Self = Self { a: 0, b: 1 };

    pub const fn new(a: i64, b: i64) -> Self {
        Self { a, b }
    }

    pub fn mul_omega(self) -> Self {
        Self::new(-self.b, self.a - self.b)
    }

    /// Multiplication by `ω² = −1 − ω`.
    pub fn mul_omega2(self) -> Self {
        self.mul_omega().mul_omega()
    }

    pub fn scale(self, c: i64) -> Self {
        Self::new(c * self.a, c * self.b)
    }

    /// Ring norm `|a + ωb|² = a² − ab + b²`.
    pub fn norm(self) -> i64 {
        self.a * self.a - self.a * self.b + self.b * self.b
    }

    /// `a² + b²`, the bound of [`NormMode::Paper`] regions.
    pub fn square_sum(self) -> i64 {
        self.a * self.a + self.b * self.b
    }

    /// Cartesian coordinates, for plotting and display only.
    pub fn to_complex(self) -> (f64, f64) {
        let half_sqrt3 = 3f64.sqrt() / 2.0;
        (
            self.a as f64 - 0.5 * self.b as f64,
            half_sqrt3 * self.b as f64,
        )
    }
}

impl Add for EisensteinPoint {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::new(self.a + o.a, self.b + o.b)
    }
}

impl Sub for EisensteinPoint {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self::new(self.a - o.a, self.b - o.b)
    }
}

impl Neg for EisensteinPoint {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.a, -self.b)
    }
}

impl Mul for EisensteinPoint {
    type Output = Self;
    /// `(a + ωb)(c + ωd) = (ac − bd) + (ad + bc − bd)ω`.
    fn mul(self, o: Self) -> Self {
        Self::new(
            self.a * o.a - self.b * o.b,
            self.a * o.b + self.b * o.a - self.b * o.b,
        )
    }
}

/// `1 + ω = −ω²`, rotation by 60°.
const SIXTH_ROOT: EisensteinPoint = EisensteinPoint::new(1, 1);

/// Does `t − w = ω(w − v)` or `t − w = ω²(w − v)` hold for some labeling of
/// the three points?
///
/// Two orientation equations over all six labelings cover every equilateral
/// triangle of the lattice, whatever its orientation.
pub fn is_equilateral(p: EisensteinPoint, q: EisensteinPoint, r: EisensteinPoint) -> Result<bool> {
    if p == q || q == r || p == r {
        return Err(Error::InvalidParameter("points must be distinct".into()));
    }
    let labelings = [
        (p, q, r),
        (p, r, q),
        (q, p, r),
        (q, r, p),
        (r, p, q),
        (r, q, p),
    ];
    Ok(labelings.iter().any(|&(t, v, w)| {
        let lhs = t - w;
        let rhs = w - v;
        lhs == rhs.mul_omega() || lhs == rhs.mul_omega2()
    }))
}

/// The two points completing `p, q` to an equilateral triangle.
pub fn equilateral_apexes(p: EisensteinPoint, q: EisensteinPoint) -> [EisensteinPoint; 2] {
    let d = q - p;
    [p + SIXTH_ROOT * d, p - d.mul_omega()]
}

/// First equilateral triple of `points`, by pair completion.
pub fn find_equilateral(points: &[EisensteinPoint]) -> Option<[EisensteinPoint; 3]> {
    let mut sorted = points.to_vec();
    sorted.sort_unstable();
    let set: HashSet<EisensteinPoint> = sorted.iter().copied().collect();
    for (i, &p) in sorted.iter().enumerate() {
        for &q in &sorted[i + 1..] {
            for r in equilateral_apexes(p, q) {
                if r > q && set.contains(&r) {
                    return Some([p, q, r]);
                }
            }
        }
    }
    None
}

/// Which norm bounds a region.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum NormMode {
    /// `a² + b² ≤ n`.
    #[default]
    Paper,
    /// `a² − ab + b² ≤ n`, the ring norm.
    Ring,
}

impl std::str::FromStr for NormMode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "paper" => Ok(Self::Paper),
            "ring" | "true" => Ok(Self::Ring),
            _ => Err(Error::InvalidParameter(format!("unknown norm mode '{s}'"))),
        }
    }
}

/// All lattice points of norm at most `bound`, sorted by `(a, b)`.
pub fn region(bound: i64, mode: NormMode) -> Vec<EisensteinPoint> {
    if bound < 0 {
        return Vec::new();
    }
    // a² − ab + b² ≥ (a² + b²)/2, so both modes fit in |a|, |b| ≤ √(2·bound).
    let r = ((2 * bound) as f64).sqrt().ceil() as i64 + 1;
    let mut out = Vec::new();
    for a in -r..=r {
        for b in -r..=r {
            let p = EisensteinPoint::new(a, b);
            let n = match mode {
                NormMode::Paper => p.square_sum(),
                NormMode::Ring => p.norm(),
            };
            if n <= bound {
                out.push(p);
            }
        }
    }
    out
}

/// An assignment of the wicket system of the Eisenstein construction
/// (edges `(a, a − s, a + ωs)`), with a base point `x` of the first column.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct EisensteinWicketSolution {
    pub t: EisensteinPoint,
    pub v: EisensteinPoint,
    pub w: EisensteinPoint,
    pub u: EisensteinPoint,
    pub s: EisensteinPoint,
    pub x: EisensteinPoint,
}

impl EisensteinWicketSolution {
    /// The five edges `(x,s), (y,t), (z,v), (y,u), (x,w)` as vertex triples.
    pub fn edges(&self) -> [[EisensteinPoint; 3]; 5] {
        wicket_edges(self.x, [self.t, self.v, self.w, self.u, self.s])
    }

    /// Start points `(x, y, z)` of the edges.
    pub fn starts(&self) -> [EisensteinPoint; 3] {
        let y = self.x - self.s + self.t;
        let z = y - self.u + self.v;
        [self.x, y, z]
    }
}

fn wicket_edges(
    x: EisensteinPoint,
    [t, v, w, u, s]: [EisensteinPoint; 5],
) -> [[EisensteinPoint; 3]; 5] {
    let y = x - s + t;
    let z = y - u + v;
    let edge = |a: EisensteinPoint, d: EisensteinPoint| [a, a - d, a + d.mul_omega()];
    [edge(x, s), edge(y, t), edge(z, v), edge(y, u), edge(x, w)]
}

fn spans_nine(edges: &[[EisensteinPoint; 3]; 5]) -> bool {
    (0..3).all(|class| edges.iter().map(|e| e[class]).collect::<HashSet<_>>().len() == 3)
}

/// Searches the wicket system `t − w = ω(w − v)`, `s = t + ω(u − w)` over
/// `set`, keeping assignments whose five edges span nine distinct vertices.
///
/// With `starts`, a base point `x` is also required such that all three edge
/// starts `x, y, z` lie in `starts` (the finite region edges begin in);
/// otherwise the base point is `0`.
pub fn find_eisenstein_wicket(
    set: &[EisensteinPoint],
    starts: Option<&[EisensteinPoint]>,
) -> Option<EisensteinWicketSolution> {
    let mut sorted = set.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    let members: HashSet<EisensteinPoint> = sorted.iter().copied().collect();
    let start_set: Option<HashSet<EisensteinPoint>> = starts.map(|s| s.iter().copied().collect());
    for &w in &sorted {
        for &v in &sorted {
            let t = SIXTH_ROOT * w - v.mul_omega();
            if !members.contains(&t) {
                continue;
            }
            for &u in &sorted {
                let s = t + (u - w).mul_omega();
                if !members.contains(&s) {
                    continue;
                }
                let vars = [t, v, w, u, s];
                if !spans_nine(&wicket_edges(EisensteinPoint::ZERO, vars)) {
                    continue;
                }
                let x = match (&start_set, starts) {
                    (Some(allowed), Some(list)) => {
                        let mut bases = list.to_vec();
                        bases.sort_unstable();
                        bases.into_iter().find(|&x| {
                            let y = x - s + t;
                            let z = y - u + v;
                            allowed.contains(&x) && allowed.contains(&y) && allowed.contains(&z)
                        })
                    }
                    _ => Some(EisensteinPoint::ZERO),
                };
                if let Some(x) = x {
                    return Some(EisensteinWicketSolution { t, v, w, u, s, x });
                }
            }
        }
    }
    None
}
