use std::collections::HashSet;

use serde::Serialize;

use crate::error::{Error, Result};

/// When a solution of an [`EquationSpec`] does not count.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "rule", rename_all = "snake_case")]
pub enum Triviality {
    /// Trivial iff every variable takes the same value.
    AllEqual,
    /// For the wicket system of the modular construction with parameter `k`,
    /// over variables `(t, v, w, u, s)`: trivial iff the five edges the
    /// assignment describes do not span nine distinct vertices.
    DegenerateModularWicket { k: i64 },
}

/// A homogeneous linear system `Σ c_i x_i = 0`, one row per equation, over
/// the integers or over `Z/m`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EquationSpec {
    pub name: String,
    pub rows: Vec<Vec<i64>>,
    pub modulus: Option<i64>,
    pub triviality: Triviality,
}

/// `n = k² − k + 1`, the modulus paired with parameter `k`.
pub fn modular_order(k: i64) -> Result<i64> {
    if !(2..=1_000_000).contains(&k) {
        return Err(Error::InvalidParameter(format!(
            "k must be in 2..=1000000, got {k}"
        )));
    }
    Ok(k * k - k + 1)
}

impl EquationSpec {
    /// `3x + y = 2z + 2w` over the integers, variables `(x, y, z, w)`.
    pub fn ruzsa() -> Self {
        Self {
            name: "3x+y=2z+2w".into(),
            rows: vec![vec![3, 1, -2, -2]],
            modulus: None,
            triviality: Triviality::AllEqual,
        }
    }

    /// `kx − (k−1)y ≡ z (mod k²−k+1)`, variables `(x, y, z)`.
    pub fn modular(k: i64) -> Result<Self> {
        let n = modular_order(k)?;
        Ok(Self {
            name: format!("{k}x-{}y=z (mod {n})", k - 1),
            rows: vec![vec![k, -(k - 1), -1]],
            modulus: Some(n),
            triviality: Triviality::AllEqual,
        })
    }

    /// The conditions for a wicket in the modular construction, variables
    /// `(t, v, w, u, s)`: `kt − (k−1)v ≡ w` and `s ≡ t + kw − ku`.
    ///
    /// Eliminating the base vertices from the four vertex coincidences of a
    /// wicket leaves exactly these two congruences. The second one expresses
    /// the remaining direction `s`; the first one no longer involves `u`.
    pub fn modular_wicket_system(k: i64) -> Result<Self> {
        let n = modular_order(k)?;
        Ok(Self {
            name: format!("wicket system k={k} (mod {n})"),
            rows: vec![vec![k, -(k - 1), -1, 0, 0], vec![1, 0, k, -k, -1]],
            modulus: Some(n),
            triviality: Triviality::DegenerateModularWicket { k },
        })
    }

    pub fn num_vars(&self) -> usize {
        self.rows.first().map_or(0, Vec::len)
    }

    fn reduce(&self, x: i64) -> i64 {
        match self.modulus {
            Some(m) => x.rem_euclid(m),
            None => x,
        }
    }

    pub fn satisfied(&self, values: &[i64]) -> bool {
        self.rows.iter().all(|row| {
            let sum: i64 = row.iter().zip(values).map(|(c, x)| c * x).sum();
            self.reduce(sum) == 0
        })
    }

    pub fn is_trivial(&self, values: &[i64]) -> bool {
        match self.triviality {
            Triviality::AllEqual => values.windows(2).all(|w| w[0] == w[1]),
            Triviality::DegenerateModularWicket { k } => {
                let n = self.modulus.expect("modular system");
                let [t, v, w, u, s] = values else {
                    return true;
                };
                !modular_wicket_spans_nine(k, n, [*t, *v, *w, *u, *s])
            }
        }
    }

    /// Coefficient sums vanish (constant assignments solve every row).
    pub fn is_invariant(&self) -> bool {
        self.rows.iter().all(|r| self.reduce(r.iter().sum()) == 0)
    }

    /// Picks a variable to solve for: one with a unit coefficient in some row.
    fn solved_variable(&self) -> Option<(usize, usize, i64)> {
        for var in (0..self.num_vars()).rev() {
            for (ri, row) in self.rows.iter().enumerate() {
                let c = row[var];
                if let Some(inv) = self.unit_inverse(c) {
                    return Some((var, ri, inv));
                }
            }
        }
        None
    }

    fn unit_inverse(&self, c: i64) -> Option<i64> {
        match self.modulus {
            None => match c {
                1 => Some(1),
                -1 => Some(-1),
                _ => None,
            },
            Some(m) => mod_inverse(c.rem_euclid(m), m),
        }
    }
}

fn mod_inverse(a: i64, m: i64) -> Option<i64> {
    let (mut old_r, mut r) = (a, m);
    let (mut old_s, mut s) = (1i64, 0i64);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    (old_r == 1).then(|| old_s.rem_euclid(m))
}

/// The five edges `(x,s), (y,t), (z,v), (y,u), (x,w)` of a candidate wicket
/// at base `x = 0`, with `y = s − t` and `z = y + u − v`, for the edge rule
/// `(a, a+s, a+ks) mod n`.
pub fn modular_wicket_edges(k: i64, n: i64, [t, v, w, u, s]: [i64; 5]) -> [[i64; 3]; 5] {
    let y = s - t;
    let z = y + u - v;
    let edge = |a: i64, d: i64| {
        [
            a.rem_euclid(n),
            (a + d).rem_euclid(n),
            (a + k * d).rem_euclid(n),
        ]
    };
    [edge(0, s), edge(y, t), edge(z, v), edge(y, u), edge(0, w)]
}

fn modular_wicket_spans_nine(k: i64, n: i64, vars: [i64; 5]) -> bool {
    let edges = modular_wicket_edges(k, n, vars);
    (0..3).all(|class| {
        let distinct: HashSet<i64> = edges.iter().map(|e| e[class]).collect();
        distinct.len() == 3
    })
}

/// First non-trivial solution with all variables drawn from `values`, in
/// lexicographic order of the enumerated variables.
///
/// With `must_use`, only solutions in which some variable equals that value
/// are considered. Values are reduced modulo the modulus, if any.
pub fn find_solution(
    values: &[i64],
    spec: &EquationSpec,
    must_use: Option<i64>,
) -> Option<Vec<i64>> {
    let mut vals: Vec<i64> = values.iter().map(|&x| spec.reduce(x)).collect();
    vals.sort_unstable();
    vals.dedup();
    let members: HashSet<i64> = vals.iter().copied().collect();
    let r = spec.num_vars();
    if r == 0 || vals.is_empty() {
        return None;
    }
    let solver = Solver {
        spec,
        vals: &vals,
        members: &members,
        must_use: must_use.map(|x| spec.reduce(x)),
        solved: spec.solved_variable(),
    };
    let free: Vec<usize> = (0..r)
        .filter(|&i| Some(i) != solver.solved.map(|s| s.0))
        .collect();
    let mut assignment = vec![0i64; r];
    solver.run(0, &free, &mut assignment).then_some(assignment)
}

struct Solver<'a> {
    spec: &'a EquationSpec,
    vals: &'a [i64],
    members: &'a HashSet<i64>,
    must_use: Option<i64>,
    /// (variable, row, inverse of its coefficient in that row)
    solved: Option<(usize, usize, i64)>,
}

impl Solver<'_> {
    fn run(&self, depth: usize, free: &[usize], assignment: &mut [i64]) -> bool {
        if depth == free.len() {
            if let Some((var, row, inv)) = self.solved {
                let rest: i64 = self.spec.rows[row]
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i != var)
                    .map(|(i, c)| c * assignment[i])
                    .sum();
                let x = self.spec.reduce(-rest * inv);
                if !self.members.contains(&x) {
                    return false;
                }
                assignment[var] = x;
            }
            return self.spec.satisfied(assignment)
                && self.must_use.is_none_or(|m| assignment.contains(&m))
                && !self.spec.is_trivial(assignment);
        }
        for &x in self.vals {
            assignment[free[depth]] = x;
            if self.run(depth + 1, free, assignment) {
                return true;
            }
        }
        false
    }
}

/// Whether `values` admits a non-trivial solution.
pub fn has_solution(values: &[i64], spec: &EquationSpec) -> bool {
    find_solution(values, spec, None).is_some()
}
