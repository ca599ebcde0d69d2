//! Largest solution-free sets: exact branch and bound, greedy and annealing.
//!
//! A problem is a finite domain plus the forbidden configurations on it. The
//! exact search works with the forbidden *supports* (sets of distinct domain
//! elements that together carry a non-trivial solution); the heuristics only
//! ask whether adding one element to a free set creates a solution.

use std::collections::{BTreeSet, HashSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::eisenstein::{equilateral_apexes, find_equilateral, region, EisensteinPoint, NormMode};
use super::equation::{find_solution, EquationSpec};
use crate::error::{Error, Result};

/// Default domain size limit for exhaustive search.
pub const EXHAUSTIVE_LIMIT: usize = 30;

/// Largest region searched exactly when the mode is [`TriangleMode::Auto`].
pub const TRIANGLE_AUTO_LIMIT: usize = 22;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Exhaustive,
    Greedy,
    Local,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SearchResult<T> {
    pub set: Vec<T>,
    pub size: usize,
    pub method: Method,
    /// The set passed an independent full re-check.
    pub verified: bool,
    /// Maximum certified by a complete search.
    pub optimal: bool,
}

/// A finite domain with forbidden configurations.
pub trait FreenessProblem {
    type Item: Clone + Ord;

    fn domain(&self) -> &[Self::Item];

    /// Whether adding `candidate` to the free set `chosen` (domain indices)
    /// creates a forbidden configuration.
    fn conflicts(&self, chosen: &[usize], candidate: usize) -> bool;

    /// Every forbidden support, as sorted domain indices.
    fn forbidden_supports(&self) -> Vec<Vec<usize>>;

    /// Full re-check of a set, independent of the incremental tests above.
    fn is_free(&self, chosen: &[usize]) -> bool;
}

/// Sets free of non-trivial solutions of an equation.
#[derive(Clone, Debug)]
pub struct EquationProblem {
    pub spec: EquationSpec,
    domain: Vec<i64>,
}

impl EquationProblem {
    pub fn new(spec: EquationSpec, mut domain: Vec<i64>) -> Self {
        domain.sort_unstable();
        domain.dedup();
        Self { spec, domain }
    }

    /// Equation (`3x + y = 2z + 2w`) over `{1, …, n}`.
    pub fn ruzsa(n: i64) -> Self {
        Self::new(EquationSpec::ruzsa(), (1..=n).collect())
    }

    /// `kx − (k−1)y ≡ z` over `Z/(k² − k + 1)`.
    pub fn modular(k: i64) -> Result<Self> {
        let spec = EquationSpec::modular(k)?;
        let n = spec.modulus.expect("modular");
        Ok(Self::new(spec, (0..n).collect()))
    }

    fn values(&self, idx: &[usize]) -> Vec<i64> {
        idx.iter().map(|&i| self.domain[i]).collect()
    }
}

impl FreenessProblem for EquationProblem {
    type Item = i64;

    fn domain(&self) -> &[i64] {
        &self.domain
    }

    fn conflicts(&self, chosen: &[usize], candidate: usize) -> bool {
        let mut vals = self.values(chosen);
        vals.push(self.domain[candidate]);
        find_solution(&vals, &self.spec, Some(self.domain[candidate])).is_some()
    }

    fn forbidden_supports(&self) -> Vec<Vec<usize>> {
        // Enumerate every assignment over the domain; a solution's support is
        // the set of distinct values it uses.
        let r = self.spec.num_vars();
        let index_of: std::collections::HashMap<i64, usize> = self
            .domain
            .iter()
            .enumerate()
            .map(|(i, &x)| (x, i))
            .collect();
        let mut supports = BTreeSet::new();
        let mut assignment = vec![0usize; r];
        let n = self.domain.len();
        if n == 0 || r == 0 {
            return Vec::new();
        }
        let modulus = self.spec.modulus;
        loop {
            let vals: Vec<i64> = assignment.iter().map(|&i| self.domain[i]).collect();
            if self.spec.satisfied(&vals) && !self.spec.is_trivial(&vals) {
                let mut support: Vec<usize> = vals
                    .iter()
                    .map(|x| index_of[&modulus.map_or(*x, |m| x.rem_euclid(m))])
                    .collect();
                support.sort_unstable();
                support.dedup();
                supports.insert(support);
            }
            // odometer
            let mut pos = 0;
            loop {
                if pos == r {
                    return supports.into_iter().collect();
                }
                assignment[pos] += 1;
                if assignment[pos] < n {
                    break;
                }
                assignment[pos] = 0;
                pos += 1;
            }
        }
    }

    fn is_free(&self, chosen: &[usize]) -> bool {
        find_solution(&self.values(chosen), &self.spec, None).is_none()
    }
}

/// Point sets of the triangular lattice with no equilateral triple.
#[derive(Clone, Debug)]
pub struct TriangleProblem {
    points: Vec<EisensteinPoint>,
}

impl TriangleProblem {
    pub fn new(mut points: Vec<EisensteinPoint>) -> Self {
        points.sort_unstable();
        points.dedup();
        Self { points }
    }

    pub fn region(bound: i64, mode: NormMode) -> Self {
        Self::new(region(bound, mode))
    }
}

impl FreenessProblem for TriangleProblem {
    type Item = EisensteinPoint;

    fn domain(&self) -> &[EisensteinPoint] {
        &self.points
    }

    fn conflicts(&self, chosen: &[usize], candidate: usize) -> bool {
        let set: HashSet<EisensteinPoint> = chosen.iter().map(|&i| self.points[i]).collect();
        let c = self.points[candidate];
        chosen.iter().any(|&i| {
            equilateral_apexes(c, self.points[i])
                .iter()
                .any(|r| set.contains(r))
        })
    }

    fn forbidden_supports(&self) -> Vec<Vec<usize>> {
        let index_of: std::collections::HashMap<EisensteinPoint, usize> = self
            .points
            .iter()
            .enumerate()
            .map(|(i, &p)| (p, i))
            .collect();
        let mut out = BTreeSet::new();
        for i in 0..self.points.len() {
            for j in i + 1..self.points.len() {
                for r in equilateral_apexes(self.points[i], self.points[j]) {
                    if let Some(&k) = index_of.get(&r) {
                        let mut t = vec![i, j, k];
                        t.sort_unstable();
                        out.insert(t);
                    }
                }
            }
        }
        out.into_iter().collect()
    }

    fn is_free(&self, chosen: &[usize]) -> bool {
        let pts: Vec<EisensteinPoint> = chosen.iter().map(|&i| self.points[i]).collect();
        find_equilateral(&pts).is_none()
    }
}

fn finish<P: FreenessProblem>(
    p: &P,
    mut idx: Vec<usize>,
    method: Method,
    optimal: bool,
) -> SearchResult<P::Item> {
    idx.sort_unstable();
    let verified = p.is_free(&idx);
    SearchResult {
        size: idx.len(),
        set: idx.iter().map(|&i| p.domain()[i].clone()).collect(),
        method,
        verified,
        optimal,
    }
}

/// Exact maximum by branch and bound.
///
/// Elements are decided in domain order, include-first. Including an element
/// excludes every element that would complete a forbidden support; a branch
/// is cut when the chosen count plus the still-open elements cannot beat the
/// incumbent.
pub fn max_free_exhaustive<P: FreenessProblem>(
    problem: &P,
    limit: usize,
) -> Result<SearchResult<P::Item>> {
    let n = problem.domain().len();
    if n > limit {
        return Err(Error::DomainTooLarge { size: n, limit });
    }
    let supports = problem.forbidden_supports();
    let best = BranchAndBound::new(n, supports).solve();
    Ok(finish(problem, best, Method::Exhaustive, true))
}

struct BranchAndBound {
    n: usize,
    supports: Vec<Vec<usize>>,
    by_elem: Vec<Vec<usize>>,
    count: Vec<usize>,
    excluded: Vec<u32>,
    in_set: Vec<bool>,
    chosen: Vec<usize>,
    best: Vec<usize>,
    found: bool,
}

impl BranchAndBound {
    fn new(n: usize, supports: Vec<Vec<usize>>) -> Self {
        let mut by_elem = vec![Vec::new(); n];
        let mut excluded = vec![0u32; n];
        for (si, s) in supports.iter().enumerate() {
            if s.len() == 1 {
                excluded[s[0]] += 1;
            }
            for &e in s {
                by_elem[e].push(si);
            }
        }
        Self {
            n,
            count: vec![0; supports.len()],
            supports,
            by_elem,
            excluded,
            in_set: vec![false; n],
            chosen: Vec::new(),
            best: Vec::new(),
            found: false,
        }
    }

    fn missing_member(&self, si: usize) -> usize {
        *self.supports[si]
            .iter()
            .find(|&&m| !self.in_set[m])
            .expect("support has an unchosen member")
    }

    fn include(&mut self, e: usize) {
        self.in_set[e] = true;
        self.chosen.push(e);
        for k in 0..self.by_elem[e].len() {
            let si = self.by_elem[e][k];
            self.count[si] += 1;
            if self.count[si] + 1 == self.supports[si].len() {
                let m = self.missing_member(si);
                self.excluded[m] += 1;
            }
        }
    }

    fn remove(&mut self, e: usize) {
        for k in 0..self.by_elem[e].len() {
            let si = self.by_elem[e][k];
            if self.count[si] + 1 == self.supports[si].len() {
                let m = self.missing_member(si);
                self.excluded[m] -= 1;
            }
            self.count[si] -= 1;
        }
        self.in_set[e] = false;
        self.chosen.pop();
    }

    fn run(&mut self, idx: usize) {
        let open = (idx..self.n).filter(|&j| self.excluded[j] == 0).count();
        if self.found && self.chosen.len() + open <= self.best.len() {
            return;
        }
        if idx == self.n {
            self.best = self.chosen.clone();
            self.found = true;
            return;
        }
        if self.excluded[idx] == 0 {
            self.include(idx);
            self.run(idx + 1);
            self.remove(idx);
        }
        self.run(idx + 1);
    }

    fn solve(mut self) -> Vec<usize> {
        self.run(0);
        self.best
    }
}

/// Greedy insertion in domain order.
pub fn greedy<P: FreenessProblem>(problem: &P) -> SearchResult<P::Item> {
    finish(problem, greedy_indices(problem), Method::Greedy, false)
}

fn greedy_indices<P: FreenessProblem>(problem: &P) -> Vec<usize> {
    let mut chosen = Vec::new();
    for j in 0..problem.domain().len() {
        if !problem.conflicts(&chosen, j) {
            chosen.push(j);
        }
    }
    chosen
}

/// Parameters for [`max_free_heuristic`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AnnealingSchedule {
    pub seed: u64,
    /// Number of proposed moves.
    pub budget: u64,
    pub start_temperature: f64,
    pub end_temperature: f64,
}

impl AnnealingSchedule {
    pub fn new(seed: u64, budget: u64) -> Self {
        Self {
            seed,
            budget,
            start_temperature: 1.0,
            end_temperature: 0.02,
        }
    }
}

/// Greedy start followed by simulated annealing over add/remove/swap moves.
///
/// A removal costs one element and is accepted with probability `e^{−1/T}`;
/// additions are always accepted; a swap drops one member that blocks a new
/// element and adds that element. The temperature decays geometrically. The
/// returned set is the best one seen, so it is never smaller than the greedy
/// start.
pub fn max_free_heuristic<P: FreenessProblem>(
    problem: &P,
    schedule: AnnealingSchedule,
) -> SearchResult<P::Item> {
    let n = problem.domain().len();
    let start = greedy_indices(problem);
    if n == 0 || schedule.budget == 0 {
        return finish(problem, start, Method::Local, false);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(schedule.seed);
    let mut current: Vec<usize> = start.clone();
    let mut in_set = vec![false; n];
    for &i in &current {
        in_set[i] = true;
    }
    let mut best = start;
    let ratio =
        (schedule.end_temperature / schedule.start_temperature).powf(1.0 / schedule.budget as f64);
    let mut temperature = schedule.start_temperature;

    for _ in 0..schedule.budget {
        let j = rng.gen_range(0..n);
        if in_set[j] {
            if rng.gen::<f64>() < (-1.0 / temperature).exp() {
                current.retain(|&x| x != j);
                in_set[j] = false;
            }
        } else if !problem.conflicts(&current, j) {
            current.push(j);
            in_set[j] = true;
        } else {
            let blockers: Vec<usize> = current
                .iter()
                .copied()
                .filter(|&r| {
                    let rest: Vec<usize> = current.iter().copied().filter(|&x| x != r).collect();
                    !problem.conflicts(&rest, j)
                })
                .collect();
            if !blockers.is_empty() {
                let r = blockers[rng.gen_range(0..blockers.len())];
                current.retain(|&x| x != r);
                in_set[r] = false;
                current.push(j);
                in_set[j] = true;
            }
        }
        if current.len() > best.len() {
            best = current.clone();
        }
        temperature *= ratio;
    }
    finish(problem, best, Method::Local, false)
}

/// How [`max_trianglefree`] searches.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum TriangleMode {
    /// Exact up to [`TRIANGLE_AUTO_LIMIT`] points, annealing beyond.
    Auto(AnnealingSchedule),
    Exhaustive,
    Greedy,
    Local(AnnealingSchedule),
}

/// Largest equilateral-triangle-free subset of a lattice region.
pub fn max_trianglefree(
    bound: i64,
    norm: NormMode,
    mode: TriangleMode,
) -> Result<SearchResult<EisensteinPoint>> {
    let problem = TriangleProblem::region(bound, norm);
    if problem.domain().is_empty() {
        return Err(Error::InvalidParameter(format!(
            "region of norm bound {bound} is empty"
        )));
    }
    Ok(match mode {
        TriangleMode::Auto(schedule) => {
            if problem.domain().len() <= TRIANGLE_AUTO_LIMIT {
                max_free_exhaustive(&problem, TRIANGLE_AUTO_LIMIT)?
            } else {
                max_free_heuristic(&problem, schedule)
            }
        }
        TriangleMode::Exhaustive => max_free_exhaustive(&problem, EXHAUSTIVE_LIMIT)?,
        TriangleMode::Greedy => greedy(&problem),
        TriangleMode::Local(schedule) => max_free_heuristic(&problem, schedule),
    })
}
