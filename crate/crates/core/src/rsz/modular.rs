//! The construction over `Z/n` with `n = k² − k + 1` and edges `(a, a+s, a+ks)`.

use crate::eqfree::modular_order;
use crate::error::{Error, Result};
use crate::hypergraph::{EdgeId, TripartiteHypergraph};

#[derive(Clone, Debug)]
pub struct ModularBuild {
    k: i64,
    modulus: i64,
    set: Vec<i64>,
    hypergraph: TripartiteHypergraph,
}

impl ModularBuild {
    /// Edge `a·|S| + j` is `(a, a + S[j], a + k·S[j])`; `S` is sorted.
    ///
    /// Any two vertices of an edge fix the third because `k` and `k − 1` are
    /// units modulo `k² − k + 1`, so the result is always linear.
    pub fn new(set: &[i64], k: i64) -> Result<Self> {
        let modulus = modular_order(k)?;
        let mut set = set.to_vec();
        set.sort_unstable();
        if let Some(&x) = set.iter().find(|&&x| !(0..modulus).contains(&x)) {
            return Err(Error::InvalidParameter(format!(
                "{x} is not a residue mod {modulus}"
            )));
        }
        if let Some(w) = set.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateElement(w[0].to_string()));
        }
        let mut edges = Vec::with_capacity(modulus as usize * set.len());
        for a in 0..modulus {
            for &s in &set {
                edges.push([
                    a as usize,
                    (a + s).rem_euclid(modulus) as usize,
                    (a + k * s).rem_euclid(modulus) as usize,
                ]);
            }
        }
        let hypergraph = TripartiteHypergraph::new([modulus as usize; 3], edges)?;
        Ok(Self {
            k,
            modulus,
            set,
            hypergraph,
        })
    }

    pub fn k(&self) -> i64 {
        self.k
    }

    pub fn modulus(&self) -> i64 {
        self.modulus
    }

    pub fn set(&self) -> &[i64] {
        &self.set
    }

    pub fn hypergraph(&self) -> &TripartiteHypergraph {
        &self.hypergraph
    }

    /// `(a, s)` of an edge.
    pub fn provenance(&self, edge: EdgeId) -> (i64, i64) {
        let len = self.set.len();
        ((edge / len) as i64, self.set[edge % len])
    }
}
