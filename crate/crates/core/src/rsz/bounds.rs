//! Exponents and cap-set bounds implied by the construction.

use serde::Serialize;

use crate::error::{Error, Result};

/// Best known cap-set upper bound base: caps in `F_3^n` have at most `2.756^n` points.
pub const CAP_UPPER_BASE: f64 = 2.756;

/// Exponent `1 + (3/4)·log_3(base)` obtained from caps of size `base^n`.
///
/// The largest colour class has `3^n|S|/k` edges with `k = (120|S|)^{1/4}`,
/// about `(3·base^{3/4})^n` up to a constant, on `m = 3^{n+1}` vertices.
pub fn asymptotic_exponent(base: f64) -> Result<f64> {
    if base.is_nan() || base <= 1.0 || base.is_infinite() {
        return Err(Error::InvalidParameter(format!(
            "cap base must be > 1, got {base}"
        )));
    }
    Ok(1.0 + 0.75 * base.ln() / 3f64.ln())
}

/// Base of the cap bound `3^{(4/3)(1−c)n}` implied by `ex_L(m, W) ≤ m^{2−c}`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct CorollaryBound {
    pub c: f64,
    pub base: f64,
    /// Whether `base` beats [`CAP_UPPER_BASE`].
    pub improves: bool,
}

pub fn corollary_cap_bound(c: f64) -> Result<CorollaryBound> {
    if !(c > 0.0 && c < 1.0) {
        return Err(Error::InvalidParameter(format!(
            "c must lie in (0, 1), got {c}"
        )));
    }
    let base = 3f64.powf(4.0 / 3.0 * (1.0 - c));
    Ok(CorollaryBound {
        c,
        base,
        improves: base < CAP_UPPER_BASE,
    })
}

/// The Gowers–Long constant implied by a lower bound `m^exponent`: `2 − exponent`.
pub fn gl_constant(exponent: f64) -> f64 {
    2.0 - exponent
}

/// Numbers describing one concrete build and its colouring.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundsReport {
    pub n: usize,
    pub set_size: usize,
    /// `m = 3^{n+1}`.
    pub vertices: u64,
    pub edges: usize,
    pub wickets: usize,
    pub max_dependency_degree: usize,
    pub k: usize,
    pub selected_edges: usize,
    /// `log(selected_edges) / log(m)`; absent when nothing was selected.
    pub exponent: Option<f64>,
    /// `1 + (3/4)·log_3(|S|^{1/n})`, the exponent caps of this density give
    /// in the limit; absent for `n = 0` or `|S| ≤ 1`.
    pub asymptotic_exponent: Option<f64>,
}

impl BoundsReport {
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        n: usize,
        set_size: usize,
        edges: usize,
        wickets: usize,
        max_dependency_degree: usize,
        k: usize,
        selected_edges: usize,
    ) -> Self {
        let vertices = 3u64.pow(n as u32 + 1);
        let exponent =
            (selected_edges > 0).then(|| (selected_edges as f64).ln() / (vertices as f64).ln());
        let asymptotic_exponent = (n > 0 && set_size > 1)
            .then(|| (set_size as f64).powf(1.0 / n as f64))
            .and_then(|base| asymptotic_exponent(base).ok());
        Self {
            n,
            set_size,
            vertices,
            edges,
            wickets,
            max_dependency_degree,
            k,
            selected_edges,
            exponent,
            asymptotic_exponent,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exponents() {
        assert!((asymptotic_exponent(3.0).unwrap() - 1.75).abs() < 1e-12);
        assert!((asymptotic_exponent(2.2202).unwrap() - 1.5445).abs() < 1e-4);
        assert!((asymptotic_exponent(2.233).unwrap() - 1.5484).abs() < 1e-4);
        assert!(asymptotic_exponent(1.0).is_err());
        assert!(asymptotic_exponent(f64::NAN).is_err());
    }

    #[test]
    fn corollary() {
        let b = corollary_cap_bound(0.31).unwrap();
        assert!((b.base - 3f64.powf(0.92)).abs() < 1e-12);
        assert!(b.improves);
        let b = corollary_cap_bound(0.25).unwrap();
        assert!((b.base - 3.0).abs() < 1e-12 && !b.improves);
        let b = corollary_cap_bound(1e-9).unwrap();
        assert!((b.base - 3f64.powf(4.0 / 3.0)).abs() < 1e-6 && !b.improves);
        assert!(corollary_cap_bound(0.0).is_err());
        assert!(corollary_cap_bound(1.0).is_err());
    }

    #[test]
    fn gl() {
        assert!((gl_constant(1.544) - 0.456).abs() < 1e-12);
        assert!((gl_constant(1.5) - 0.5).abs() < 1e-12);
        assert!((gl_constant(2.0 - 1e-6) - 1e-6).abs() < 1e-12);
    }

    #[test]
    fn report() {
        let r = BoundsReport::new(1, 2, 6, 6, 5, 4, 2);
        assert_eq!(r.vertices, 9);
        assert!((r.exponent.unwrap() - 2f64.ln() / 9f64.ln()).abs() < 1e-12);
        assert!((r.asymptotic_exponent.unwrap() - asymptotic_exponent(2.0).unwrap()).abs() < 1e-12);
        assert_eq!(
            BoundsReport::new(0, 1, 1, 0, 0, 4, 1).asymptotic_exponent,
            None
        );
    }
}
