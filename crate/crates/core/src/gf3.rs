//! Vectors over F_3, cap sets and exact small-dimension cap search.
//!
//! A vector of `F_3^n` is stored as its digits, most significant first. The
//! canonical integer encoding is the base-3 value of those digits, so sorting
//! vectors of one dimension sorts them by encoding.
//!
//! Three distinct points of `F_3^n` are collinear exactly when they sum to
//! zero, so a cap set (no three points on a line) is the same thing as a set
//! without three-term arithmetic progressions.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Largest supported dimension; `3^40` still fits in a `u64` encoding.
pub const MAX_DIMENSION: usize = 40;

/// A point of `F_3^n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct F3Vector {
    coords: Vec<u8>,
}

impl F3Vector {
    pub fn new(coords: Vec<u8>) -> Result<Self> {
        if coords.len() > MAX_DIMENSION {
            return Err(Error::DimensionTooLarge(coords.len()));
        }
        if let Some(&d) = coords.iter().find(|&&d| d > 2) {
            return Err(Error::InvalidDigit(d));
        }
        Ok(Self { coords })
    }

    pub fn zero(dim: usize) -> Self {
        Self {
            coords: vec![0; dim],
        }
    }

    /// Decodes the base-3 value `code` into a vector of dimension `dim`.
    pub fn from_code(mut code: u64, dim: usize) -> Self {
        let mut coords = vec![0u8; dim];
        for slot in coords.iter_mut().rev() {
            *slot = (code % 3) as u8;
            code /= 3;
        }
        debug_assert_eq!(code, 0, "code out of range for dimension");
        Self { coords }
    }

    pub fn code(&self) -> u64 {
        self.coords.iter().fold(0u64, |acc, &d| acc * 3 + d as u64)
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[u8] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&d| d == 0)
    }

    pub fn add(&self, other: &F3Vector) -> Result<F3Vector> {
        self.check_dim(other)?;
        Ok(Self {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| (a + b) % 3)
                .collect(),
        })
    }

    pub fn sub(&self, other: &F3Vector) -> Result<F3Vector> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> F3Vector {
        Self {
            coords: self.coords.iter().map(|&d| (3 - d) % 3).collect(),
        }
    }

    /// Multiplies by the scalar `c`, which must itself be a digit.
    pub fn scale(&self, c: u8) -> Result<F3Vector> {
        if c > 2 {
            return Err(Error::InvalidDigit(c));
        }
        Ok(Self {
            coords: self.coords.iter().map(|&d| (d * c) % 3).collect(),
        })
    }

    /// Appends one trailing coordinate.
    pub fn extend(&self, digit: u8) -> Result<F3Vector> {
        let mut coords = self.coords.clone();
        coords.push(digit);
        F3Vector::new(coords)
    }

    pub fn concat(&self, other: &F3Vector) -> Result<F3Vector> {
        let mut coords = self.coords.clone();
        coords.extend_from_slice(&other.coords);
        F3Vector::new(coords)
    }

    fn check_dim(&self, other: &F3Vector) -> Result<()> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                left: self.dim(),
                right: other.dim(),
            });
        }
        Ok(())
    }
}

impl fmt::Display for F3Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for d in &self.coords {
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

impl FromStr for F3Vector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let coords = s
            .bytes()
            .map(|b| match b {
                b'0'..=b'2' => Ok(b - b'0'),
                _ => Err(Error::InvalidParameter(format!(
                    "'{}' is not a digit of F_3",
                    b as char
                ))),
            })
            .collect::<Result<Vec<u8>>>()?;
        F3Vector::new(coords)
    }
}

/// Digitwise arithmetic on encodings, used by the constructions' inner loops.
pub(crate) fn code_add(mut a: u64, mut b: u64, dim: usize) -> u64 {
    let mut out = 0u64;
    let mut place = 1u64;
    for _ in 0..dim {
        out += ((a % 3 + b % 3) % 3) * place;
        a /= 3;
        b /= 3;
        place *= 3;
    }
    out
}

pub(crate) fn code_scale(mut a: u64, c: u64, dim: usize) -> u64 {
    let mut out = 0u64;
    let mut place = 1u64;
    for _ in 0..dim {
        out += ((a % 3) * c % 3) * place;
        a /= 3;
        place *= 3;
    }
    out
}

pub(crate) fn pow3(n: usize) -> u64 {
    3u64.pow(n as u32)
}

/// A set of distinct points of `F_3^n`, optionally certified AP3-free.
///
/// Elements are kept sorted by encoding. Only [`CapSet::verify`] (or an
/// operation that provably preserves freeness) sets the verified flag.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CapSet {
    dimension: usize,
    elements: Vec<F3Vector>,
    verified: bool,
}

impl CapSet {
    /// Builds an unverified set; rejects wrong dimensions and repeated points.
    pub fn new(dimension: usize, elements: impl IntoIterator<Item = F3Vector>) -> Result<Self> {
        if dimension > MAX_DIMENSION {
            return Err(Error::DimensionTooLarge(dimension));
        }
        let mut elements: Vec<F3Vector> = elements.into_iter().collect();
        for e in &elements {
            if e.dim() != dimension {
                return Err(Error::DimensionMismatch {
                    left: dimension,
                    right: e.dim(),
                });
            }
        }
        elements.sort();
        if let Some(w) = elements.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateElement(w[0].to_string()));
        }
        Ok(Self {
            dimension,
            elements,
            verified: false,
        })
    }

    /// Builds and verifies in one step.
    pub fn verified(
        dimension: usize,
        elements: impl IntoIterator<Item = F3Vector>,
    ) -> Result<Self> {
        Self::new(dimension, elements)?.verify()
    }

    pub fn empty(dimension: usize) -> Self {
        Self {
            dimension,
            elements: Vec::new(),
            verified: true,
        }
    }

    /// Checks AP3-freeness and returns the set flagged as verified.
    pub fn verify(mut self) -> Result<Self> {
        if let Some([x, y, z]) = self.find_ap3() {
            return Err(Error::NotACap(x.to_string(), y.to_string(), z.to_string()));
        }
        self.verified = true;
        Ok(self)
    }

    pub fn is_verified(&self) -> bool {
        self.verified
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[F3Vector] {
        &self.elements
    }

    pub fn iter(&self) -> impl Iterator<Item = &F3Vector> {
        self.elements.iter()
    }

    pub fn contains(&self, v: &F3Vector) -> bool {
        self.elements.binary_search(v).is_ok()
    }

    /// First three-term progression `x < y < z` (by encoding), if any.
    ///
    /// Pair completion: for each pair `x < y` the only point completing a
    /// line is `-x-y`, looked up in a hash set of encodings.
    pub fn find_ap3(&self) -> Option<[F3Vector; 3]> {
        let codes: HashSet<u64> = self.elements.iter().map(F3Vector::code).collect();
        for (i, x) in self.elements.iter().enumerate() {
            for y in &self.elements[i + 1..] {
                let z = x.add(y).expect("same dimension").neg();
                if z > *y && codes.contains(&z.code()) {
                    return Some([x.clone(), y.clone(), z]);
                }
            }
        }
        None
    }

    pub fn is_ap3_free(&self) -> bool {
        self.find_ap3().is_none()
    }

    /// Cartesian product `{(x, y)}`, a cap of size `|S1|·|S2|` in dimension
    /// `n1 + n2`.
    ///
    /// If `(x1,y1) + (x2,y2) + (x3,y3) = 0` with distinct pairs, then the
    /// first blocks sum to zero, forcing `x1 = x2 = x3`, and then the second
    /// blocks form a progression in `S2`.
    pub fn product(&self, other: &CapSet) -> Result<CapSet> {
        if !self.verified || !other.verified {
            return Err(Error::UnverifiedCap);
        }
        let dimension = self.dimension + other.dimension;
        if dimension > MAX_DIMENSION {
            return Err(Error::DimensionTooLarge(dimension));
        }
        let mut elements = Vec::with_capacity(self.len() * other.len());
        for x in &self.elements {
            for y in &other.elements {
                elements.push(x.concat(y)?);
            }
        }
        elements.sort();
        Ok(CapSet {
            dimension,
            elements,
            verified: true,
        })
    }

    /// Appends the coordinate 1 to every point (`S × {1}`).
    ///
    /// Three lifted points sum to `(x+y+z, 0)`, so freeness is preserved and
    /// the verified flag carries over.
    pub fn lift(&self) -> Result<CapSet> {
        let elements = self
            .elements
            .iter()
            .map(|e| e.extend(1))
            .collect::<Result<Vec<_>>>()?;
        Ok(CapSet {
            dimension: self.dimension + 1,
            elements,
            verified: self.verified,
        })
    }

    /// `k`-fold product of the set with itself.
    pub fn power(&self, k: usize) -> Result<CapSet> {
        if !self.verified {
            return Err(Error::UnverifiedCap);
        }
        let mut acc = CapSet::verified(0, [F3Vector::zero(0)])?;
        for _ in 0..k {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }
}

/// Maximum cap size in `F_3^n` for `n <= 3`, with one witness.
///
/// Branch and bound over points in encoding order. By translation invariance
/// the witness may be assumed to contain the origin, which is fixed as the
/// first element. Choosing a point blocks every point completing a line with
/// an already chosen one.
pub fn max_cap_exact(n: usize) -> Result<(usize, CapSet)> {
    if n > 3 {
        return Err(Error::ExactSearchTooLarge(n));
    }
    let size = pow3(n) as usize;
    // third[a * size + b] = -a - b
    let mut third = vec![0usize; size * size];
    for a in 0..size {
        for b in 0..size {
            let sum = code_add(a as u64, b as u64, n);
            third[a * size + b] = code_scale(sum, 2, n) as usize;
        }
    }

    struct Search<'a> {
        size: usize,
        third: &'a [usize],
        blocked: Vec<u16>,
        chosen: Vec<usize>,
        best: Vec<usize>,
    }

    impl Search<'_> {
        fn choose(&mut self, p: usize) {
            for i in 0..self.chosen.len() {
                let c = self.chosen[i];
                self.blocked[self.third[c * self.size + p]] += 1;
            }
            self.chosen.push(p);
        }

        fn unchoose(&mut self) {
            let p = self.chosen.pop().expect("non-empty");
            for &c in &self.chosen {
                self.blocked[self.third[c * self.size + p]] -= 1;
            }
        }

        fn run(&mut self, idx: usize) {
            let open = (idx..self.size).filter(|&p| self.blocked[p] == 0).count();
            if self.chosen.len() + open <= self.best.len() {
                return;
            }
            if idx == self.size {
                self.best = self.chosen.clone();
                return;
            }
            if self.blocked[idx] == 0 {
                self.choose(idx);
                self.run(idx + 1);
                self.unchoose();
            }
            self.run(idx + 1);
        }
    }

    let mut search = Search {
        size,
        third: &third,
        blocked: vec![0; size],
        chosen: Vec::new(),
        best: Vec::new(),
    };
    search.choose(0);
    search.run(1);
    let best = search.best;
    let cap = CapSet::verified(n, best.iter().map(|&c| F3Vector::from_code(c as u64, n)))?;
    Ok((cap.len(), cap))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(s: &str) -> F3Vector {
        s.parse().unwrap()
    }

    #[test]
    fn add_and_scale() {
        assert_eq!(v("12").add(&v("22")).unwrap(), v("01"));
        assert!(v("0121").scale(0).unwrap().is_zero());
        let x = v("2101");
        assert!(x.add(&x.scale(2).unwrap()).unwrap().is_zero());
        assert!(matches!(
            v("1").add(&v("12")),
            Err(Error::DimensionMismatch { .. })
        ));
        assert!(x.scale(3).is_err());
    }

    #[test]
    fn encoding_is_base3_msd_first() {
        assert_eq!(v("102").code(), 11);
        assert_eq!(F3Vector::from_code(11, 3), v("102"));
        assert_eq!(F3Vector::zero(0).code(), 0);
        assert!(F3Vector::new(vec![0, 3]).is_err());
    }

    #[test]
    fn code_arithmetic_matches_vectors() {
        for a in 0..27 {
            for b in 0..27 {
                let (x, y) = (F3Vector::from_code(a, 3), F3Vector::from_code(b, 3));
                assert_eq!(code_add(a, b, 3), x.add(&y).unwrap().code());
                assert_eq!(code_scale(a, 2, 3), x.scale(2).unwrap().code());
            }
        }
    }

    #[test]
    fn two_points_are_free_full_line_is_not() {
        let s = CapSet::new(1, [v("0"), v("1")]).unwrap();
        assert!(s.is_ap3_free());
        let line = CapSet::new(1, [v("0"), v("1"), v("2")]).unwrap();
        assert_eq!(line.find_ap3(), Some([v("0"), v("1"), v("2")]));
        assert!(matches!(line.verify(), Err(Error::NotACap(..))));
    }

    #[test]
    fn rejects_duplicates_and_mixed_dimensions() {
        assert!(matches!(
            CapSet::new(1, [v("0"), v("0")]),
            Err(Error::DuplicateElement(_))
        ));
        assert!(CapSet::new(2, [v("0")]).is_err());
    }

    #[test]
    fn exact_maxima() {
        assert_eq!(max_cap_exact(0).unwrap().0, 1);
        assert_eq!(max_cap_exact(1).unwrap().0, 2);
        assert_eq!(max_cap_exact(2).unwrap().0, 4);
        let (size, cap) = max_cap_exact(3).unwrap();
        assert_eq!(size, 9);
        assert!(cap.is_verified() && cap.is_ap3_free());
        assert!(cap.contains(&F3Vector::zero(3)));
        assert!(matches!(
            max_cap_exact(4),
            Err(Error::ExactSearchTooLarge(4))
        ));
    }

    #[test]
    fn product_and_lift() {
        let pair = CapSet::verified(1, [v("0"), v("1")]).unwrap();
        let sq = pair.product(&pair).unwrap();
        assert_eq!(sq.len(), 4);
        assert!(sq.is_ap3_free());
        let p4 = pair.power(4).unwrap();
        assert_eq!((p4.dimension(), p4.len()), (4, 16));
        assert!(p4.is_ap3_free());

        let point = CapSet::verified(2, [v("21")]).unwrap();
        let emb = pair.product(&point).unwrap();
        assert_eq!(emb.elements(), &[v("021"), v("121")]);

        let unverified = CapSet::new(1, [v("0")]).unwrap();
        assert_eq!(pair.product(&unverified), Err(Error::UnverifiedCap));

        let lifted = pair.lift().unwrap();
        assert_eq!(lifted.elements(), &[v("01"), v("11")]);
        assert!(lifted.is_verified());
        let empty = CapSet::empty(3).lift().unwrap();
        assert_eq!((empty.dimension(), empty.len()), (4, 0));
    }
}
