//! Univariate polynomials over a [`RingSpec`].

use std::fmt;

use crate::error::{Error, Result};
use crate::ring::{CommRing, RingElem, RingSpec};

/// A polynomial with coefficients stored from the constant term upwards,
/// trailing zeros stripped. The zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    ring: RingSpec,
    coeffs: Vec<RingElem>,
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if self.ring.is_zero(*c) {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let coeff = self.ring.format(*c);
            let show_coeff = k == 0 || *c != self.ring.one();
            match (k, show_coeff) {
                (0, _) => write!(f, "{coeff}")?,
                (1, true) => write!(f, "{coeff}t")?,
                (1, false) => write!(f, "t")?,
                (_, true) => write!(f, "{coeff}t^{k}")?,
                (_, false) => write!(f, "t^{k}")?,
            }
        }
        Ok(())
    }
}

impl Poly {
    pub fn new(ring: &RingSpec, mut coeffs: Vec<RingElem>) -> Self {
        while coeffs.last().is_some_and(|c| ring.is_zero(*c)) {
            coeffs.pop();
        }
        Self { ring: ring.clone(), coeffs }
    }

    pub fn from_ints(ring: &RingSpec, coeffs: &[i64]) -> Self {
        Self::new(ring, coeffs.iter().map(|c| ring.from_int(*c)).collect())
    }

    pub fn zero(ring: &RingSpec) -> Self {
        Self { ring: ring.clone(), coeffs: Vec::new() }
    }

    pub fn constant(ring: &RingSpec, c: RingElem) -> Self {
        Self::new(ring, vec![c])
    }

    /// `t - root`.
    pub fn linear(ring: &RingSpec, root: RingElem) -> Self {
        Self::new(ring, vec![ring.neg(root), ring.one()])
    }

    pub fn ring(&self) -> &RingSpec {
        &self.ring
    }

    pub fn coeffs(&self) -> &[RingElem] {
        &self.coeffs
    }

    /// Coefficient of `t^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> RingElem {
        self.coeffs.get(k).copied().unwrap_or(self.ring.zero())
    }

    /// Degree, with -1 for the zero polynomial.
    pub fn degree(&self) -> isize {
        self.coeffs.len() as isize - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last() == Some(&self.ring.one())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|k| self.ring.add(self.coeff(k), other.coeff(k))).collect();
        Self::new(&self.ring, coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|k| self.ring.sub(self.coeff(k), other.coeff(k))).collect();
        Self::new(&self.ring, coeffs)
    }

    pub fn neg(&self) -> Self {
        Self::new(&self.ring, self.coeffs.iter().map(|c| self.ring.neg(*c)).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(&self.ring);
        }
        let r = &self.ring;
        let mut out = vec![r.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if r.is_zero(*a) {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = r.add(out[i + j], r.mul(*a, *b));
            }
        }
        Self::new(r, out)
    }

    pub fn scale(&self, c: RingElem) -> Self {
        Self::new(&self.ring, self.coeffs.iter().map(|a| self.ring.mul(c, *a)).collect())
    }

    pub fn pow(&self, k: usize) -> Self {
        let mut acc = Self::constant(&self.ring, self.ring.one());
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Horner evaluation.
    pub fn eval(&self, x: RingElem) -> RingElem {
        let r = &self.ring;
        self.coeffs.iter().rev().fold(r.zero(), |acc, c| r.add(r.mul(acc, x), *c))
    }

    /// Applies a ring map to the coefficients.
    pub fn map(&self, target: &RingSpec, f: impl Fn(RingElem) -> RingElem) -> Self {
        Self::new(target, self.coeffs.iter().map(|c| f(*c)).collect())
    }

    /// The monic `q` with `q^n = self`, found by solving for the coefficients
    /// of `q` from the top down: the coefficient of `t^{nk-j}` in `q^n` is
    /// `n * q_{k-j}` plus terms in the higher coefficients already fixed.
    pub fn nth_root_monic(&self, n: usize) -> Result<Self> {
        let r = &self.ring;
        if n == 0 {
            return Err(Error::NotInvertible(0));
        }
        if !self.is_monic() {
            return Err(Error::NotMonic);
        }
        let n_inv = r.inv(r.from_int(n as i64)).ok_or(Error::NotInvertible(n))?;
        let deg = self.degree() as usize;
        if deg % n != 0 {
            return Err(Error::NoRoot { n, detail: format!("degree {deg} is not divisible by {n}") });
        }
        let k = deg / n;
        let mut q = vec![r.zero(); k + 1];
        q[k] = r.one();
        for j in 1..=k {
            let partial = Self::new(r, q.clone()).pow(n);
            let target = self.coeff(deg - j);
            let diff = r.sub(target, partial.coeff(deg - j));
            q[k - j] = r.mul(diff, n_inv);
        }
        let root = Self::new(r, q);
        if root.pow(n) != *self {
            return Err(Error::NoRoot { n, detail: format!("{self} is not an {n}-th power") });
        }
        Ok(root)
    }
}

/// The polynomial ring `R[t]` as a [`CommRing`], for matrices with polynomial
/// entries.
#[derive(Clone, Debug)]
pub struct PolyRing {
    base: RingSpec,
}

impl PolyRing {
    pub fn new(base: &RingSpec) -> Self {
        Self { base: base.clone() }
    }

    pub fn base(&self) -> &RingSpec {
        &self.base
    }
}

impl CommRing for PolyRing {
    type Elem = Poly;

    fn zero(&self) -> Poly {
        Poly::zero(&self.base)
    }
    fn one(&self) -> Poly {
        Poly::constant(&self.base, self.base.one())
    }
    fn add(&self, a: &Poly, b: &Poly) -> Poly {
        a.add(b)
    }
    fn sub(&self, a: &Poly, b: &Poly) -> Poly {
        a.sub(b)
    }
    fn neg(&self, a: &Poly) -> Poly {
        a.neg()
    }
    fn mul(&self, a: &Poly, b: &Poly) -> Poly {
        a.mul(b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_sentinel() {
        let r = RingSpec::prime_field(5).unwrap();
        assert_eq!(Poly::zero(&r).degree(), -1);
        assert_eq!(Poly::from_ints(&r, &[1, 0, 5]).degree(), 0);
    }

    #[test]
    fn nth_root_examples() {
        let r = RingSpec::prime_field(5).unwrap();
        let t_minus_1 = Poly::linear(&r, r.one());
        let p = t_minus_1.pow(4);
        assert_eq!(p.nth_root_monic(2).unwrap(), t_minus_1.pow(2));
        let p = Poly::from_ints(&r, &[1, 0, 2, 0, 1]);
        assert_eq!(p.nth_root_monic(2).unwrap(), Poly::from_ints(&r, &[1, 0, 1]));
        let p = Poly::from_ints(&r, &[1, 1, 1]);
        assert!(matches!(p.nth_root_monic(2), Err(Error::NoRoot { .. })));
    }

    #[test]
    fn nth_root_needs_invertible_n() {
        let r = RingSpec::prime_field(3).unwrap();
        let p = Poly::linear(&r, r.one()).pow(3);
        assert_eq!(p.nth_root_monic(3), Err(Error::NotInvertible(3)));
        assert_eq!(Poly::from_ints(&r, &[1, 2]).nth_root_monic(2), Err(Error::NotMonic));
    }

    #[test]
    fn display() {
        let r = RingSpec::prime_field(7).unwrap();
        assert_eq!(Poly::from_ints(&r, &[2, 4, 1]).to_string(), "t^2 + 4t + 2");
        assert_eq!(Poly::zero(&r).to_string(), "0");
    }
}
