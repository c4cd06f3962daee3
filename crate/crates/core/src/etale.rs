//! Quadratic etale extensions `C = R[x]/(x^2 - s)` with `s` a unit, and the
//! standard involution `x + y*sqrt(s) -> x - y*sqrt(s)`.

use crate::error::{Error, Result};
use crate::ring::{RingElem, RingSpec};

/// Elements of `C` are elements of its quotient ring, with coordinates
/// `(x, y)` meaning `x + y*sqrt(s)`.
pub type EtaleElem = RingElem;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticEtale {
    base: RingSpec,
    s: RingElem,
    ring: RingSpec,
}

impl QuadraticEtale {
    /// `R[sqrt(s)]`; `s` must be a unit of `base` (2 is a unit already).
    pub fn new(base: &RingSpec, s: RingElem) -> Result<Self> {
        if !base.is_unit(s) {
            return Err(Error::NotAUnit(format!("s = {} in {base}", base.format(s))));
        }
        let ring = RingSpec::quotient(base, vec![base.neg(s), base.zero(), base.one()])?;
        Ok(Self { base: base.clone(), s, ring })
    }

    /// The split algebra `R[x]/(x^2 - 1)`, isomorphic to `R x R`.
    pub fn split(base: &RingSpec) -> Result<Self> {
        Self::new(base, base.one())
    }

    pub fn base(&self) -> &RingSpec {
        &self.base
    }

    pub fn ring(&self) -> &RingSpec {
        &self.ring
    }

    pub fn s(&self) -> RingElem {
        self.s
    }

    pub fn make(&self, x: RingElem, y: RingElem) -> EtaleElem {
        self.ring.from_poly_coeffs(&[x, y]).expect("two coefficients")
    }

    /// `(x, y)` with `c = x + y*sqrt(s)`.
    pub fn parts(&self, c: EtaleElem) -> (RingElem, RingElem) {
        let v = self.ring.poly_coeffs(c).expect("quotient ring");
        (v[0], v[1])
    }

    pub fn embed(&self, r: RingElem) -> EtaleElem {
        self.make(r, self.base.zero())
    }

    pub fn sqrt_s(&self) -> EtaleElem {
        self.make(self.base.zero(), self.base.one())
    }

    /// Whether `c` lies in the base ring (`y = 0`).
    pub fn is_base(&self, c: EtaleElem) -> bool {
        self.base.is_zero(self.parts(c).1)
    }

    pub fn sigma(&self, c: EtaleElem) -> EtaleElem {
        let (x, y) = self.parts(c);
        self.make(x, self.base.neg(y))
    }

    /// `c * sigma(c) = x^2 - s y^2`, an element of the base.
    pub fn norm(&self, c: EtaleElem) -> RingElem {
        let b = &self.base;
        let (x, y) = self.parts(c);
        b.sub(b.mul(x, x), b.mul(self.s, b.mul(y, y)))
    }

    /// `c * sigma(c)^{-1}` for a unit `c`.
    pub fn one_minus_sigma(&self, c: EtaleElem) -> Option<EtaleElem> {
        let inv = self.ring.inv(self.sigma(c))?;
        Some(self.ring.mul(c, inv))
    }

    /// `U(C) = {c : c * sigma(c) = 1}` in canonical order.
    pub fn unitary_scalars(&self) -> Vec<EtaleElem> {
        let one = self.base.one();
        self.ring.elements().filter(|&c| self.norm(c) == one).collect()
    }

    /// For `s = 1`, the image of `c` under `C -> R x R`, `x + y*sqrt(s) -> (x+y, x-y)`.
    pub fn split_pair(&self, c: EtaleElem) -> Option<(RingElem, RingElem)> {
        if self.s != self.base.one() {
            return None;
        }
        let b = &self.base;
        let (x, y) = self.parts(c);
        Some((b.add(x, y), b.sub(x, y)))
    }

    /// Constructive Hilbert 90 for `C/R`: a unit `c` with
    /// `c * sigma(c)^{-1} = lambda`.
    ///
    /// Tries `c = 1 + lambda` (valid whenever it is a unit, since
    /// `lambda * sigma(1 + lambda) = 1 + lambda`), then `sqrt(s)` for
    /// `lambda = -1`, then scans the units of `C` in canonical order.
    pub fn hilbert90_scalar(&self, lambda: EtaleElem) -> Result<EtaleElem> {
        let c = &self.ring;
        if self.norm(lambda) != self.base.one() {
            return Err(Error::Precondition(format!("{} is not in U(C)", c.format(lambda))));
        }
        let candidate = c.add(c.one(), lambda);
        if c.is_unit(candidate) {
            return Ok(candidate);
        }
        if lambda == c.neg(c.one()) {
            return Ok(self.sqrt_s());
        }
        c.elements()
            .find(|&u| self.one_minus_sigma(u) == Some(lambda))
            .ok_or_else(|| Error::Exhausted(format!("no unit c with c/sigma(c) = {}", c.format(lambda))))
    }
}
