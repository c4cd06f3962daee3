//! Finite commutative rings with identity in which 2 is a unit.
//!
//! A [`RingSpec`] describes the ring; elements are plain [`RingElem`] indices
//! into the canonical enumeration, and all arithmetic goes through the ring.
//! Element indices are mixed-radix encodings of the coordinate vector with
//! the first coordinate most significant, so index order is lexicographic
//! order on coordinates.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::matrix;

/// Largest ring we are willing to describe. Everything here is enumerated.
pub const MAX_RING_SIZE: u64 = 1 << 24;

/// Rings up to this size get precomputed operation tables.
const TABLE_LIMIT: u32 = 256;

/// An element of a [`RingSpec`], identified by its canonical index.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RingElem(pub(crate) u32);

impl RingElem {
    pub fn index(self) -> u32 {
        self.0
    }
}

/// Minimal commutative-ring interface shared by [`RingSpec`] and the
/// polynomial ring used by the homotopy checks.
pub trait CommRing {
    type Elem: Clone + PartialEq + fmt::Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RingKind {
    /// `Z/nZ`; `prime` records whether it was built as a prime field.
    Zmod {
        modulus: u32,
        prime: bool,
    },
    /// `base[x]/(f)` with `f` monic; `modulus` holds the coefficients of `f`
    /// from the constant term up to the leading 1.
    Quotient {
        base: RingSpec,
        modulus: Vec<RingElem>,
    },
    Product(Vec<RingSpec>),
}

struct Tables {
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
    inv: Vec<u32>,
}

struct Inner {
    kind: RingKind,
    size: u32,
    one: u32,
    tables: Option<Tables>,
}

/// Descriptor of a finite commutative ring. Cheap to clone.
#[derive(Clone)]
pub struct RingSpec(Arc<Inner>);

impl PartialEq for RingSpec {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.kind == other.0.kind
    }
}

impl Eq for RingSpec {}

impl fmt::Debug for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RingSpec({self})")
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0.kind {
            RingKind::Zmod { modulus, prime: true } => write!(f, "prime {modulus}"),
            RingKind::Zmod { modulus, prime: false } => write!(f, "zmod {modulus}"),
            RingKind::Quotient { base, modulus } => {
                write!(f, "quotient({base}; ")?;
                for (i, c) in modulus.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{}", base.format(*c))?;
                }
                write!(f, ")")
            }
            RingKind::Product(parts) => {
                write!(f, "product(")?;
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        write!(f, "; ")?;
                    }
                    write!(f, "{p}")?;
                }
                write!(f, ")")
            }
        }
    }
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= p as u64 {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn ext_inverse(a: u32, n: u32) -> Option<u32> {
    let (mut r0, mut r1) = (n as i64, a as i64);
    let (mut t0, mut t1) = (0i64, 1i64);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 != 1 {
        return None;
    }
    Some(t0.rem_euclid(n as i64) as u32)
}

impl RingSpec {
    /// `Z/nZ` for odd `n >= 3`.
    pub fn zmod(n: u32) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidRing(format!("modulus {n} is too small")));
        }
        if n % 2 == 0 {
            return Err(Error::EvenCharacteristic(format!("zmod {n}")));
        }
        Self::build(RingKind::Zmod { modulus: n, prime: false })
    }

    /// The prime field `F_p`, `p` an odd prime.
    pub fn prime_field(p: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::InvalidRing(format!("{p} is not prime")));
        }
        if p == 2 {
            return Err(Error::EvenCharacteristic("prime 2".into()));
        }
        Self::build(RingKind::Zmod { modulus: p, prime: true })
    }

    /// `base[x]/(f)`; `modulus` lists the coefficients of `f` from the
    /// constant term upwards and must end with 1.
    pub fn quotient(base: &RingSpec, modulus: Vec<RingElem>) -> Result<Self> {
        if modulus.len() < 2 {
            return Err(Error::InvalidRing("quotient modulus must have degree >= 1".into()));
        }
        if *modulus.last().unwrap() != base.one() {
            return Err(Error::InvalidRing("quotient modulus must be monic".into()));
        }
        if modulus.iter().any(|c| c.0 >= base.size()) {
            return Err(Error::InvalidRing("modulus coefficient outside base ring".into()));
        }
        Self::build(RingKind::Quotient { base: base.clone(), modulus })
    }

    pub fn product(parts: Vec<RingSpec>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidRing("empty product".into()));
        }
        Self::build(RingKind::Product(parts))
    }

    fn build(kind: RingKind) -> Result<Self> {
        let size: u64 = match &kind {
            RingKind::Zmod { modulus, .. } => *modulus as u64,
            RingKind::Quotient { base, modulus } => {
                let d = (modulus.len() - 1) as u32;
                (base.size() as u64).checked_pow(d).unwrap_or(u64::MAX)
            }
            RingKind::Product(parts) => {
                parts.iter().try_fold(1u64, |acc, p| acc.checked_mul(p.size() as u64)).unwrap_or(u64::MAX)
            }
        };
        if size > MAX_RING_SIZE {
            return Err(Error::RingTooLarge(size));
        }
        let size = size as u32;
        let one = match &kind {
            RingKind::Zmod { .. } => 1,
            RingKind::Quotient { base, modulus } => {
                let d = modulus.len() as u32 - 1;
                base.one().0 * base.size().pow(d - 1)
            }
            RingKind::Product(parts) => parts.iter().fold(0u32, |acc, p| acc * p.size() + p.one().0),
        };
        let mut inner = Inner { kind, size, one, tables: None };
        if size <= TABLE_LIMIT {
            inner.tables = Some(Tables::build(&inner));
        }
        let ring = RingSpec(Arc::new(inner));
        let two = ring.from_int(2);
        if !ring.is_unit(two) {
            return Err(Error::EvenCharacteristic(ring.to_string()));
        }
        Ok(ring)
    }

    pub fn kind(&self) -> &RingKind {
        &self.0.kind
    }

    /// Number of elements.
    pub fn size(&self) -> u32 {
        self.0.size
    }

    pub fn is_field(&self) -> bool {
        match &self.0.kind {
            RingKind::Zmod { modulus, .. } => is_prime(*modulus),
            RingKind::Product(parts) => parts.len() == 1 && parts[0].is_field(),
            RingKind::Quotient { .. } => self.elements().skip(1).all(|e| self.is_unit(e)),
        }
    }

    /// Builds an element from its canonical index.
    pub fn elem(&self, index: u32) -> Result<RingElem> {
        if index < self.size() {
            Ok(RingElem(index))
        } else {
            Err(Error::Parse(format!("index {index} outside ring of size {}", self.size())))
        }
    }

    /// All elements in canonical (lexicographic) order.
    pub fn elements(&self) -> impl Iterator<Item = RingElem> + '_ {
        (0..self.size()).map(RingElem)
    }

    /// The invertible elements in canonical order.
    pub fn units(&self) -> Vec<RingElem> {
        self.elements().filter(|&e| self.is_unit(e)).collect()
    }

    pub fn zero(&self) -> RingElem {
        RingElem(0)
    }

    pub fn one(&self) -> RingElem {
        RingElem(self.0.one)
    }

    pub fn is_zero(&self, a: RingElem) -> bool {
        a.0 == 0
    }

    pub fn from_int(&self, v: i64) -> RingElem {
        match &self.0.kind {
            RingKind::Zmod { modulus, .. } => RingElem(v.rem_euclid(*modulus as i64) as u32),
            RingKind::Quotient { base, modulus } => {
                let d = modulus.len() - 1;
                let mut coeffs = vec![base.zero(); d];
                coeffs[0] = base.from_int(v);
                self.encode_poly(base, &coeffs)
            }
            RingKind::Product(parts) => {
                let comps: Vec<RingElem> = parts.iter().map(|p| p.from_int(v)).collect();
                self.encode_product(parts, &comps)
            }
        }
    }

    pub fn add(&self, a: RingElem, b: RingElem) -> RingElem {
        match &self.0.tables {
            Some(t) => RingElem(t.add[(a.0 * self.size() + b.0) as usize]),
            None => s_add(&self.0, a, b),
        }
    }

    pub fn neg(&self, a: RingElem) -> RingElem {
        match &self.0.tables {
            Some(t) => RingElem(t.neg[a.0 as usize]),
            None => s_neg(&self.0, a),
        }
    }

    pub fn sub(&self, a: RingElem, b: RingElem) -> RingElem {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: RingElem, b: RingElem) -> RingElem {
        match &self.0.tables {
            Some(t) => RingElem(t.mul[(a.0 * self.size() + b.0) as usize]),
            None => s_mul(&self.0, a, b),
        }
    }

    pub fn pow(&self, a: RingElem, mut k: u64) -> RingElem {
        let mut base = a;
        let mut acc = self.one();
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    /// Multiplicative inverse, `None` for non-units.
    pub fn inv(&self, a: RingElem) -> Option<RingElem> {
        match &self.0.tables {
            Some(t) => {
                let v = t.inv[a.0 as usize];
                (v != u32::MAX).then_some(RingElem(v))
            }
            None => s_inv(&self.0, a),
        }
    }

    pub fn is_unit(&self, a: RingElem) -> bool {
        self.inv(a).is_some()
    }

    pub fn sum<I: IntoIterator<Item = RingElem>>(&self, items: I) -> RingElem {
        items.into_iter().fold(self.zero(), |acc, x| self.add(acc, x))
    }

    /// Flattened coordinate vector (first coordinate most significant).
    pub fn coords(&self, a: RingElem) -> Vec<u32> {
        match &self.0.kind {
            RingKind::Zmod { .. } => vec![a.0],
            RingKind::Quotient { base, .. } => self.decode_poly(base, a).into_iter().flat_map(|c| base.coords(c)).collect(),
            RingKind::Product(parts) => {
                self.decode_product(parts, a).into_iter().zip(parts).flat_map(|(c, p)| p.coords(c)).collect()
            }
        }
    }

    /// Coefficients `c_0..c_{d-1}` of a quotient-ring element over its base.
    pub fn poly_coeffs(&self, a: RingElem) -> Option<Vec<RingElem>> {
        match &self.0.kind {
            RingKind::Quotient { base, .. } => Some(self.decode_poly(base, a)),
            _ => None,
        }
    }

    /// Inverse of [`RingSpec::poly_coeffs`].
    pub fn from_poly_coeffs(&self, coeffs: &[RingElem]) -> Result<RingElem> {
        match &self.0.kind {
            RingKind::Quotient { base, modulus } => {
                let d = modulus.len() - 1;
                if coeffs.len() > d {
                    return Err(Error::DimensionMismatch(format!("{} coefficients for a degree-{d} quotient", coeffs.len())));
                }
                if let Some(c) = coeffs.iter().find(|c| c.0 >= base.size()) {
                    return Err(Error::InvalidRing(format!("coefficient index {} outside {base}", c.0)));
                }
                let mut full = coeffs.to_vec();
                full.resize(d, base.zero());
                Ok(self.encode_poly(base, &full))
            }
            _ => Err(Error::InvalidRing(format!("{self} is not a quotient ring"))),
        }
    }

    /// Components of a product-ring element.
    pub fn components(&self, a: RingElem) -> Option<Vec<RingElem>> {
        match &self.0.kind {
            RingKind::Product(parts) => Some(self.decode_product(parts, a)),
            _ => None,
        }
    }

    pub fn from_components(&self, comps: &[RingElem]) -> Result<RingElem> {
        match &self.0.kind {
            RingKind::Product(parts) if parts.len() == comps.len() => Ok(self.encode_product(parts, comps)),
            _ => Err(Error::InvalidRing(format!("{self} has no {} components", comps.len()))),
        }
    }

    /// Human-readable form, accepted back by [`RingSpec::parse_elem`].
    pub fn format(&self, a: RingElem) -> String {
        match &self.0.kind {
            RingKind::Zmod { .. } => a.0.to_string(),
            RingKind::Quotient { base, .. } => {
                let parts: Vec<String> = self.decode_poly(base, a).into_iter().map(|c| base.format(c)).collect();
                format!("[{}]", parts.join(","))
            }
            RingKind::Product(parts) => {
                let items: Vec<String> = self.decode_product(parts, a).into_iter().zip(parts).map(|(c, p)| p.format(c)).collect();
                format!("({})", items.join(";"))
            }
        }
    }

    /// Parses an element: a (signed) integer, a bracketed coefficient list
    /// `[c0,c1,...]` for quotient rings, or `(a;b;...)` for products.
    pub fn parse_elem(&self, text: &str) -> Result<RingElem> {
        let text = text.trim();
        if let Ok(v) = text.parse::<i64>() {
            return Ok(self.from_int(v));
        }
        match &self.0.kind {
            RingKind::Quotient { base, .. } if text.starts_with('[') && text.ends_with(']') => {
                let inner = &text[1..text.len() - 1];
                let coeffs = split_top_level(inner, ',').into_iter().map(|s| base.parse_elem(s)).collect::<Result<Vec<_>>>()?;
                self.from_poly_coeffs(&coeffs)
            }
            RingKind::Product(parts) if text.starts_with('(') && text.ends_with(')') => {
                let inner = &text[1..text.len() - 1];
                let items = split_top_level(inner, ';');
                if items.len() != parts.len() {
                    return Err(Error::Parse(format!("expected {} components in {text}", parts.len())));
                }
                let comps = items.into_iter().zip(parts).map(|(s, p)| p.parse_elem(s)).collect::<Result<Vec<_>>>()?;
                Ok(self.encode_product(parts, &comps))
            }
            _ => Err(Error::Parse(format!("cannot parse {text:?} as an element of {self}"))),
        }
    }

    fn decode_poly(&self, base: &RingSpec, a: RingElem) -> Vec<RingElem> {
        decode_poly(&self.0.kind, base, a)
    }

    fn encode_poly(&self, base: &RingSpec, coeffs: &[RingElem]) -> RingElem {
        encode_poly(base, coeffs)
    }

    fn decode_product(&self, parts: &[RingSpec], a: RingElem) -> Vec<RingElem> {
        decode_product(parts, a)
    }

    fn encode_product(&self, parts: &[RingSpec], comps: &[RingElem]) -> RingElem {
        encode_product(parts, comps)
    }
}

/// Splits on `sep` outside of any bracket nesting.
pub fn split_top_level(text: &str, sep: char) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, ch) in text.char_indices() {
        match ch {
            '[' | '(' | '{' => depth += 1,
            ']' | ')' | '}' => depth -= 1,
            c if c == sep && depth == 0 => {
                out.push(text[start..i].trim());
                start = i + ch.len_utf8();
            }
            _ => {}
        }
    }
    let last = text[start..].trim();
    if !last.is_empty() || !out.is_empty() {
        out.push(last);
    }
    out
}

fn decode_poly(kind: &RingKind, base: &RingSpec, a: RingElem) -> Vec<RingElem> {
    let d = match kind {
        RingKind::Quotient { modulus, .. } => modulus.len() - 1,
        _ => unreachable!(),
    };
    let q = base.size();
    let mut idx = a.0;
    let mut out = vec![RingElem(0); d];
    for slot in out.iter_mut().rev() {
        *slot = RingElem(idx % q);
        idx /= q;
    }
    out
}

fn encode_poly(base: &RingSpec, coeffs: &[RingElem]) -> RingElem {
    let q = base.size();
    RingElem(coeffs.iter().fold(0u32, |acc, c| acc * q + c.0))
}

fn decode_product(parts: &[RingSpec], a: RingElem) -> Vec<RingElem> {
    let mut idx = a.0;
    let mut out = vec![RingElem(0); parts.len()];
    for (slot, p) in out.iter_mut().zip(parts).rev() {
        *slot = RingElem(idx % p.size());
        idx /= p.size();
    }
    out
}

fn encode_product(parts: &[RingSpec], comps: &[RingElem]) -> RingElem {
    RingElem(parts.iter().zip(comps).fold(0u32, |acc, (p, c)| acc * p.size() + c.0))
}

// Structural arithmetic, used directly for large rings and to fill tables.

fn s_add(inner: &Inner, a: RingElem, b: RingElem) -> RingElem {
    match &inner.kind {
        RingKind::Zmod { modulus, .. } => RingElem(((a.0 as u64 + b.0 as u64) % *modulus as u64) as u32),
        RingKind::Quotient { base, .. } => {
            let x = decode_poly(&inner.kind, base, a);
            let y = decode_poly(&inner.kind, base, b);
            let z: Vec<RingElem> = x.iter().zip(&y).map(|(p, q)| base.add(*p, *q)).collect();
            encode_poly(base, &z)
        }
        RingKind::Product(parts) => {
            let x = decode_product(parts, a);
            let y = decode_product(parts, b);
            let z: Vec<RingElem> = parts.iter().zip(x.iter().zip(&y)).map(|(p, (u, v))| p.add(*u, *v)).collect();
            encode_product(parts, &z)
        }
    }
}

fn s_neg(inner: &Inner, a: RingElem) -> RingElem {
    match &inner.kind {
        RingKind::Zmod { modulus, .. } => RingElem((*modulus - a.0) % *modulus),
        RingKind::Quotient { base, .. } => {
            let x = decode_poly(&inner.kind, base, a);
            let z: Vec<RingElem> = x.iter().map(|p| base.neg(*p)).collect();
            encode_poly(base, &z)
        }
        RingKind::Product(parts) => {
            let x = decode_product(parts, a);
            let z: Vec<RingElem> = parts.iter().zip(&x).map(|(p, u)| p.neg(*u)).collect();
            encode_product(parts, &z)
        }
    }
}

fn s_mul(inner: &Inner, a: RingElem, b: RingElem) -> RingElem {
    match &inner.kind {
        RingKind::Zmod { modulus, .. } => RingElem(((a.0 as u64 * b.0 as u64) % *modulus as u64) as u32),
        RingKind::Quotient { base, modulus } => {
            let d = modulus.len() - 1;
            let x = decode_poly(&inner.kind, base, a);
            let y = decode_poly(&inner.kind, base, b);
            let mut prod = vec![base.zero(); 2 * d - 1];
            for (i, xi) in x.iter().enumerate() {
                if base.is_zero(*xi) {
                    continue;
                }
                for (j, yj) in y.iter().enumerate() {
                    prod[i + j] = base.add(prod[i + j], base.mul(*xi, *yj));
                }
            }
            for k in (d..2 * d - 1).rev() {
                let c = prod[k];
                if base.is_zero(c) {
                    continue;
                }
                for i in 0..d {
                    prod[k - d + i] = base.sub(prod[k - d + i], base.mul(c, modulus[i]));
                }
                prod[k] = base.zero();
            }
            encode_poly(base, &prod[..d])
        }
        RingKind::Product(parts) => {
            let x = decode_product(parts, a);
            let y = decode_product(parts, b);
            let z: Vec<RingElem> = parts.iter().zip(x.iter().zip(&y)).map(|(p, (u, v))| p.mul(*u, *v)).collect();
            encode_product(parts, &z)
        }
    }
}

fn s_inv(inner: &Inner, a: RingElem) -> Option<RingElem> {
    match &inner.kind {
        RingKind::Zmod { modulus, .. } => ext_inverse(a.0, *modulus).map(RingElem),
        RingKind::Quotient { base, modulus } => {
            // Cayley-Hamilton on multiplication-by-a over the base:
            // a^d + c_{d-1} a^{d-1} + ... + c_0 = 0, so a is a unit iff c_0 is.
            let d = modulus.len() - 1;
            let mut entries = vec![base.zero(); d * d];
            let mut col = a;
            let x = if d > 1 {
                let mut coeffs = vec![base.zero(); d];
                coeffs[1] = base.one();
                encode_poly(base, &coeffs)
            } else {
                RingElem(0)
            };
            for j in 0..d {
                let cs = decode_poly(&inner.kind, base, col);
                for i in 0..d {
                    entries[i * d + j] = cs[i];
                }
                if j + 1 < d {
                    col = s_mul(inner, col, x);
                }
            }
            let cp = matrix::char_poly_coeffs(base, d, &entries);
            let c0inv = base.inv(cp[0])?;
            // a^{-1} = -c_0^{-1} (a^{d-1} + c_{d-1} a^{d-2} + ... + c_1), by Horner.
            let mut acc = RingElem(0);
            for k in (1..=d).rev() {
                acc = s_add(inner, s_mul(inner, acc, a), embed_const(inner, base, cp[k]));
            }
            let scale = embed_const(inner, base, base.neg(c0inv));
            Some(s_mul(inner, acc, scale))
        }
        RingKind::Product(parts) => {
            let x = decode_product(parts, a);
            let z = parts.iter().zip(&x).map(|(p, u)| p.inv(*u)).collect::<Option<Vec<_>>>()?;
            Some(encode_product(parts, &z))
        }
    }
}

fn embed_const(inner: &Inner, base: &RingSpec, c: RingElem) -> RingElem {
    let d = match &inner.kind {
        RingKind::Quotient { modulus, .. } => modulus.len() - 1,
        _ => unreachable!(),
    };
    let mut coeffs = vec![base.zero(); d];
    coeffs[0] = c;
    encode_poly(base, &coeffs)
}

impl Tables {
    fn build(inner: &Inner) -> Self {
        let n = inner.size;
        let mut add = Vec::with_capacity((n * n) as usize);
        let mut mul = Vec::with_capacity((n * n) as usize);
        for a in 0..n {
            for b in 0..n {
                add.push(s_add(inner, RingElem(a), RingElem(b)).0);
                mul.push(s_mul(inner, RingElem(a), RingElem(b)).0);
            }
        }
        let neg = (0..n).map(|a| s_neg(inner, RingElem(a)).0).collect();
        let one = inner.one;
        let mut inv = vec![u32::MAX; n as usize];
        for a in 0..n {
            if inv[a as usize] != u32::MAX {
                continue;
            }
            for b in 0..n {
                if mul[(a * n + b) as usize] == one {
                    inv[a as usize] = b;
                    inv[b as usize] = a;
                    break;
                }
            }
        }
        Tables { add, mul, neg, inv }
    }
}

impl CommRing for RingSpec {
    type Elem = RingElem;

    fn zero(&self) -> RingElem {
        RingSpec::zero(self)
    }
    fn one(&self) -> RingElem {
        RingSpec::one(self)
    }
    fn add(&self, a: &RingElem, b: &RingElem) -> RingElem {
        RingSpec::add(self, *a, *b)
    }
    fn sub(&self, a: &RingElem, b: &RingElem) -> RingElem {
        RingSpec::sub(self, *a, *b)
    }
    fn neg(&self, a: &RingElem) -> RingElem {
        RingSpec::neg(self, *a)
    }
    fn mul(&self, a: &RingElem, b: &RingElem) -> RingElem {
        RingSpec::mul(self, *a, *b)
    }
}
