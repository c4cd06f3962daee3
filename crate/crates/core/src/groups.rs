//! Unitary and special groups, reduced-norm images, finite abelian quotients
//! and the functor values `T*/Nrd(A_T*)(T*)^d` and
//! `U(C_T)/Nrd(U(A_T))U(C_T)^d`.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;

use crate::algebra::{Algebra, AlgebraElem};
use crate::error::{Error, Result};
use crate::etale::EtaleElem;
use crate::involution::{AlgebraWithInvolution, InvolutionKind};
use crate::ring::{RingElem, RingSpec};
use crate::transfers::FiniteFreeExtension;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SpecialKind {
    /// Reduced norm one.
    SL,
    /// Unitary with reduced norm one (unitary involutions).
    SU,
    /// Unitary with reduced norm one (orthogonal involutions).
    SO,
}

impl fmt::Display for SpecialKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SpecialKind::SL => "SL",
            SpecialKind::SU => "SU",
            SpecialKind::SO => "SO",
        })
    }
}

/// `{x : x sigma(x) = 1}` in lexicographic order.
pub fn enumerate_unitary(a: &AlgebraWithInvolution) -> Vec<AlgebraElem> {
    a.algebra().elements().filter(|x| a.is_unitary_elem(x)).collect()
}

pub fn enumerate_special(a: &AlgebraWithInvolution, which: SpecialKind) -> Result<Vec<AlgebraElem>> {
    let alg = a.algebra();
    let one = alg.center().ring().one();
    let has_norm_one = |x: &AlgebraElem| alg.nrd(x).map(|v| v == one);
    let mut out = Vec::new();
    match which {
        SpecialKind::SL => {
            for x in alg.elements() {
                if has_norm_one(&x)? {
                    out.push(x);
                }
            }
        }
        SpecialKind::SU | SpecialKind::SO => {
            let wanted = if which == SpecialKind::SU { InvolutionKind::Unitary } else { InvolutionKind::Orthogonal };
            if a.kind() != wanted {
                return Err(Error::Precondition(format!("{which} needs a {wanted} involution, got {}", a.kind())));
            }
            for x in alg.elements() {
                if a.is_unitary_elem(&x) && has_norm_one(&x)? {
                    out.push(x);
                }
            }
        }
    }
    Ok(out)
}

/// `{nrd(x) : x in s}`, sorted; `s` must be multiplicatively closed, which
/// is re-checked on the image.
pub fn nrd_image(algebra: &Algebra, s: &[AlgebraElem]) -> Result<Vec<EtaleElem>> {
    let mut image = BTreeSet::new();
    for x in s {
        image.insert(algebra.nrd(x)?);
    }
    let image: Vec<EtaleElem> = image.into_iter().collect();
    check_subgroup(algebra.center().ring(), &image)?;
    Ok(image)
}

/// The subgroup of the (commutative) unit group generated by `set`, grown
/// one cyclic factor at a time so the cost is linear in its order.
fn generated(ring: &RingSpec, set: impl IntoIterator<Item = RingElem>) -> Result<HashSet<RingElem>> {
    let mut out: HashSet<RingElem> = HashSet::from([ring.one()]);
    for g in set {
        if out.contains(&g) {
            continue;
        }
        if !ring.is_unit(g) {
            return Err(Error::NotASubgroup(format!("{} is not a unit", ring.format(g))));
        }
        let layer: Vec<RingElem> = out.iter().copied().collect();
        let mut power = g;
        while !out.contains(&power) {
            out.extend(layer.iter().map(|x| ring.mul(*x, power)));
            power = ring.mul(power, g);
        }
    }
    Ok(out)
}

fn check_subgroup(ring: &RingSpec, set: &[RingElem]) -> Result<()> {
    let members: HashSet<RingElem> = set.iter().copied().collect();
    if !members.contains(&ring.one()) {
        return Err(Error::NotASubgroup("identity missing".into()));
    }
    let closure = generated(ring, set.iter().copied())?;
    if closure.len() != members.len() {
        let outside = closure.iter().filter(|x| !members.contains(x)).min().expect("closure is larger");
        return Err(Error::NotASubgroup(format!("{} is a product of members but not in the set", ring.format(*outside))));
    }
    Ok(())
}

/// Reduced norms of all units, stopping early once every center unit is hit.
pub fn nrd_of_units(algebra: &Algebra) -> Result<Vec<EtaleElem>> {
    let c = algebra.center().ring();
    let full = c.units().len();
    let mut image = BTreeSet::new();
    for x in algebra.elements() {
        if algebra.is_unit(&x) {
            image.insert(algebra.nrd(&x)?);
            if image.len() == full {
                break;
            }
        }
    }
    Ok(image.into_iter().collect())
}

/// Reduced norms of all unitary elements, stopping early once every element
/// of `U(C)` is hit.
pub fn nrd_of_unitary(a: &AlgebraWithInvolution) -> Result<Vec<EtaleElem>> {
    let alg = a.algebra();
    let full = match alg.center().etale() {
        Some(e) => e.unitary_scalars().len(),
        None => usize::MAX,
    };
    let mut image = BTreeSet::new();
    for x in alg.elements() {
        if a.is_unitary_elem(&x) {
            image.insert(alg.nrd(&x)?);
            if image.len() == full {
                break;
            }
        }
    }
    Ok(image.into_iter().collect())
}

/// A quotient `G/H` of finite subgroups of the unit group of a ring, with
/// cosets named by their smallest element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteAbelianPresentation {
    ring: RingSpec,
    group: Vec<RingElem>,
    subgroup: Vec<RingElem>,
    representatives: Vec<RingElem>,
    coset_of: HashMap<RingElem, usize>,
    elementary_divisors: Vec<u64>,
}

impl FiniteAbelianPresentation {
    /// `group / subgroup`; both must be subgroups of the units of `ring`
    /// with `subgroup` contained in `group`.
    pub fn quotient(ring: &RingSpec, group: &[RingElem], subgroup: &[RingElem]) -> Result<Self> {
        let group: Vec<RingElem> = group.iter().copied().collect::<BTreeSet<_>>().into_iter().collect();
        let subgroup: Vec<RingElem> = subgroup.iter().copied().collect::<BTreeSet<_>>().into_iter().collect();
        check_subgroup(ring, &group)?;
        check_subgroup(ring, &subgroup)?;
        let members: BTreeSet<RingElem> = group.iter().copied().collect();
        if let Some(x) = subgroup.iter().find(|x| !members.contains(x)) {
            return Err(Error::NotASubgroup(format!("{} is not in the ambient group", ring.format(*x))));
        }
        let mut coset_of = HashMap::new();
        let mut representatives = Vec::new();
        for &g in &group {
            if coset_of.contains_key(&g) {
                continue;
            }
            let idx = representatives.len();
            representatives.push(g);
            for &h in &subgroup {
                coset_of.insert(ring.mul(g, h), idx);
            }
        }
        let mut q = Self { ring: ring.clone(), group, subgroup, representatives, coset_of, elementary_divisors: Vec::new() };
        q.elementary_divisors = q.compute_elementary_divisors();
        Ok(q)
    }

    pub fn ring(&self) -> &RingSpec {
        &self.ring
    }

    pub fn group(&self) -> &[RingElem] {
        &self.group
    }

    pub fn subgroup(&self) -> &[RingElem] {
        &self.subgroup
    }

    /// Smallest element of each coset, in increasing order.
    pub fn representatives(&self) -> &[RingElem] {
        &self.representatives
    }

    pub fn order(&self) -> usize {
        self.representatives.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    /// Index of the coset containing `x`, if `x` is in the ambient group.
    pub fn coset_index(&self, x: RingElem) -> Option<usize> {
        self.coset_of.get(&x).copied()
    }

    /// Representative of the coset containing `x`.
    pub fn class_of(&self, x: RingElem) -> Option<RingElem> {
        self.coset_index(x).map(|i| self.representatives[i])
    }

    /// Members of the coset with the given index.
    pub fn coset(&self, index: usize) -> Vec<RingElem> {
        let g = self.representatives[index];
        let mut c: Vec<RingElem> = self.subgroup.iter().map(|h| self.ring.mul(g, *h)).collect();
        c.sort();
        c
    }

    /// Prime-power orders of the cyclic factors, sorted by prime then power.
    pub fn elementary_divisors(&self) -> &[u64] {
        &self.elementary_divisors
    }

    /// `d_1 | d_2 | ... | d_k` with product equal to the order.
    pub fn invariant_factors(&self) -> Vec<u64> {
        let mut by_prime: Vec<(u64, Vec<u64>)> = Vec::new();
        for &q in &self.elementary_divisors {
            let p = smallest_prime_factor(q);
            match by_prime.iter_mut().find(|(pp, _)| *pp == p) {
                Some((_, v)) => v.push(q),
                None => by_prime.push((p, vec![q])),
            }
        }
        let len = by_prime.iter().map(|(_, v)| v.len()).max().unwrap_or(0);
        let mut factors = vec![1u64; len];
        for (_, mut powers) in by_prime {
            powers.sort_unstable_by(|a, b| b.cmp(a));
            for (i, q) in powers.into_iter().enumerate() {
                factors[i] *= q;
            }
        }
        factors.reverse();
        factors
    }

    fn class_pow(&self, idx: usize, k: u64) -> usize {
        let x = self.ring.pow(self.representatives[idx], k);
        self.coset_of[&x]
    }

    /// From the counts `|{x : x^{p^j} = 1}|` of the quotient.
    fn compute_elementary_divisors(&self) -> Vec<u64> {
        let order = self.order() as u64;
        let identity = self.coset_of[&self.ring.one()];
        let mut out = Vec::new();
        for p in prime_factors(order) {
            // at_least[j] = number of cyclic factors of order >= p^j
            let mut at_least = Vec::new();
            let mut prev = 1u64;
            let mut pj = p;
            loop {
                let count = (0..self.order()).filter(|&i| self.class_pow(i, pj) == identity).count() as u64;
                let mut ratio = count / prev;
                let mut r = 0;
                while ratio > 1 {
                    ratio /= p;
                    r += 1;
                }
                if r == 0 {
                    break;
                }
                at_least.push(r);
                prev = count;
                pj *= p;
            }
            for j in 0..at_least.len() {
                let next = at_least.get(j + 1).copied().unwrap_or(0);
                for _ in 0..at_least[j] - next {
                    out.push(p.pow(j as u32 + 1));
                }
            }
        }
        out
    }

    pub fn describe(&self) -> String {
        if self.is_trivial() {
            return "trivial".into();
        }
        let parts: Vec<String> = self.invariant_factors().iter().map(|d| format!("Z/{d}")).collect();
        parts.join(" x ")
    }
}

fn smallest_prime_factor(n: u64) -> u64 {
    (2..=n).find(|p| n % p == 0).unwrap_or(n)
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while n > 1 {
        if n % p == 0 {
            out.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    out
}

/// `{x * y^d : x in h, y in g}` for subgroups `h`, `g`: the subgroup
/// generated by `h` and the `d`-th powers.
fn times_powers(ring: &RingSpec, h: &[RingElem], g: &[RingElem], d: u32) -> Vec<RingElem> {
    let powers = g.iter().map(|y| ring.pow(*y, d as u64));
    let out = generated(ring, h.iter().copied().chain(powers)).expect("units generate units");
    let mut out: Vec<RingElem> = out.into_iter().collect();
    out.sort();
    out
}

/// `C_T* / Nrd(A_T*) (C_T*)^d` where `C_T` is the center of `A_T`
/// (equal to `T` when the center of `A` is the base).
pub fn functor_linear(a: &Algebra, ext: &FiniteFreeExtension, d: u32) -> Result<FiniteAbelianPresentation> {
    let at = ext.extend_algebra(a)?;
    functor_linear_over(&at, d)
}

/// The linear functor value for an algebra already over `T`.
pub fn functor_linear_over(at: &Algebra, d: u32) -> Result<FiniteAbelianPresentation> {
    let c = at.center().ring();
    let units = c.units();
    let image = nrd_of_units(at)?;
    let sub = times_powers(c, &image, &units, d);
    FiniteAbelianPresentation::quotient(c, &units, &sub)
}

/// `U(C_T) / Nrd(U(A_T)) U(C_T)^d` for a unitary involution.
pub fn functor_unitary(a: &AlgebraWithInvolution, ext: &FiniteFreeExtension, d: u32) -> Result<FiniteAbelianPresentation> {
    let at = ext.extend_involution(a)?;
    functor_unitary_over(&at, d)
}

pub fn functor_unitary_over(at: &AlgebraWithInvolution, d: u32) -> Result<FiniteAbelianPresentation> {
    if !at.is_unitary() {
        return Err(Error::Precondition(format!("unitary functor needs a unitary involution, got {}", at.kind())));
    }
    let e = at.center().etale().expect("unitary involution has an etale center");
    let u = e.unitary_scalars();
    let image = nrd_of_unitary(at)?;
    let sub = times_powers(e.ring(), &image, &u, d);
    FiniteAbelianPresentation::quotient(e.ring(), &u, &sub)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Center;
    use crate::etale::QuadraticEtale;
    use crate::matrix::RingMatrix;

    fn f(p: u32) -> RingSpec {
        RingSpec::prime_field(p).unwrap()
    }

    #[test]
    fn subgroup_check_rejects_non_closed_sets() {
        let r = f(7);
        let e = |v: i64| r.from_int(v);
        assert!(check_subgroup(&r, &[e(1), e(2), e(4)]).is_ok());
        assert!(check_subgroup(&r, &[e(1), e(6)]).is_ok());
        assert!(matches!(check_subgroup(&r, &[e(1), e(2)]), Err(Error::NotASubgroup(_))));
        assert!(matches!(check_subgroup(&r, &[e(2), e(4)]), Err(Error::NotASubgroup(_))));
        assert!(matches!(check_subgroup(&r, &[e(1), e(0)]), Err(Error::NotASubgroup(_))));
        let sub = times_powers(&r, &[e(1), e(6)], &r.units(), 3);
        assert_eq!(sub, vec![e(1), e(6)]);
        assert_eq!(times_powers(&r, &[e(1), e(6)], &r.units(), 2).len(), 6);
    }

    fn gaussian3() -> QuadraticEtale {
        let r = f(3);
        QuadraticEtale::new(&r, r.from_int(-1)).unwrap()
    }

    fn unitary_m2() -> AlgebraWithInvolution {
        let a = Algebra::split(&Center::Etale(gaussian3()), 2).unwrap();
        AlgebraWithInvolution::conjugate_transpose(a).unwrap()
    }

    #[test]
    fn unitary_and_special_groups_of_m2_gaussian3() {
        let a = unitary_m2();
        let u = enumerate_unitary(&a);
        assert_eq!(u.len(), 96);
        let alg = a.algebra();
        assert!(u.contains(&alg.neg(&alg.one())));
        let su = enumerate_special(&a, SpecialKind::SU).unwrap();
        assert_eq!(su.len(), 24);
        assert!(su.contains(&alg.one()));
        let image = nrd_image(alg, &u).unwrap();
        assert_eq!(image, gaussian3().unitary_scalars().into_iter().collect::<BTreeSet<_>>().into_iter().collect::<Vec<_>>());
        assert_eq!(su.len() * image.len(), u.len());
        assert!(enumerate_special(&a, SpecialKind::SO).is_err());
    }

    #[test]
    fn degree_one_unitary_is_unitary_scalars() {
        let c = gaussian3();
        let a = Algebra::split(&Center::Etale(c.clone()), 1).unwrap();
        let a = AlgebraWithInvolution::conjugate_transpose(a).unwrap();
        let u: Vec<EtaleElem> = enumerate_unitary(&a).iter().map(|x| a.algebra().to_matrix(x).get(0, 0)).collect();
        let mut expected = c.unitary_scalars();
        expected.sort();
        let mut got = u.clone();
        got.sort();
        assert_eq!(got, expected);
    }

    #[test]
    fn sl2_f3() {
        let a = Algebra::split(&Center::Base(f(3)), 2).unwrap();
        let a = AlgebraWithInvolution::transpose(a).unwrap();
        let sl = enumerate_special(&a, SpecialKind::SL).unwrap();
        assert_eq!(sl.len(), 24);
        assert_eq!(nrd_image(a.algebra(), &sl).unwrap(), vec![f(3).one()]);
        assert_eq!(nrd_image(a.algebra(), &[a.algebra().one()]).unwrap(), vec![f(3).one()]);
    }

    #[test]
    fn nrd_image_rejects_non_closed_sets() {
        let r = f(5);
        let a = Algebra::split(&Center::Base(r.clone()), 1).unwrap();
        let two = a.from_matrix(&RingMatrix::from_ints(&r, 1, 1, &[2]).unwrap());
        assert!(matches!(nrd_image(&a, &[a.one(), two]), Err(Error::NotASubgroup(_))));
    }

    #[test]
    fn quotient_structure() {
        let r = f(7);
        let units = r.units();
        let q = FiniteAbelianPresentation::quotient(&r, &units, &[r.one()]).unwrap();
        assert_eq!(q.order(), 6);
        assert_eq!(q.elementary_divisors(), &[2, 3]);
        assert_eq!(q.invariant_factors(), vec![6]);
        let z = RingSpec::product(vec![f(5), f(5)]).unwrap();
        let q = FiniteAbelianPresentation::quotient(&z, &z.units(), &[z.one()]).unwrap();
        assert_eq!(q.elementary_divisors(), &[4, 4]);
        assert_eq!(q.invariant_factors(), vec![4, 4]);
        let z3 = RingSpec::product(vec![f(3), f(5)]).unwrap();
        let q = FiniteAbelianPresentation::quotient(&z3, &z3.units(), &[z3.one()]).unwrap();
        assert_eq!(q.elementary_divisors(), &[2, 4]);
        assert_eq!(q.invariant_factors(), vec![2, 4]);
        assert_eq!(q.invariant_factors().iter().product::<u64>(), q.order() as u64);
    }

    #[test]
    fn functor_examples() {
        let r5 = f(5);
        let triv = FiniteFreeExtension::trivial(&r5);
        let m2 = Algebra::split(&Center::Base(r5.clone()), 2).unwrap();
        assert!(functor_linear(&m2, &triv, 2).unwrap().is_trivial());
        assert!(functor_linear(&m2, &triv, 0).unwrap().is_trivial());
        let deg1 = Algebra::split(&Center::Base(r5.clone()), 1).unwrap();
        // Nrd is the identity in degree one, so the quotient is trivial even
        // though F_5*/(F_5*)^2 alone has order 2.
        assert!(functor_linear(&deg1, &triv, 2).unwrap().is_trivial());
        let squares = times_powers(&r5, &[r5.one()], &r5.units(), 2);
        assert_eq!(FiniteAbelianPresentation::quotient(&r5, &r5.units(), &squares).unwrap().order(), 2);

        let c = gaussian3();
        let t3 = FiniteFreeExtension::trivial(&f(3));
        assert!(functor_unitary(&unitary_m2(), &t3, 1).unwrap().is_trivial());
        assert!(functor_unitary(&unitary_m2(), &t3, 0).unwrap().is_trivial());
        let a1 = AlgebraWithInvolution::conjugate_transpose(Algebra::split(&Center::Etale(c.clone()), 1).unwrap()).unwrap();
        assert!(functor_unitary(&a1, &t3, 1).unwrap().is_trivial());
        assert!(functor_unitary(&a1, &t3, 2).unwrap().is_trivial());
        let u = c.unitary_scalars();
        let squares = times_powers(c.ring(), &[c.ring().one()], &u, 2);
        assert_eq!(FiniteAbelianPresentation::quotient(c.ring(), &u, &squares).unwrap().order(), 2);
    }
}
