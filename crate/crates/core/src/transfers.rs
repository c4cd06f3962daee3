//! Finite free ring extensions, their norm maps, and the transfer checks:
//! norms of reduced norms land in reduced norms, transfers are well defined
//! on functor values, additivity over products, and compatibility with
//! specialization along `R[t]`.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{Algebra, Center};
use crate::error::{Error, Result};
use crate::etale::QuadraticEtale;
use crate::groups::{functor_linear_over, functor_unitary_over, nrd_of_units, FiniteAbelianPresentation};
use crate::involution::AlgebraWithInvolution;
use crate::matrix::{char_poly_coeffs, RingMatrix};
use crate::poly::{Poly, PolyRing};
use crate::ring::{RingElem, RingSpec};

/// `total` as a free module over `base` with an explicit basis.
#[derive(Clone, Debug)]
pub struct FiniteFreeExtension {
    base: RingSpec,
    total: RingSpec,
    embed: Vec<RingElem>,
    basis: Vec<RingElem>,
    coords: Vec<Vec<RingElem>>,
    label: String,
}

impl FiniteFreeExtension {
    /// Builds the coordinate table by expanding every base combination of
    /// `basis`; fails unless this is a bijection onto `total`.
    pub fn from_parts(
        base: &RingSpec,
        total: &RingSpec,
        embed: impl Fn(RingElem) -> RingElem,
        basis: Vec<RingElem>,
        label: impl Into<String>,
    ) -> Result<Self> {
        let embed: Vec<RingElem> = base.elements().map(&embed).collect();
        if embed[base.one().index() as usize] != total.one() {
            return Err(Error::Precondition("embedding is not unital".into()));
        }
        let q = base.size() as u64;
        let k = basis.len();
        if q.checked_pow(k as u32) != Some(total.size() as u64) {
            return Err(Error::NotFree(format!("|total| = {} is not |base|^{k} = {}^{k}", total.size(), q)));
        }
        let mut coords: Vec<Option<Vec<RingElem>>> = vec![None; total.size() as usize];
        for idx in 0..total.size() as u64 {
            let mut c = vec![base.zero(); k];
            let mut rest = idx;
            for slot in c.iter_mut().rev() {
                *slot = base.elem((rest % q) as u32)?;
                rest /= q;
            }
            let value = total.sum(c.iter().zip(&basis).map(|(ci, b)| total.mul(embed[ci.index() as usize], *b)));
            let entry = &mut coords[value.index() as usize];
            if entry.is_some() {
                return Err(Error::NotFree("basis is not linearly independent".into()));
            }
            *entry = Some(c);
        }
        Ok(Self {
            base: base.clone(),
            total: total.clone(),
            embed,
            basis,
            coords: coords.into_iter().map(|c| c.expect("bijection")).collect(),
            label: label.into(),
        })
    }

    /// `R` over itself.
    pub fn trivial(base: &RingSpec) -> Self {
        Self::from_parts(base, base, |r| r, vec![base.one()], format!("{base}/{base}")).expect("rank one")
    }

    /// `R[x]/(f)` for monic `f` (coefficients low to high) with basis `1, x, ...`.
    pub fn poly_quotient(base: &RingSpec, modulus: Vec<RingElem>) -> Result<Self> {
        let total = RingSpec::quotient(base, modulus.clone())?;
        let deg = modulus.len() - 1;
        let basis = (0..deg)
            .map(|i| {
                let mut c = vec![base.zero(); i + 1];
                c[i] = base.one();
                total.from_poly_coeffs(&c)
            })
            .collect::<Result<Vec<_>>>()?;
        let t = total.clone();
        Self::from_parts(base, &total, move |r| t.from_poly_coeffs(&[r]).expect("constant"), basis, format!("{total}"))
    }

    /// `T_1 x T_2` over the common base.
    pub fn product(first: &Self, second: &Self) -> Result<Self> {
        if first.base != second.base {
            return Err(Error::Precondition("product of extensions needs a common base".into()));
        }
        let total = RingSpec::product(vec![first.total.clone(), second.total.clone()])?;
        let pair = |a: RingElem, b: RingElem| total.from_components(&[a, b]).expect("two components");
        let mut basis: Vec<RingElem> = first.basis.iter().map(|b| pair(*b, second.total.zero())).collect();
        basis.extend(second.basis.iter().map(|b| pair(first.total.zero(), *b)));
        let label = format!("{} x {}", first.label, second.label);
        Self::from_parts(&first.base, &total, |r| pair(first.embed(r), second.embed(r)), basis, label)
    }

    /// `C_T = T[sqrt(s)]` over `C = R[sqrt(s)]`, with the basis of `T/R`.
    pub fn over_etale(&self, c: &QuadraticEtale) -> Result<(QuadraticEtale, Self)> {
        if *c.base() != self.base {
            return Err(Error::Precondition("etale algebra is over a different base".into()));
        }
        let ct = QuadraticEtale::new(&self.total, self.embed(c.s()))?;
        let basis = self.basis.iter().map(|b| ct.embed(*b)).collect();
        let embed = |x: RingElem| {
            let (a, b) = c.parts(x);
            ct.make(self.embed(a), self.embed(b))
        };
        let label = format!("{}[sqrt]/{}", self.label, c.ring());
        let ext = Self::from_parts(c.ring(), ct.ring(), embed, basis, label)?;
        Ok((ct, ext))
    }

    /// The same extension on another basis of `total`.
    pub fn with_basis(&self, basis: Vec<RingElem>) -> Result<Self> {
        let embed = self.embed.clone();
        Self::from_parts(&self.base, &self.total, |r| embed[r.index() as usize], basis, self.label.clone())
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn base(&self) -> &RingSpec {
        &self.base
    }

    pub fn total(&self) -> &RingSpec {
        &self.total
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[RingElem] {
        &self.basis
    }

    pub fn embed(&self, r: RingElem) -> RingElem {
        self.embed[r.index() as usize]
    }

    /// Base coordinates of `t` in the basis.
    pub fn coords(&self, t: RingElem) -> &[RingElem] {
        &self.coords[t.index() as usize]
    }

    /// Matrix of multiplication by `t`; column `j` holds `t * b_j`.
    pub fn mult_matrix(&self, t: RingElem) -> RingMatrix {
        let cols: Vec<Vec<RingElem>> = self.basis.iter().map(|b| self.coords(self.total.mul(t, *b)).to_vec()).collect();
        RingMatrix::from_columns(&self.base, &cols).expect("square")
    }

    /// `N_{T/R}(t) = det(mult_t)`.
    pub fn norm(&self, t: RingElem) -> RingElem {
        self.mult_matrix(t).det().expect("square")
    }

    /// `A (x)_R T`.
    pub fn extend_algebra(&self, a: &Algebra) -> Result<Algebra> {
        a.base_change(&self.total, &|r| self.embed(r))
    }

    pub fn extend_involution(&self, a: &AlgebraWithInvolution) -> Result<AlgebraWithInvolution> {
        a.base_change(&self.total, &|r| self.embed(r))
    }

    /// The extension of centers `Z(A_T) / Z(A)` induced by this extension.
    pub fn center_extension(&self, center: &Center) -> Result<Self> {
        match center {
            Center::Base(_) => Ok(self.clone()),
            Center::Etale(c) => Ok(self.over_etale(c)?.1),
        }
    }
}

/// Outcome of the inclusion `N(Nrd(A_T*)) <= Nrd(A*)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormInclusionReport {
    pub transferred: Vec<RingElem>,
    pub reduced_norms: Vec<RingElem>,
    pub inclusion: bool,
    pub equality: bool,
}

pub fn norm_inclusion_check(a: &Algebra, ext: &FiniteFreeExtension) -> Result<NormInclusionReport> {
    let center_ext = ext.center_extension(a.center())?;
    let at = ext.extend_algebra(a)?;
    let transferred: BTreeSet<RingElem> = nrd_of_units(&at)?.into_iter().map(|x| center_ext.norm(x)).collect();
    let reduced_norms: BTreeSet<RingElem> = nrd_of_units(a)?.into_iter().collect();
    Ok(NormInclusionReport {
        inclusion: transferred.is_subset(&reduced_norms),
        equality: transferred == reduced_norms,
        transferred: transferred.into_iter().collect(),
        reduced_norms: reduced_norms.into_iter().collect(),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Functor {
    /// `T -> Z(A_T)* / Nrd(A_T*) Z(A_T)*^d`.
    Linear(u32),
    /// `T -> U(C_T) / Nrd(U(A_T)) U(C_T)^d`.
    Unitary(u32),
}

/// The transfer `F(T) -> F(R)` induced by the norm, as a map on coset
/// representatives.
#[derive(Clone, Debug)]
pub struct TransferMap {
    pub source: FiniteAbelianPresentation,
    pub target: FiniteAbelianPresentation,
    /// `(source representative, target representative)` for every coset.
    pub images: Vec<(RingElem, RingElem)>,
}

impl TransferMap {
    pub fn apply(&self, x: RingElem) -> Option<RingElem> {
        let idx = self.source.coset_index(x)?;
        Some(self.images[idx].1)
    }
}

fn functor_over(f: Functor, a: &AlgebraWithInvolution) -> Result<FiniteAbelianPresentation> {
    match f {
        Functor::Linear(d) => functor_linear_over(a.algebra(), d),
        Functor::Unitary(d) => functor_unitary_over(a, d),
    }
}

/// Computes `F(T)`, `F(R)` and the norm-induced map, checking on every
/// member of every coset that the image class does not depend on the
/// representative.
pub fn transfer_on_functor(f: Functor, a: &AlgebraWithInvolution, ext: &FiniteFreeExtension) -> Result<TransferMap> {
    let at = ext.extend_involution(a)?;
    let center_ext = ext.center_extension(a.center())?;
    let source = functor_over(f, &at)?;
    let target = functor_over(f, a)?;
    induced_map(source, target, |x| center_ext.norm(x))
}

/// The same for the linear functor of an algebra without an involution.
pub fn transfer_linear(a: &Algebra, d: u32, ext: &FiniteFreeExtension) -> Result<TransferMap> {
    let at = ext.extend_algebra(a)?;
    let center_ext = ext.center_extension(a.center())?;
    let source = functor_linear_over(&at, d)?;
    let target = functor_linear_over(a, d)?;
    induced_map(source, target, |x| center_ext.norm(x))
}

/// The map `G_T/H_T -> G_R/H_R` induced by `norm`, checked to be well
/// defined on every member of every coset.
pub fn induced_map(
    source: FiniteAbelianPresentation,
    target: FiniteAbelianPresentation,
    norm: impl Fn(RingElem) -> RingElem,
) -> Result<TransferMap> {
    let ring = target.ring().clone();
    let mut images = Vec::with_capacity(source.order());
    for (idx, &rep) in source.representatives().iter().enumerate() {
        let mut class = None;
        for x in source.coset(idx) {
            let nx = norm(x);
            let c = target
                .class_of(nx)
                .ok_or_else(|| Error::IllDefined(format!("norm {} lies outside the target group", ring.format(nx))))?;
            match class {
                None => class = Some(c),
                Some(prev) if prev != c => {
                    return Err(Error::IllDefined(format!(
                        "coset of {} maps to both {} and {}",
                        source.ring().format(rep),
                        ring.format(prev),
                        ring.format(c)
                    )))
                }
                Some(_) => {}
            }
        }
        images.push((rep, class.expect("nonempty coset")));
    }
    Ok(TransferMap { source, target, images })
}

/// Outcome of the additivity check over `T_1 x T_2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TaReport {
    pub checked: usize,
    pub mismatches: usize,
    pub source_order: usize,
    pub target_order: usize,
}

impl TaReport {
    pub fn passed(&self) -> bool {
        self.mismatches == 0
    }
}

/// For the linear functor with exponent `d`: on every unit `(x_1, x_2)` of
/// the center of `A_{T_1 x T_2}`, the transfer class equals the product of
/// the classes of the component transfers.
pub fn ta_check(a: &Algebra, t1: &FiniteFreeExtension, t2: &FiniteFreeExtension, d: u32) -> Result<TaReport> {
    let prod = FiniteFreeExtension::product(t1, t2)?;
    let map = transfer_linear(a, d, &prod)?;
    let c1 = t1.center_extension(a.center())?;
    let c2 = t2.center_extension(a.center())?;
    let cp = prod.center_extension(a.center())?;
    let target = &map.target;
    let ring = target.ring();
    let mut checked = 0;
    let mut mismatches = 0;
    for &x in map.source.group() {
        let (x1, x2) = split_pair(&cp, &c1, &c2, x)?;
        let whole = target.class_of(cp.norm(x));
        let parts = target.class_of(ring.mul(c1.norm(x1), c2.norm(x2)));
        checked += 1;
        if whole.is_none() || whole != parts || whole != map.apply(x) {
            mismatches += 1;
        }
    }
    Ok(TaReport { checked, mismatches, source_order: map.source.order(), target_order: map.target.order() })
}

/// Components of an element of the product center: directly for a product
/// ring, through the coordinates otherwise (etale center over a product).
fn split_pair(
    cp: &FiniteFreeExtension,
    c1: &FiniteFreeExtension,
    c2: &FiniteFreeExtension,
    x: RingElem,
) -> Result<(RingElem, RingElem)> {
    let coords = cp.coords(x);
    let k1 = c1.rank();
    let rebuild = |ext: &FiniteFreeExtension, cs: &[RingElem]| {
        let t = ext.total();
        t.sum(cs.iter().zip(ext.basis()).map(|(c, b)| t.mul(ext.embed(*c), *b)))
    };
    if coords.len() != k1 + c2.rank() {
        return Err(Error::DimensionMismatch("product basis does not split".into()));
    }
    Ok((rebuild(c1, &coords[..k1]), rebuild(c2, &coords[k1..])))
}

/// `S = R[t][x]/(f)` for `f` monic in `x` with coefficients in `R[t]`.
#[derive(Clone, Debug)]
pub struct PolyExtension {
    base: RingSpec,
    modulus: Vec<Poly>,
}

/// An element of a [`PolyExtension`]: coefficients of `1, x, ..., x^{k-1}`
/// in `R[t]`.
pub type PolyExtElem = Vec<Poly>;

impl PolyExtension {
    /// `modulus[i]` is the coefficient of `x^i`; the last must be `1`.
    pub fn new(base: &RingSpec, modulus: Vec<Poly>) -> Result<Self> {
        let lead = modulus.last().ok_or(Error::NotMonic)?;
        if modulus.len() < 2 || *lead != Poly::constant(base, base.one()) {
            return Err(Error::NotMonic);
        }
        Ok(Self { base: base.clone(), modulus })
    }

    /// From integer coefficient lists: `coeffs[i][j]` is the coefficient of
    /// `x^i t^j`.
    pub fn from_ints(base: &RingSpec, coeffs: &[Vec<i64>]) -> Result<Self> {
        Self::new(base, coeffs.iter().map(|c| Poly::from_ints(base, c)).collect())
    }

    pub fn base(&self) -> &RingSpec {
        &self.base
    }

    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    pub fn modulus(&self) -> &[Poly] {
        &self.modulus
    }

    pub fn zero(&self) -> PolyExtElem {
        vec![Poly::zero(&self.base); self.degree()]
    }

    /// `x^i`.
    pub fn x_pow(&self, i: usize) -> PolyExtElem {
        let mut full = vec![Poly::zero(&self.base); i + 1];
        full[i] = Poly::constant(&self.base, self.base.one());
        self.reduce(full)
    }

    pub fn constant(&self, c: &Poly) -> PolyExtElem {
        let mut v = self.zero();
        v[0] = c.clone();
        v
    }

    /// Reduces a polynomial in `x` modulo the monic modulus.
    fn reduce(&self, mut p: Vec<Poly>) -> PolyExtElem {
        let k = self.degree();
        while p.len() > k {
            let top = p.pop().expect("nonempty");
            let shift = p.len() - k;
            for (i, m) in self.modulus[..k].iter().enumerate() {
                p[shift + i] = p[shift + i].sub(&top.mul(m));
            }
        }
        p.resize(k, Poly::zero(&self.base));
        p
    }

    pub fn mul(&self, a: &PolyExtElem, b: &PolyExtElem) -> PolyExtElem {
        let mut out = vec![Poly::zero(&self.base); a.len() + b.len() - 1];
        for (i, ai) in a.iter().enumerate() {
            for (j, bj) in b.iter().enumerate() {
                out[i + j] = out[i + j].add(&ai.mul(bj));
            }
        }
        self.reduce(out)
    }

    pub fn sub(&self, a: &PolyExtElem, b: &PolyExtElem) -> PolyExtElem {
        a.iter().zip(b).map(|(x, y)| x.sub(y)).collect()
    }

    /// `N_{S/R[t]}(s)`, the determinant over `R[t]` of multiplication by `s`.
    pub fn norm(&self, s: &PolyExtElem) -> Poly {
        let k = self.degree();
        let ring = PolyRing::new(&self.base);
        let mut entries = vec![Poly::zero(&self.base); k * k];
        for j in 0..k {
            let col = self.mul(s, &self.x_pow(j));
            for (i, c) in col.into_iter().enumerate() {
                entries[i * k + j] = c;
            }
        }
        let cp = char_poly_coeffs(&ring, k, &entries);
        if k % 2 == 0 {
            cp[0].clone()
        } else {
            cp[0].neg()
        }
    }

    /// The fibre `R[x]/(f(a, x))` at `t = a`.
    pub fn fibre(&self, a: RingElem) -> Result<FiniteFreeExtension> {
        FiniteFreeExtension::poly_quotient(&self.base, self.modulus.iter().map(|m| m.eval(a)).collect())
    }

    /// The image of `s` in the fibre at `t = a`.
    pub fn specialize(&self, fibre: &FiniteFreeExtension, s: &PolyExtElem, a: RingElem) -> Result<RingElem> {
        let coeffs: Vec<RingElem> = s.iter().map(|c| c.eval(a)).collect();
        fibre.total().from_poly_coeffs(&coeffs)
    }

    /// Generators of units: constant units, `x` when `f(t, 0)` is a constant
    /// unit, and `x - c` when `f(t, c)` is a constant unit.
    pub fn unit_generators(&self) -> Vec<PolyExtElem> {
        let b = &self.base;
        let mut gens: Vec<PolyExtElem> = b.units().into_iter().map(|u| self.constant(&Poly::constant(b, u))).collect();
        for c in b.elements() {
            let value = self.modulus.iter().rev().fold(Poly::zero(b), |acc, m| acc.mul(&Poly::constant(b, c)).add(m));
            if value.degree() == 0 && b.is_unit(value.coeff(0)) {
                let mut g = self.x_pow(1);
                g[0] = g[0].sub(&Poly::constant(b, c));
                gens.push(g);
            }
        }
        gens
    }

    fn random_elem(&self, rng: &mut ChaCha8Rng, t_degree: usize) -> PolyExtElem {
        let q = self.base.size();
        (0..self.degree())
            .map(|_| {
                let c: Vec<RingElem> = (0..=t_degree).map(|_| self.base.elem(rng.gen_range(0..q)).expect("in range")).collect();
                Poly::new(&self.base, c)
            })
            .collect()
    }
}

/// Outcome of the specialization check at `t = 0` and `t = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TbReport {
    pub samples: usize,
    pub unit_samples: usize,
    pub evaluation_failures: usize,
    pub nonconstant_unit_norms: usize,
    pub seed: u64,
}

impl TbReport {
    pub fn passed(&self) -> bool {
        self.evaluation_failures == 0 && self.nonconstant_unit_norms == 0
    }
}

/// A finite ring is reduced iff no nonzero element squares to zero.
pub fn is_reduced(r: &RingSpec) -> bool {
    r.elements().all(|x| r.is_zero(x) || !r.is_zero(r.mul(x, x)))
}

/// For `samples` seeded random elements and `samples` seeded products of
/// unit generators: the norm over `R[t]` evaluated at `t = 0, 1` equals the
/// norm of the specialization, and for units it is constant in `t`.
pub fn tb_check(ext: &PolyExtension, samples: usize, seed: u64) -> Result<TbReport> {
    let b = ext.base();
    if !is_reduced(b) {
        return Err(Error::Precondition(format!("{b} is not reduced")));
    }
    let points = [b.zero(), b.one()];
    let fibres = points.iter().map(|a| ext.fibre(*a)).collect::<Result<Vec<_>>>()?;
    let gens = ext.unit_generators();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut evaluation_failures = 0;
    let mut nonconstant_unit_norms = 0;
    let evaluation_ok = |s: &PolyExtElem, n: &Poly| -> Result<bool> {
        for (a, fibre) in points.iter().zip(&fibres) {
            if n.eval(*a) != fibre.norm(ext.specialize(fibre, s, *a)?) {
                return Ok(false);
            }
        }
        Ok(true)
    };
    for _ in 0..samples {
        let s = ext.random_elem(&mut rng, 2);
        if !evaluation_ok(&s, &ext.norm(&s))? {
            evaluation_failures += 1;
        }
    }
    for _ in 0..samples {
        let factors = rng.gen_range(1..=4);
        let mut u = ext.constant(&Poly::constant(b, b.one()));
        for _ in 0..factors {
            u = ext.mul(&u, &gens[rng.gen_range(0..gens.len())]);
        }
        let n = ext.norm(&u);
        if !evaluation_ok(&u, &n)? {
            evaluation_failures += 1;
        }
        if n.degree() != 0 || !b.is_unit(n.coeff(0)) {
            nonconstant_unit_norms += 1;
        }
    }
    Ok(TbReport { samples, unit_samples: samples, evaluation_failures, nonconstant_unit_norms, seed })
}

/// `R[x]/(x^2 - s)` presented as a finite free extension.
pub fn etale_extension(c: &QuadraticEtale) -> Result<FiniteFreeExtension> {
    let base = c.base();
    FiniteFreeExtension::from_parts(base, c.ring(), |r| c.embed(r), vec![c.ring().one(), c.sqrt_s()], format!("{}", c.ring()))
}
