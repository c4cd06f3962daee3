//! The norm principle `Nrd(U(A)) = Nrd(A*)^{1-sigma}` for unitary
//! involutions: the decomposition `A = A_- + A_+`, the direct construction
//! of a unitary `w` with `nrd(w) = nrd(a) sigma(nrd(a))^{-1}` for `a` in the
//! open set `V`, the factorization `a = v_1 v_2` with `v_i` in `V` otherwise,
//! and a brute-force comparison of both sides.

use std::collections::BTreeSet;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::{Algebra, AlgebraElem};
use crate::error::{Error, Result};
use crate::etale::EtaleElem;
use crate::groups::enumerate_unitary;
use crate::involution::AlgebraWithInvolution;
use crate::matrix::{is_unimodular, RingMatrix};
use crate::ring::RingElem;

/// Bases `{1, e_2, .., e_m}` of `A_+ = ker(sigma - 1)` and
/// `{z, z e_2, .., z e_m}` of `A_- = z A_+`, with `z = sqrt(s)`; coordinates
/// list the minus block first.
#[derive(Clone, Debug)]
pub struct PlusMinusSplit {
    owner: AlgebraWithInvolution,
    plus: Vec<AlgebraElem>,
    minus: Vec<AlgebraElem>,
    to_coords: RingMatrix,
    from_coords: RingMatrix,
}

/// How a witness was obtained.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NpRoute {
    Direct,
    /// `a = (a v_2^{-1}) v_2` with both factors in `V`; `seed` is set when
    /// `v_2` came from the seeded random search.
    Factored {
        v2: AlgebraElem,
        seed: Option<u64>,
    },
}

/// One application of the direct construction: `factor * v = r + u`,
/// `w = -(r + u)(r - u)^{-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DirectStep {
    pub factor: AlgebraElem,
    pub v: AlgebraElem,
    pub r: RingElem,
    pub u: AlgebraElem,
    pub w: AlgebraElem,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NpWitness {
    pub input: AlgebraElem,
    pub route: NpRoute,
    pub steps: Vec<DirectStep>,
    pub w: AlgebraElem,
    pub verified: bool,
}

/// Unit candidates tried at random before giving up on a factorization.
const RANDOM_ATTEMPTS: usize = 20_000;
/// Largest `A_+` enumerated in the deterministic scan.
const PLUS_SCAN_LIMIT: u64 = 1 << 16;

pub fn pm_split(a: &AlgebraWithInvolution) -> Result<PlusMinusSplit> {
    if !a.is_unitary() {
        return Err(Error::Precondition(format!("needs a unitary involution, got {}", a.kind())));
    }
    let alg = a.algebra();
    let base = alg.base();
    let r = alg.rank();
    let id = RingMatrix::identity(base, r);
    let plus_kernel = a.matrix().sub(&id)?.kernel()?;
    let minus_rank = a.matrix().add(&id)?.kernel()?.len();
    let m = plus_kernel.len();
    if minus_rank != m || 2 * m != r {
        return Err(Error::NotFree(format!("symmetric rank {m}, skew rank {minus_rank}, algebra rank {r}")));
    }
    let mut plus = vec![alg.one()];
    for k in plus_kernel {
        if plus.len() == m {
            break;
        }
        let mut vecs: Vec<Vec<RingElem>> = plus.iter().map(|p| p.0.clone()).collect();
        vecs.push(k.clone());
        if is_unimodular(base, &vecs) {
            plus.push(AlgebraElem(k));
        }
    }
    if plus.len() != m {
        return Err(Error::NotFree("no basis of A_+ containing 1".into()));
    }
    let z = alg.center_generator().expect("unitary involution has an etale center");
    let minus: Vec<AlgebraElem> = plus.iter().map(|p| alg.mul(z, p)).collect();
    let cols: Vec<Vec<RingElem>> = minus.iter().chain(&plus).map(|x| x.0.clone()).collect();
    let from_coords = RingMatrix::from_columns(base, &cols)?;
    let to_coords = from_coords.invert().map_err(|_| Error::NotFree("A_- + A_+ is not all of A".into()))?;
    Ok(PlusMinusSplit { owner: a.clone(), plus, minus, to_coords, from_coords })
}

impl PlusMinusSplit {
    pub fn owner(&self) -> &AlgebraWithInvolution {
        &self.owner
    }

    pub fn m(&self) -> usize {
        self.plus.len()
    }

    pub fn plus_basis(&self) -> &[AlgebraElem] {
        &self.plus
    }

    pub fn minus_basis(&self) -> &[AlgebraElem] {
        &self.minus
    }

    /// `sqrt(s)` as an element of `A`.
    pub fn sqrt_b(&self) -> &AlgebraElem {
        &self.minus[0]
    }

    /// Coordinates in the fixed basis (minus block, then plus block).
    pub fn coords(&self, x: &AlgebraElem) -> Vec<RingElem> {
        self.to_coords.mul_vec(&x.0).expect("square")
    }

    pub fn from_coords(&self, c: &[RingElem]) -> AlgebraElem {
        AlgebraElem(self.from_coords.mul_vec(c).expect("square"))
    }

    /// Left multiplication by `a` in the fixed basis.
    pub fn regular_rep(&self, a: &AlgebraElem) -> RingMatrix {
        let alg = self.owner.algebra();
        self.to_coords.mul(&alg.table().left_matrix(a)).and_then(|m| m.mul(&self.from_coords)).expect("square")
    }

    /// The element `v` of `A_-` with first coordinate 1 making the plus part
    /// of `a v` a multiple of 1, when `a` lies in `V`.
    pub fn open_set_witness(&self, a: &AlgebraElem) -> Option<AlgebraElem> {
        let alg = self.owner.algebra();
        let base = alg.base();
        if !alg.is_unit(a) {
            return None;
        }
        let m = self.m();
        let rpr = self.regular_rep(a);
        let mut vcoords = vec![base.zero(); 2 * m];
        vcoords[0] = base.one();
        if m > 1 {
            let rows: Vec<usize> = (m + 1..2 * m).collect();
            let cols: Vec<usize> = (1..m).collect();
            let n = rpr.submatrix(&rows, &cols).ok()?;
            let ninv = n.invert().ok()?;
            let cbar: Vec<RingElem> = rows.iter().map(|&i| base.neg(rpr.get(i, 0))).collect();
            let rest = ninv.mul_vec(&cbar).ok()?;
            vcoords[1..m].copy_from_slice(&rest);
        }
        let v = self.from_coords(&vcoords);
        if !alg.is_unit(&v) || !alg.is_unit(&alg.mul(a, &v)) {
            return None;
        }
        Some(v)
    }
}

pub fn open_set_member(split: &PlusMinusSplit, a: &AlgebraElem) -> bool {
    split.open_set_witness(a).is_some()
}

fn direct_step(split: &PlusMinusSplit, a: &AlgebraElem) -> Result<DirectStep> {
    let alg = split.owner.algebra();
    let base = alg.base();
    let v = split.open_set_witness(a).ok_or_else(|| Error::Precondition(format!("{} is not in V", alg.format(a))))?;
    let av = alg.mul(a, &v);
    let m = split.m();
    let c = split.coords(&av);
    if c[m + 1..].iter().any(|x| !base.is_zero(*x)) {
        return Err(Error::Precondition("a v has a plus part outside R".into()));
    }
    let r = c[m];
    let mut ucoords = c.clone();
    ucoords[m] = base.zero();
    let u = split.from_coords(&ucoords);
    let r1 = alg.scale(r, &alg.one());
    let plus = alg.add(&r1, &u);
    let minus = alg.sub(&r1, &u);
    let w = alg.neg(&alg.mul(&plus, &alg.inverse(&minus)?));
    Ok(DirectStep { factor: a.clone(), v, r, u, w })
}

/// Independent replay of a step: `factor v = r + u`, `u` skew, `v` skew and
/// a unit, `(r+u)(r-u) = (r-u)(r+u)`.
fn step_checks(a: &AlgebraWithInvolution, step: &DirectStep) -> bool {
    let alg = a.algebra();
    let r1 = alg.scale(step.r, &alg.one());
    let plus = alg.add(&r1, &step.u);
    let minus = alg.sub(&r1, &step.u);
    alg.mul_independent(&step.factor, &step.v) == plus
        && a.apply(&step.u) == alg.neg(&step.u)
        && a.apply(&step.v) == alg.neg(&step.v)
        && alg.is_unit(&step.v)
        && alg.mul_independent(&plus, &minus) == alg.mul_independent(&minus, &plus)
        && alg.mul_independent(&step.w, &minus) == alg.neg(&plus)
}

/// `nrd(a) sigma(nrd(a))^{-1}`.
pub fn nrd_one_minus_sigma(a: &AlgebraWithInvolution, x: &AlgebraElem) -> Result<EtaleElem> {
    let n = a.algebra().nrd(x)?;
    a.center().one_minus_sigma(n).ok_or_else(|| Error::NotAUnit(a.algebra().format(x)))
}

fn verify(a: &AlgebraWithInvolution, input: &AlgebraElem, steps: &[DirectStep], w: &AlgebraElem) -> bool {
    let alg = a.algebra();
    let Ok(target) = nrd_one_minus_sigma(a, input) else {
        return false;
    };
    steps.iter().all(|s| step_checks(a, s)) && alg.mul_independent(w, &a.apply(w)) == alg.one() && alg.nrd(w).ok() == Some(target)
}

pub fn direct_np_witness(split: &PlusMinusSplit, a: &AlgebraElem) -> Result<NpWitness> {
    let step = direct_step(split, a)?;
    let w = step.w.clone();
    let verified = verify(&split.owner, a, std::slice::from_ref(&step), &w);
    Ok(NpWitness { input: a.clone(), route: NpRoute::Direct, steps: vec![step], w, verified })
}

/// The direct witness when `a` is in `V`; otherwise a factorization
/// `a = (a v_2^{-1}) v_2` found by scanning `v_2 = sqrt(s) p` over units `p`
/// of `A_+`, then over seeded random units.
pub fn np_witness(split: &PlusMinusSplit, a: &AlgebraElem, seed: u64) -> Result<NpWitness> {
    let alg = split.owner.algebra();
    if !alg.is_unit(a) {
        return Err(Error::NotAUnit(alg.format(a)));
    }
    if open_set_member(split, a) {
        return direct_np_witness(split, a);
    }
    let try_factor = |v2: &AlgebraElem| -> Option<(DirectStep, DirectStep)> {
        if !open_set_member(split, v2) {
            return None;
        }
        let v1 = alg.mul(a, &alg.inverse(v2).ok()?);
        if !open_set_member(split, &v1) {
            return None;
        }
        Some((direct_step(split, &v1).ok()?, direct_step(split, v2).ok()?))
    };
    let finish = |v2: AlgebraElem, s1: DirectStep, s2: DirectStep, seed: Option<u64>| {
        let w = alg.mul(&s1.w, &s2.w);
        let steps = vec![s1, s2];
        let verified = verify(&split.owner, a, &steps, &w);
        NpWitness { input: a.clone(), route: NpRoute::Factored { v2, seed }, steps, w, verified }
    };
    for p in plus_units(split) {
        let v2 = alg.mul(split.sqrt_b(), &p);
        if let Some((s1, s2)) = try_factor(&v2) {
            return Ok(finish(v2, s1, s2, None));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..RANDOM_ATTEMPTS {
        let v2 = alg.random_unit(&mut rng);
        if let Some((s1, s2)) = try_factor(&v2) {
            return Ok(finish(v2, s1, s2, Some(seed)));
        }
    }
    Err(Error::Exhausted(format!("no factorization of {} through V", alg.format(a))))
}

/// Units of `A_+` in coordinate order, when `A_+` is small enough to scan.
fn plus_units(split: &PlusMinusSplit) -> Vec<AlgebraElem> {
    let alg = split.owner.algebra();
    let base = alg.base();
    let q = base.size() as u64;
    let m = split.m();
    let Some(count) = q.checked_pow(m as u32).filter(|c| *c <= PLUS_SCAN_LIMIT) else {
        return Vec::new();
    };
    let mut out = Vec::new();
    for mut idx in 0..count {
        let mut coords = vec![base.zero(); 2 * m];
        for slot in coords[m..].iter_mut().rev() {
            *slot = base.elem((idx % q) as u32).expect("in range");
            idx /= q;
        }
        let p = split.from_coords(&coords);
        if alg.is_unit(&p) {
            out.push(p);
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NpBruteForceReport {
    /// `Nrd(U(A))`.
    pub unitary_norms: Vec<EtaleElem>,
    /// `Nrd(A*)^{1-sigma}`.
    pub twisted_norms: Vec<EtaleElem>,
    pub unitary_count: usize,
    pub unit_count: usize,
    pub equal: bool,
}

/// Both sides of the norm principle as explicit subsets of `C*`.
pub fn np_bruteforce_check(a: &AlgebraWithInvolution) -> Result<NpBruteForceReport> {
    if !a.is_unitary() {
        return Err(Error::Precondition(format!("needs a unitary involution, got {}", a.kind())));
    }
    let alg: &Algebra = a.algebra();
    let unitary = enumerate_unitary(a);
    let mut lhs = BTreeSet::new();
    for x in &unitary {
        lhs.insert(alg.nrd(x)?);
    }
    let mut rhs = BTreeSet::new();
    let mut unit_count = 0;
    for x in alg.elements() {
        if alg.is_unit(&x) {
            unit_count += 1;
            rhs.insert(nrd_one_minus_sigma(a, &x)?);
        }
    }
    Ok(NpBruteForceReport {
        equal: lhs == rhs,
        unitary_norms: lhs.into_iter().collect(),
        twisted_norms: rhs.into_iter().collect(),
        unitary_count: unitary.len(),
        unit_count,
    })
}
