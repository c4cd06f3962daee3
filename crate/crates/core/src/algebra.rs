//! Finite-rank algebras over a base ring: structure tables, the split matrix
//! presentation, the Azumaya test, centers, reduced characteristic
//! polynomials and reduced norms.
//!
//! Every algebra is stored as a structure table over the base ring `R`, so
//! elements are coordinate vectors over `R` and every later construction
//! (involutions, the plus/minus decomposition, regular representations) is
//! presentation-agnostic. Algebras built as `M_n(C)` additionally keep a
//! split view used for fast determinants and as an independent
//! multiplication route.

use std::fmt;

use rand::Rng;

use crate::error::{Error, Result};
use crate::etale::{EtaleElem, QuadraticEtale};
use crate::matrix::{is_unimodular, RingMatrix};
use crate::poly::Poly;
use crate::ring::{RingElem, RingSpec};

/// Coordinates of an algebra element over the base ring.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AlgebraElem(pub Vec<RingElem>);

impl AlgebraElem {
    pub fn coords(&self) -> &[RingElem] {
        &self.0
    }
}

/// Multiplication table `e_i e_j = sum_k gamma[i][j][k] e_k` over `base`,
/// stored sparsely, with the coordinates of the identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureTable {
    base: RingSpec,
    rank: usize,
    products: Vec<Vec<(usize, RingElem)>>,
    unit: Vec<RingElem>,
}

/// Outcome of the Azumaya test: the determinant of the canonical map
/// `A (x) A^op -> End(A)` and whether it is a unit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AzumayaReport {
    pub is_azumaya: bool,
    pub determinant: String,
    pub matrix_size: usize,
}

impl StructureTable {
    /// Builds a table from dense constants `gamma[(i * rank + j) * rank + k]`
    /// and the index of the basis element that is the identity. Checks
    /// associativity and unitality on all basis triples.
    pub fn from_dense(base: &RingSpec, rank: usize, gamma: &[RingElem], unit_index: usize) -> Result<Self> {
        if unit_index >= rank {
            return Err(Error::MalformedTable(format!("unit index {unit_index} >= rank {rank}")));
        }
        let mut unit = vec![base.zero(); rank];
        unit[unit_index] = base.one();
        Self::from_dense_with_unit(base, rank, gamma, unit)
    }

    pub fn from_dense_with_unit(base: &RingSpec, rank: usize, gamma: &[RingElem], unit: Vec<RingElem>) -> Result<Self> {
        if rank == 0 || gamma.len() != rank * rank * rank || unit.len() != rank {
            return Err(Error::MalformedTable(format!("expected {} structure constants for rank {rank}", rank * rank * rank)));
        }
        let products = (0..rank * rank)
            .map(|ij| (0..rank).filter(|&k| !base.is_zero(gamma[ij * rank + k])).map(|k| (k, gamma[ij * rank + k])).collect())
            .collect();
        let table = Self { base: base.clone(), rank, products, unit };
        table.validate()?;
        Ok(table)
    }

    fn validate(&self) -> Result<()> {
        let one = AlgebraElem(self.unit.clone());
        for i in 0..self.rank {
            let ei = self.basis(i);
            if self.mul(&one, &ei) != ei || self.mul(&ei, &one) != ei {
                return Err(Error::MalformedTable(format!("identity fails on e_{i}")));
            }
            for j in 0..self.rank {
                let eij = self.mul(&ei, &self.basis(j));
                for k in 0..self.rank {
                    let left = self.mul(&eij, &self.basis(k));
                    let right = self.mul(&ei, &self.mul(&self.basis(j), &self.basis(k)));
                    if left != right {
                        return Err(Error::MalformedTable(format!("(e_{i} e_{j}) e_{k} != e_{i} (e_{j} e_{k})")));
                    }
                }
            }
        }
        Ok(())
    }

    /// The quaternion algebra `(a, b)`: basis `1, i, j, k` with `i^2 = a`,
    /// `j^2 = b`, `ij = -ji = k`.
    pub fn quaternion(base: &RingSpec, a: RingElem, b: RingElem) -> Result<Self> {
        let r = base;
        let z = r.zero();
        let one = r.one();
        let mut g = vec![z; 64];
        let mut set = |i: usize, j: usize, k: usize, v: RingElem| g[(i * 4 + j) * 4 + k] = v;
        let ab = r.mul(a, b);
        for x in 0..4 {
            set(0, x, x, one);
            set(x, 0, x, one);
        }
        set(1, 1, 0, a);
        set(2, 2, 0, b);
        set(3, 3, 0, r.neg(ab));
        set(1, 2, 3, one);
        set(2, 1, 3, r.neg(one));
        set(1, 3, 2, a);
        set(3, 1, 2, r.neg(a));
        set(2, 3, 1, r.neg(b));
        set(3, 2, 1, b);
        Self::from_dense(base, 4, &g, 0)
    }

    pub fn base(&self) -> &RingSpec {
        &self.base
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn unit(&self) -> AlgebraElem {
        AlgebraElem(self.unit.clone())
    }

    pub fn basis(&self, i: usize) -> AlgebraElem {
        let mut v = vec![self.base.zero(); self.rank];
        v[i] = self.base.one();
        AlgebraElem(v)
    }

    /// Dense structure constants, `gamma[(i * rank + j) * rank + k]`.
    pub fn dense(&self) -> Vec<RingElem> {
        let r = self.rank;
        let mut g = vec![self.base.zero(); r * r * r];
        for (ij, terms) in self.products.iter().enumerate() {
            for &(k, c) in terms {
                g[ij * r + k] = c;
            }
        }
        g
    }

    pub fn mul(&self, x: &AlgebraElem, y: &AlgebraElem) -> AlgebraElem {
        let r = &self.base;
        let n = self.rank;
        let mut out = vec![r.zero(); n];
        for (i, &xi) in x.0.iter().enumerate() {
            if r.is_zero(xi) {
                continue;
            }
            for (j, &yj) in y.0.iter().enumerate() {
                if r.is_zero(yj) {
                    continue;
                }
                let xy = r.mul(xi, yj);
                for &(k, g) in &self.products[i * n + j] {
                    out[k] = r.add(out[k], r.mul(xy, g));
                }
            }
        }
        AlgebraElem(out)
    }

    /// Matrix of left multiplication by `x`; column `j` holds `x e_j`.
    pub fn left_matrix(&self, x: &AlgebraElem) -> RingMatrix {
        let cols: Vec<Vec<RingElem>> = (0..self.rank).map(|j| self.mul(x, &self.basis(j)).0).collect();
        RingMatrix::from_columns(&self.base, &cols).expect("square")
    }

    /// Builds the `r^2 x r^2` matrix of `x (x) y -> (z -> x z y)` on basis
    /// pairs and tests whether its determinant is a unit.
    pub fn azumaya_verify(&self) -> AzumayaReport {
        let r = self.rank;
        let size = r * r;
        let mut m = RingMatrix::zeros(&self.base, size, size);
        for i in 0..r {
            let ei = self.basis(i);
            for k in 0..r {
                let eik = self.mul(&ei, &self.basis(k));
                for j in 0..r {
                    let v = self.mul(&eik, &self.basis(j));
                    for (l, c) in v.0.iter().enumerate() {
                        m.set(l * r + k, i * r + j, *c);
                    }
                }
            }
        }
        let det = m.det().expect("square");
        AzumayaReport { is_azumaya: self.base.is_unit(det), determinant: self.base.format(det), matrix_size: size }
    }

    /// A basis of the center, solving `x e_i - e_i x = 0` for all `i`.
    pub fn center_basis(&self) -> Result<Vec<AlgebraElem>> {
        let r = self.rank;
        let b = &self.base;
        let mut m = RingMatrix::zeros(b, r * r, r);
        for j in 0..r {
            let ej = self.basis(j);
            for i in 0..r {
                let ei = self.basis(i);
                let left = self.mul(&ej, &ei);
                let right = self.mul(&ei, &ej);
                for k in 0..r {
                    m.set(i * r + k, j, b.sub(left.0[k], right.0[k]));
                }
            }
        }
        Ok(m.kernel()?.into_iter().map(AlgebraElem).collect())
    }

    /// The same algebra on the basis `e'_j = sum_i P[i][j] e_i`.
    pub fn change_basis(&self, p: &RingMatrix) -> Result<Self> {
        let pinv = p.invert()?;
        let r = self.rank;
        let newb: Vec<AlgebraElem> = (0..r).map(|j| AlgebraElem(p.column(j))).collect();
        let mut gamma = vec![self.base.zero(); r * r * r];
        for a in 0..r {
            for b in 0..r {
                let prod = self.mul(&newb[a], &newb[b]);
                let coords = pinv.mul_vec(&prod.0)?;
                gamma[(a * r + b) * r..(a * r + b + 1) * r].copy_from_slice(&coords);
            }
        }
        let unit = pinv.mul_vec(&self.unit)?;
        Self::from_dense_with_unit(&self.base, r, &gamma, unit)
    }

    /// Scalar extension along a ring map `base -> target`.
    pub fn base_change(&self, target: &RingSpec, embed: &dyn Fn(RingElem) -> RingElem) -> Self {
        Self {
            base: target.clone(),
            rank: self.rank,
            products: self
                .products
                .iter()
                .map(|t| t.iter().map(|&(k, c)| (k, embed(c))).filter(|(_, c)| !target.is_zero(*c)).collect())
                .collect(),
            unit: self.unit.iter().map(|c| embed(*c)).collect(),
        }
    }
}

/// The center of an Azumaya algebra: the base itself, or a quadratic etale
/// extension `R[sqrt(s)]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Center {
    Base(RingSpec),
    Etale(QuadraticEtale),
}

impl Center {
    pub fn base(&self) -> &RingSpec {
        match self {
            Center::Base(r) => r,
            Center::Etale(c) => c.base(),
        }
    }

    /// The ring structure of the center.
    pub fn ring(&self) -> &RingSpec {
        match self {
            Center::Base(r) => r,
            Center::Etale(c) => c.ring(),
        }
    }

    /// Rank of the center over the base.
    pub fn rank(&self) -> usize {
        match self {
            Center::Base(_) => 1,
            Center::Etale(_) => 2,
        }
    }

    pub fn etale(&self) -> Option<&QuadraticEtale> {
        match self {
            Center::Base(_) => None,
            Center::Etale(c) => Some(c),
        }
    }

    /// The standard involution on the center (identity for the base).
    pub fn sigma(&self, c: EtaleElem) -> EtaleElem {
        match self {
            Center::Base(_) => c,
            Center::Etale(e) => e.sigma(c),
        }
    }

    /// `c * sigma(c)^{-1}`.
    pub fn one_minus_sigma(&self, c: EtaleElem) -> Option<EtaleElem> {
        let r = self.ring();
        Some(r.mul(c, r.inv(self.sigma(c))?))
    }

    pub fn embed(&self, r: RingElem) -> EtaleElem {
        match self {
            Center::Base(_) => r,
            Center::Etale(c) => c.embed(r),
        }
    }

    /// Base coordinates of a center element: `[c]` or `[x, y]`.
    fn base_coords(&self, c: EtaleElem) -> Vec<RingElem> {
        match self {
            Center::Base(_) => vec![c],
            Center::Etale(e) => {
                let (x, y) = e.parts(c);
                vec![x, y]
            }
        }
    }

    fn from_base_coords(&self, v: &[RingElem]) -> EtaleElem {
        match self {
            Center::Base(_) => v[0],
            Center::Etale(e) => e.make(v[0], v[1]),
        }
    }

    fn base_change(&self, target: &RingSpec, embed: &dyn Fn(RingElem) -> RingElem) -> Result<Self> {
        Ok(match self {
            Center::Base(_) => Center::Base(target.clone()),
            Center::Etale(c) => Center::Etale(QuadraticEtale::new(target, embed(c.s()))?),
        })
    }
}

impl fmt::Display for Center {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Center::Base(r) => write!(f, "{r}"),
            Center::Etale(c) => write!(f, "({})[sqrt({})]", c.base(), c.base().format(c.s())),
        }
    }
}

/// The two ways an algebra can be given.
#[derive(Clone, Debug)]
pub enum AlgebraPresentation {
    /// `M_n(C)` over the base of `C`.
    SplitMatrix { degree: usize, center: Center },
    /// An explicit structure table over the base.
    Table(StructureTable),
}

impl AlgebraPresentation {
    pub fn to_table(&self) -> Result<StructureTable> {
        match self {
            AlgebraPresentation::SplitMatrix { degree, center } => Ok(split_table(center, *degree)?.0),
            AlgebraPresentation::Table(t) => Ok(t.clone()),
        }
    }

    /// The Azumaya test over the base ring.
    pub fn azumaya_verify(&self) -> Result<AzumayaReport> {
        Ok(self.to_table()?.azumaya_verify())
    }

    pub fn center(&self) -> Result<Vec<AlgebraElem>> {
        self.to_table()?.center_basis()
    }
}

/// Table for `M_n(C)` on the basis `E_ij * w_l` (index `(i*n + j)*k + l`),
/// `w = (1)` or `(1, sqrt(s))`; also returns the coordinates of `sqrt(s)*I`.
fn split_table(center: &Center, n: usize) -> Result<(StructureTable, Option<Vec<RingElem>>)> {
    if n == 0 {
        return Err(Error::DimensionMismatch("degree must be positive".into()));
    }
    let base = center.base();
    let k = center.rank();
    let rank = n * n * k;
    let mut gamma = vec![base.zero(); rank * rank * rank];
    // w_a * w_b = sum_l coeff * w_l
    let wmul = |a: usize, b: usize| -> Vec<(usize, RingElem)> {
        match (center, a, b) {
            (_, 0, x) | (_, x, 0) => vec![(x, base.one())],
            (Center::Etale(c), 1, 1) => vec![(0, c.s())],
            _ => unreachable!(),
        }
    };
    let idx = |i: usize, j: usize, l: usize| (i * n + j) * k + l;
    for i in 0..n {
        for j in 0..n {
            for a in 0..k {
                for l in 0..n {
                    for b in 0..k {
                        for (w, c) in wmul(a, b) {
                            let p = idx(i, j, a);
                            let q = idx(j, l, b);
                            gamma[(p * rank + q) * rank + idx(i, l, w)] = c;
                        }
                    }
                }
            }
        }
    }
    let mut unit = vec![base.zero(); rank];
    for i in 0..n {
        unit[idx(i, i, 0)] = base.one();
    }
    let table = StructureTable::from_dense_with_unit(base, rank, &gamma, unit)?;
    let gen = match center {
        Center::Base(_) => None,
        Center::Etale(_) => {
            let mut z = vec![base.zero(); rank];
            for i in 0..n {
                z[idx(i, i, 1)] = base.one();
            }
            Some(z)
        }
    };
    Ok((table, gen))
}

/// A free `C`-basis `f_1..f_N` of an algebra with etale center, stored as the
/// inverse of the base-coordinate matrix `[f | z f]`.
#[derive(Clone, Debug)]
struct CenterFrame {
    basis: Vec<AlgebraElem>,
    inverse: RingMatrix,
}

/// An Azumaya algebra over its center, stored as a structure table over the
/// base ring.
#[derive(Clone, Debug)]
pub struct Algebra {
    table: StructureTable,
    center: Center,
    center_gen: Option<AlgebraElem>,
    degree: usize,
    split_degree: Option<usize>,
    frame: Option<CenterFrame>,
    label: String,
}

impl Algebra {
    pub fn new(presentation: &AlgebraPresentation) -> Result<Self> {
        match presentation {
            AlgebraPresentation::SplitMatrix { degree, center } => Self::split(center, *degree),
            AlgebraPresentation::Table(t) => Self::from_table(t),
        }
    }

    /// `M_n(C)`, keeping the split view.
    pub fn split(center: &Center, n: usize) -> Result<Self> {
        let (table, gen) = split_table(center, n)?;
        let center_gen = gen.map(AlgebraElem);
        let mut alg = Self {
            table,
            center: center.clone(),
            center_gen,
            degree: n,
            split_degree: Some(n),
            frame: None,
            label: format!("M_{n}({center})"),
        };
        alg.frame = alg.compute_frame()?;
        Ok(alg)
    }

    /// An algebra given only by its structure table: the center is computed
    /// and must be the base or a quadratic etale extension of it.
    pub fn from_table(table: &StructureTable) -> Result<Self> {
        let basis = table.center_basis()?;
        let base = table.base().clone();
        let one = table.unit();
        let (center, center_gen) = match basis.len() {
            1 => (Center::Base(base.clone()), None),
            2 => {
                let c = basis
                    .iter()
                    .find(|c| is_unimodular(&base, &[one.0.clone(), c.0.clone()]))
                    .ok_or_else(|| Error::UnsupportedCenter("center is not free on 1 and a generator".into()))?
                    .clone();
                // c^2 = alpha + beta c; shift to z = c - beta/2 so z^2 = s.
                let c2 = table.mul(&c, &c);
                let rel = RingMatrix::from_columns(&base, &[one.0.clone(), c.0.clone(), c2.0.clone()])?.kernel()?;
                let rel = rel
                    .into_iter()
                    .find(|v| base.is_unit(v[2]))
                    .ok_or_else(|| Error::UnsupportedCenter("generator has no quadratic relation".into()))?;
                let lead = base.inv(rel[2]).unwrap();
                let alpha = base.neg(base.mul(rel[0], lead));
                let beta = base.neg(base.mul(rel[1], lead));
                let half = base.inv(base.from_int(2)).unwrap();
                let shift = base.mul(beta, half);
                let z = AlgebraElem(c.0.iter().zip(&one.0).map(|(ci, oi)| base.sub(*ci, base.mul(shift, *oi))).collect());
                let s = base.add(alpha, base.mul(shift, shift));
                if !base.is_unit(s) {
                    return Err(Error::UnsupportedCenter(format!(
                        "center is R[z]/(z^2 - {}) with a non-unit discriminant",
                        base.format(s)
                    )));
                }
                (Center::Etale(QuadraticEtale::new(&base, s)?), Some(z))
            }
            k => return Err(Error::UnsupportedCenter(format!("center has rank {k}"))),
        };
        let k = center.rank();
        let over_center = table.rank() / k;
        let degree = (1..=over_center).find(|d| d * d >= over_center).unwrap_or(1);
        if table.rank() % k != 0 || degree * degree != over_center {
            return Err(Error::UnsupportedCenter(format!("rank {} over the base is not {k} times a square", table.rank())));
        }
        let mut alg = Self {
            table: table.clone(),
            center,
            center_gen,
            degree,
            split_degree: None,
            frame: None,
            label: format!("table(rank {})", table.rank()),
        };
        alg.frame = alg.compute_frame()?;
        Ok(alg)
    }

    pub fn quaternion(base: &RingSpec, a: RingElem, b: RingElem) -> Result<Self> {
        let label = format!("({},{})/{base}", base.format(a), base.format(b));
        Ok(Self::from_table(&StructureTable::quaternion(base, a, b)?)?.with_label(label))
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    fn compute_frame(&self) -> Result<Option<CenterFrame>> {
        let Some(z) = &self.center_gen else {
            return Ok(None);
        };
        let base = self.base();
        let r = self.rank();
        let want = r / 2;
        let mut candidates: Vec<AlgebraElem> = (0..r).map(|i| self.table.basis(i)).collect();
        for i in 0..r {
            for j in i + 1..r {
                candidates.push(self.add(&self.table.basis(i), &self.table.basis(j)));
            }
        }
        let mut chosen: Vec<AlgebraElem> = Vec::new();
        for cand in candidates {
            if chosen.len() == want {
                break;
            }
            let zc = self.mul(z, &cand);
            let mut vecs: Vec<Vec<RingElem>> = chosen.iter().map(|f| f.0.clone()).collect();
            vecs.extend(chosen.iter().map(|f| self.mul(z, f).0));
            vecs.push(cand.0.clone());
            vecs.push(zc.0);
            if is_unimodular(base, &vecs) {
                chosen.push(cand);
            }
        }
        if chosen.len() != want {
            return Err(Error::UnsupportedCenter("no free basis over the center found".into()));
        }
        let mut cols: Vec<Vec<RingElem>> = chosen.iter().map(|f| f.0.clone()).collect();
        cols.extend(chosen.iter().map(|f| self.mul(z, f).0));
        let inverse = RingMatrix::from_columns(base, &cols)?.invert()?;
        Ok(Some(CenterFrame { basis: chosen, inverse }))
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn table(&self) -> &StructureTable {
        &self.table
    }

    pub fn base(&self) -> &RingSpec {
        self.table.base()
    }

    pub fn center(&self) -> &Center {
        &self.center
    }

    /// Rank over the base ring.
    pub fn rank(&self) -> usize {
        self.table.rank()
    }

    /// Degree `n`: the rank over the center is `n^2`.
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn split_degree(&self) -> Option<usize> {
        self.split_degree
    }

    /// Coordinates of the center generator `sqrt(s)`, for etale centers.
    pub fn center_generator(&self) -> Option<&AlgebraElem> {
        self.center_gen.as_ref()
    }

    /// The same algebra given only by its structure table.
    pub fn to_table_form(&self) -> Result<Self> {
        Ok(Self::from_table(&self.table)?.with_label(format!("{} as table", self.label)))
    }

    /// Number of elements, `|R|^rank`, when it fits in a `u64`.
    pub fn element_count(&self) -> Option<u64> {
        (self.base().size() as u64).checked_pow(self.rank() as u32)
    }

    /// All elements in lexicographic coordinate order.
    pub fn elements(&self) -> impl Iterator<Item = AlgebraElem> + '_ {
        let q = self.base().size() as u64;
        let r = self.rank();
        let count = self.element_count().expect("algebra too large to enumerate");
        (0..count).map(move |mut idx| {
            let mut v = vec![RingElem(0); r];
            for slot in v.iter_mut().rev() {
                *slot = RingElem((idx % q) as u32);
                idx /= q;
            }
            AlgebraElem(v)
        })
    }

    pub fn units(&self) -> Vec<AlgebraElem> {
        self.elements().filter(|x| self.is_unit(x)).collect()
    }

    pub fn random_element<G: Rng + ?Sized>(&self, rng: &mut G) -> AlgebraElem {
        let q = self.base().size();
        AlgebraElem((0..self.rank()).map(|_| RingElem(rng.gen_range(0..q))).collect())
    }

    pub fn random_unit<G: Rng + ?Sized>(&self, rng: &mut G) -> AlgebraElem {
        loop {
            let x = self.random_element(rng);
            if self.is_unit(&x) {
                return x;
            }
        }
    }

    pub fn zero(&self) -> AlgebraElem {
        AlgebraElem(vec![self.base().zero(); self.rank()])
    }

    pub fn one(&self) -> AlgebraElem {
        self.table.unit()
    }

    pub fn basis(&self, i: usize) -> AlgebraElem {
        self.table.basis(i)
    }

    pub fn add(&self, x: &AlgebraElem, y: &AlgebraElem) -> AlgebraElem {
        let r = self.base();
        AlgebraElem(x.0.iter().zip(&y.0).map(|(a, b)| r.add(*a, *b)).collect())
    }

    pub fn sub(&self, x: &AlgebraElem, y: &AlgebraElem) -> AlgebraElem {
        let r = self.base();
        AlgebraElem(x.0.iter().zip(&y.0).map(|(a, b)| r.sub(*a, *b)).collect())
    }

    pub fn neg(&self, x: &AlgebraElem) -> AlgebraElem {
        let r = self.base();
        AlgebraElem(x.0.iter().map(|a| r.neg(*a)).collect())
    }

    pub fn scale(&self, c: RingElem, x: &AlgebraElem) -> AlgebraElem {
        let r = self.base();
        AlgebraElem(x.0.iter().map(|a| r.mul(c, *a)).collect())
    }

    pub fn mul(&self, x: &AlgebraElem, y: &AlgebraElem) -> AlgebraElem {
        self.table.mul(x, y)
    }

    pub fn pow(&self, x: &AlgebraElem, k: u64) -> AlgebraElem {
        (0..k).fold(self.one(), |acc, _| self.mul(&acc, x))
    }

    /// Product computed without the structure table: matrix multiplication
    /// over the center for split algebras, otherwise a regular-representation
    /// matrix-vector product.
    pub fn mul_independent(&self, x: &AlgebraElem, y: &AlgebraElem) -> AlgebraElem {
        match self.split_degree {
            Some(_) => {
                let p = self.to_matrix(x).mul(&self.to_matrix(y)).expect("square");
                self.from_matrix(&p)
            }
            None => AlgebraElem(self.table.left_matrix(x).mul_vec(&y.0).expect("square")),
        }
    }

    /// The center element `c` as an algebra element.
    pub fn embed_center(&self, c: EtaleElem) -> AlgebraElem {
        match (&self.center, &self.center_gen) {
            (Center::Base(_), _) => self.scale(c, &self.one()),
            (Center::Etale(e), Some(z)) => {
                let (x, y) = e.parts(c);
                self.add(&self.scale(x, &self.one()), &self.scale(y, z))
            }
            _ => unreachable!("etale center without generator"),
        }
    }

    /// `c * x` for a center element `c`.
    pub fn center_mul(&self, c: EtaleElem, x: &AlgebraElem) -> AlgebraElem {
        self.mul(&self.embed_center(c), x)
    }

    /// The split-view matrix over the center of `x`.
    ///
    /// Panics if the algebra has no split view.
    pub fn to_matrix(&self, x: &AlgebraElem) -> RingMatrix {
        let n = self.split_degree.expect("split view");
        let k = self.center.rank();
        let entries = (0..n * n).map(|q| self.center.from_base_coords(&x.0[q * k..(q + 1) * k])).collect();
        RingMatrix::new(self.center.ring(), n, n, entries).expect("n x n")
    }

    /// Inverse of [`Algebra::to_matrix`].
    pub fn from_matrix(&self, m: &RingMatrix) -> AlgebraElem {
        AlgebraElem(m.entries().iter().flat_map(|c| self.center.base_coords(*c)).collect())
    }

    pub fn is_unit(&self, x: &AlgebraElem) -> bool {
        match self.split_degree {
            Some(_) => {
                let det = self.to_matrix(x).det().expect("square");
                self.center.ring().is_unit(det)
            }
            None => {
                let det = self.table.left_matrix(x).det().expect("square");
                self.base().is_unit(det)
            }
        }
    }

    pub fn inverse(&self, x: &AlgebraElem) -> Result<AlgebraElem> {
        match self.split_degree {
            Some(_) => Ok(self.from_matrix(&self.to_matrix(x).invert()?)),
            None => {
                // Cayley-Hamilton for the regular representation:
                // x^{-1} = -c_0^{-1} (x^{r-1} + c_{r-1} x^{r-2} + ... + c_1).
                let b = self.base();
                let cp = self.table.left_matrix(x).char_poly()?;
                let c0inv = b.inv(cp.coeff(0)).ok_or_else(|| Error::NotAUnit(format!("{:?}", x.0)))?;
                let mut acc = self.zero();
                for k in (1..=self.rank()).rev() {
                    acc = self.add(&self.mul(&acc, x), &self.scale(cp.coeff(k), &self.one()));
                }
                Ok(self.scale(b.neg(c0inv), &acc))
            }
        }
    }

    /// Coordinates of `y` over the center in the free basis of the frame.
    fn center_coords(&self, frame: &CenterFrame, y: &AlgebraElem) -> Vec<EtaleElem> {
        let w = frame.inverse.mul_vec(&y.0).expect("square");
        let n = frame.basis.len();
        (0..n).map(|k| self.center.from_base_coords(&[w[k], w[n + k]])).collect()
    }

    /// Matrix over the center of left multiplication by `x`, in the frame
    /// basis (or the base basis when the center is the base).
    pub fn left_matrix_over_center(&self, x: &AlgebraElem) -> RingMatrix {
        match &self.frame {
            None => self.table.left_matrix(x),
            Some(frame) => {
                let cols: Vec<Vec<EtaleElem>> = frame.basis.iter().map(|f| self.center_coords(frame, &self.mul(x, f))).collect();
                RingMatrix::from_columns(self.center.ring(), &cols).expect("square")
            }
        }
    }

    /// The reduced characteristic polynomial over the center: the matrix
    /// characteristic polynomial in the split view, otherwise the `n`-th
    /// root of the characteristic polynomial of left multiplication over the
    /// center (requires `n` invertible).
    pub fn reduced_char_poly(&self, x: &AlgebraElem) -> Result<Poly> {
        if self.split_degree.is_some() {
            return self.to_matrix(x).char_poly();
        }
        self.reduced_char_poly_by_root(x)
    }

    /// The root-extraction route, available for every presentation.
    pub fn reduced_char_poly_by_root(&self, x: &AlgebraElem) -> Result<Poly> {
        let regular = self.left_matrix_over_center(x).char_poly()?;
        regular.nth_root_monic(self.degree)
    }

    /// Reduced norm `(-1)^n chr_x(0)`, an element of the center.
    pub fn nrd(&self, x: &AlgebraElem) -> Result<EtaleElem> {
        let c = self.center.ring();
        if self.split_degree.is_some() {
            return self.to_matrix(x).det();
        }
        let chr = self.reduced_char_poly(x)?;
        let c0 = chr.coeff(0);
        Ok(if self.degree % 2 == 0 { c0 } else { c.neg(c0) })
    }

    /// The Azumaya test over the center: over the base when the center is
    /// the base, otherwise the canonical map built on a free basis over `C`.
    pub fn azumaya_verify_over_center(&self) -> AzumayaReport {
        let Some(frame) = &self.frame else {
            return self.table.azumaya_verify();
        };
        let c = self.center.ring();
        let n = frame.basis.len();
        let size = n * n;
        let mut m = RingMatrix::zeros(c, size, size);
        for i in 0..n {
            for k in 0..n {
                let fik = self.mul(&frame.basis[i], &frame.basis[k]);
                for j in 0..n {
                    let v = self.center_coords(frame, &self.mul(&fik, &frame.basis[j]));
                    for (l, e) in v.into_iter().enumerate() {
                        m.set(l * n + k, i * n + j, e);
                    }
                }
            }
        }
        let det = m.det().expect("square");
        AzumayaReport { is_azumaya: c.is_unit(det), determinant: c.format(det), matrix_size: size }
    }

    /// Scalar extension `A_T = A (x)_R T` along `embed: R -> T`.
    pub fn base_change(&self, target: &RingSpec, embed: &dyn Fn(RingElem) -> RingElem) -> Result<Self> {
        let table = self.table.base_change(target, embed);
        let center = self.center.base_change(target, embed)?;
        let center_gen = self.center_gen.as_ref().map(|z| AlgebraElem(z.0.iter().map(|c| embed(*c)).collect()));
        let frame = self.frame.as_ref().map(|f| CenterFrame {
            basis: f.basis.iter().map(|b| AlgebraElem(b.0.iter().map(|c| embed(*c)).collect())).collect(),
            inverse: f.inverse.map(target, embed),
        });
        Ok(Self {
            table,
            center,
            center_gen,
            degree: self.degree,
            split_degree: self.split_degree,
            frame,
            label: format!("{} (x) {target}", self.label),
        })
    }

    /// The same algebra on a new basis (columns of `p`), as a table.
    pub fn change_basis(&self, p: &RingMatrix) -> Result<Self> {
        Self::from_table(&self.table.change_basis(p)?)
    }

    pub fn format(&self, x: &AlgebraElem) -> String {
        let parts: Vec<String> = x.0.iter().map(|c| self.base().format(*c)).collect();
        format!("[{}]", parts.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn f(p: u32) -> RingSpec {
        RingSpec::prime_field(p).unwrap()
    }

    fn gaussian(p: u32) -> Center {
        let r = f(p);
        Center::Etale(QuadraticEtale::new(&r, r.from_int(-1)).unwrap())
    }

    #[test]
    fn azumaya_examples() {
        let m2 = Algebra::split(&Center::Base(f(3)), 2).unwrap();
        assert!(m2.table().azumaya_verify().is_azumaya);
        let r5 = f(5);
        let q = StructureTable::quaternion(&r5, r5.from_int(-1), r5.from_int(-1)).unwrap();
        let report = q.azumaya_verify();
        assert!(report.is_azumaya);
        assert_eq!(report.matrix_size, 16);
        // F_3[x]/(x^2) as a rank-2 table.
        let r3 = f(3);
        let z = r3.zero();
        let o = r3.one();
        let g = vec![o, z, z, o, z, o, z, z];
        let dual = StructureTable::from_dense(&r3, 2, &g, 0).unwrap();
        let report = dual.azumaya_verify();
        assert!(!report.is_azumaya);
        assert_eq!(report.determinant, "0");
        assert!(Algebra::from_table(&dual).is_err());
    }

    #[test]
    fn centers() {
        let m2 = AlgebraPresentation::SplitMatrix { degree: 2, center: Center::Base(f(3)) };
        let c = m2.center().unwrap();
        assert_eq!(c.len(), 1);
        let r5 = f(5);
        let q = AlgebraPresentation::Table(StructureTable::quaternion(&r5, r5.from_int(-1), r5.from_int(-1)).unwrap());
        let c = q.center().unwrap();
        assert_eq!(c.len(), 1);
        assert_eq!(c[0].0, vec![r5.one(), r5.zero(), r5.zero(), r5.zero()]);
        let u = AlgebraPresentation::SplitMatrix { degree: 2, center: gaussian(3) };
        assert_eq!(u.center().unwrap().len(), 2);
        // Center elements commute with every basis element.
        let alg = Algebra::new(&u).unwrap();
        for z in u.center().unwrap() {
            for i in 0..alg.rank() {
                let e = alg.basis(i);
                assert_eq!(alg.mul(&z, &e), alg.mul(&e, &z));
            }
        }
    }

    #[test]
    fn table_recovers_etale_center() {
        let alg = Algebra::split(&gaussian(3), 2).unwrap();
        let t = alg.to_table_form().unwrap();
        assert_eq!(t.degree(), 2);
        let e = t.center().etale().unwrap();
        assert_eq!(e.s(), f(3).from_int(-1));
        assert!(t.azumaya_verify_over_center().is_azumaya);
        assert!(alg.azumaya_verify_over_center().is_azumaya);
        // Over the base, a unitary algebra is not Azumaya.
        assert!(!alg.table().azumaya_verify().is_azumaya);
    }

    #[test]
    fn reduced_char_poly_examples() {
        let r7 = f(7);
        let m2 = Algebra::split(&Center::Base(r7.clone()), 2).unwrap();
        let diag = m2.from_matrix(&RingMatrix::from_ints(&r7, 2, 2, &[1, 0, 0, 2]).unwrap());
        assert_eq!(m2.reduced_char_poly(&diag).unwrap(), Poly::from_ints(&r7, &[2, 4, 1]));
        let one = m2.one();
        assert_eq!(m2.reduced_char_poly(&one).unwrap(), Poly::linear(&r7, r7.one()).pow(2));

        let r5 = f(5);
        let q = Algebra::quaternion(&r5, r5.from_int(-1), r5.from_int(-1)).unwrap();
        let i = q.basis(1);
        assert_eq!(q.reduced_char_poly(&i).unwrap(), Poly::from_ints(&r5, &[1, 0, 1]));
        let x = AlgebraElem(vec![r5.one(); 4]);
        assert_eq!(q.nrd(&x).unwrap(), r5.from_int(4));
        // Direct route: x * conj(x) = (1 + 1 + 1 + 1) * 1.
        let conj = AlgebraElem(vec![r5.one(), r5.from_int(-1), r5.from_int(-1), r5.from_int(-1)]);
        assert_eq!(q.mul(&x, &conj), q.scale(r5.from_int(4), &q.one()));
    }

    #[test]
    fn nrd_is_det_in_split_form_and_multiplicative() {
        let alg = Algebra::split(&gaussian(3), 2).unwrap();
        let table = alg.to_table_form().unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..200 {
            let x = alg.random_unit(&mut rng);
            let y = alg.random_unit(&mut rng);
            let xy = alg.mul(&x, &y);
            let c = alg.center().ring();
            assert_eq!(alg.nrd(&xy).unwrap(), c.mul(alg.nrd(&x).unwrap(), alg.nrd(&y).unwrap()));
            assert_eq!(alg.nrd(&x).unwrap(), alg.to_matrix(&x).det().unwrap());
            // The table route agrees after embedding both into A.
            assert_eq!(alg.embed_center(alg.nrd(&x).unwrap()), table.embed_center(table.nrd(&x).unwrap()));
            assert_eq!(alg.mul(&x, &alg.inverse(&x).unwrap()), alg.one());
            assert_eq!(table.mul(&x, &table.inverse(&x).unwrap()), table.one());
            assert_eq!(alg.mul_independent(&x, &y), xy);
        }
    }

    #[test]
    fn change_basis_keeps_degree() {
        let r5 = f(5);
        let q = Algebra::quaternion(&r5, r5.from_int(2), r5.from_int(3)).unwrap();
        let p = RingMatrix::from_ints(&r5, 4, 4, &[1, 1, 0, 0, 0, 1, 2, 0, 0, 0, 1, 3, 0, 0, 0, 1]).unwrap();
        let q2 = q.change_basis(&p).unwrap();
        assert_eq!(q2.degree(), 2);
        assert!(q2.table().azumaya_verify().is_azumaya);
    }
}
