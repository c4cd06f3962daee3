//! Involutions on algebras: base-linear anti-automorphisms of order two,
//! stored as matrices on the algebra's base-ring basis, with the standard
//! constructions on `M_n(C)` and their classification by the rank of the
//! symmetric elements.

use std::fmt;

use crate::algebra::{Algebra, AlgebraElem, Center};
use crate::error::{Error, Result};
use crate::etale::EtaleElem;
use crate::matrix::RingMatrix;
use crate::ring::RingElem;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum InvolutionKind {
    Orthogonal,
    Symplectic,
    Unitary,
}

impl fmt::Display for InvolutionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            InvolutionKind::Orthogonal => "orthogonal",
            InvolutionKind::Symplectic => "symplectic",
            InvolutionKind::Unitary => "unitary",
        })
    }
}

/// An algebra together with a validated involution.
#[derive(Clone, Debug)]
pub struct AlgebraWithInvolution {
    algebra: Algebra,
    sigma: RingMatrix,
    kind: InvolutionKind,
    label: String,
}

impl AlgebraWithInvolution {
    /// Validates `sigma` (given by its matrix on the base basis) and
    /// classifies it.
    pub fn new(algebra: Algebra, sigma: RingMatrix) -> Result<Self> {
        let kind = involution_kind(&algebra, &sigma)?;
        let label = format!("{} with {kind} involution", algebra.label());
        Ok(Self { algebra, sigma, kind, label })
    }

    /// Builds the matrix of `f` from its values on the basis.
    pub fn from_fn(algebra: Algebra, f: impl Fn(&AlgebraElem) -> AlgebraElem) -> Result<Self> {
        let cols: Vec<Vec<RingElem>> = (0..algebra.rank()).map(|i| f(&algebra.basis(i)).0).collect();
        let sigma = RingMatrix::from_columns(algebra.base(), &cols)?;
        Self::new(algebra, sigma)
    }

    fn from_matrix_map(algebra: Algebra, f: impl Fn(&RingMatrix) -> Result<RingMatrix>) -> Result<Self> {
        if algebra.split_degree().is_none() {
            return Err(Error::Precondition("involution needs the split matrix view".into()));
        }
        let mut cols = Vec::with_capacity(algebra.rank());
        for i in 0..algebra.rank() {
            let image = f(&algebra.to_matrix(&algebra.basis(i)))?;
            cols.push(algebra.from_matrix(&image).0);
        }
        let sigma = RingMatrix::from_columns(algebra.base(), &cols)?;
        Self::new(algebra, sigma)
    }

    /// `X -> X^t` on `M_n(C)`.
    pub fn transpose(algebra: Algebra) -> Result<Self> {
        Self::from_matrix_map(algebra, |x| Ok(x.transpose()))
    }

    /// `X -> g^{-1} X^t g` for `g` symmetric or skew-symmetric with unit
    /// determinant (orthogonal resp. symplectic adjoint involutions).
    pub fn adjoint(algebra: Algebra, g: &RingMatrix) -> Result<Self> {
        let c = algebra.center().ring().clone();
        let gt = g.transpose();
        if gt != *g && gt != g.scale(c.neg(c.one())) {
            return Err(Error::NotSymmetricOrSkew);
        }
        let ginv = g.invert().map_err(|_| Error::SingularForm)?;
        Self::from_matrix_map(algebra, |x| ginv.mul(&x.transpose())?.mul(g))
    }

    /// `X -> h^{-1} sigma(X)^t h` for `h` hermitian (`sigma(h)^t = h`) with
    /// unit determinant; requires an etale center.
    pub fn hermitian(algebra: Algebra, h: &RingMatrix) -> Result<Self> {
        let Center::Etale(e) = algebra.center().clone() else {
            return Err(Error::Precondition("hermitian involutions need an etale center".into()));
        };
        let bar = |x: &RingMatrix| x.map(e.ring(), |v| e.sigma(v));
        if bar(h).transpose() != *h {
            return Err(Error::NotHermitian);
        }
        let hinv = h.invert().map_err(|_| Error::SingularForm)?;
        Self::from_matrix_map(algebra, |x| hinv.mul(&bar(x).transpose())?.mul(h))
    }

    /// `X -> sigma(X)^t`.
    pub fn conjugate_transpose(algebra: Algebra) -> Result<Self> {
        let n = algebra.split_degree().ok_or_else(|| Error::Precondition("needs the split view".into()))?;
        let id = RingMatrix::identity(algebra.center().ring(), n);
        Self::hermitian(algebra, &id)
    }

    /// The canonical involution `x -> Trd(x) - x` of a degree-2 algebra
    /// (quaternion conjugation for quaternion tables).
    pub fn canonical(algebra: Algebra) -> Result<Self> {
        if algebra.degree() != 2 {
            return Err(Error::Precondition(format!("canonical involution needs degree 2, got {}", algebra.degree())));
        }
        let c = algebra.center().ring().clone();
        let mut cols = Vec::with_capacity(algebra.rank());
        for i in 0..algebra.rank() {
            let e = algebra.basis(i);
            let trd = c.neg(algebra.reduced_char_poly(&e)?.coeff(1));
            cols.push(algebra.sub(&algebra.embed_center(trd), &e).0);
        }
        let sigma = RingMatrix::from_columns(algebra.base(), &cols)?;
        Self::new(algebra, sigma)
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn center(&self) -> &Center {
        self.algebra.center()
    }

    pub fn kind(&self) -> InvolutionKind {
        self.kind
    }

    pub fn is_unitary(&self) -> bool {
        self.kind == InvolutionKind::Unitary
    }

    /// The matrix of the involution on the base basis.
    pub fn matrix(&self) -> &RingMatrix {
        &self.sigma
    }

    pub fn apply(&self, x: &AlgebraElem) -> AlgebraElem {
        AlgebraElem(self.sigma.mul_vec(&x.0).expect("square"))
    }

    /// The involution restricted to the center.
    pub fn sigma_center(&self, c: EtaleElem) -> EtaleElem {
        match self.kind {
            InvolutionKind::Unitary => self.center().sigma(c),
            _ => c,
        }
    }

    /// `x sigma(x) = 1`.
    pub fn is_unitary_elem(&self, x: &AlgebraElem) -> bool {
        self.algebra.mul(x, &self.apply(x)) == self.algebra.one()
    }

    /// Rank over the base of the symmetric elements `{x : sigma(x) = x}`.
    pub fn symmetric_rank(&self) -> Result<usize> {
        symmetric_rank(&self.algebra, &self.sigma)
    }

    /// The same algebra and involution on the basis given by the columns of
    /// `p`, re-encoded as a structure table.
    pub fn change_basis(&self, p: &RingMatrix) -> Result<Self> {
        let algebra = self.algebra.change_basis(p)?;
        let sigma = p.invert()?.mul(&self.sigma)?.mul(p)?;
        Self::new(algebra, sigma)
    }

    /// Scalar extension along `embed: R -> T`.
    pub fn base_change(&self, target: &crate::ring::RingSpec, embed: &dyn Fn(RingElem) -> RingElem) -> Result<Self> {
        let algebra = self.algebra.base_change(target, embed)?;
        let sigma = self.sigma.map(target, embed);
        Ok(Self { algebra, sigma, kind: self.kind, label: format!("{} (x) {target}", self.label) })
    }
}

fn symmetric_rank(algebra: &Algebra, sigma: &RingMatrix) -> Result<usize> {
    let id = RingMatrix::identity(algebra.base(), algebra.rank());
    Ok(sigma.sub(&id)?.kernel()?.len())
}

/// Checks the involution axioms and classifies `sigma`: unitary when it
/// moves the center, otherwise orthogonal or symplectic according to whether
/// the symmetric elements have rank `n(n+1)/2` or `n(n-1)/2` over the center.
pub fn involution_kind(algebra: &Algebra, sigma: &RingMatrix) -> Result<InvolutionKind> {
    let r = algebra.rank();
    if sigma.rows() != r || sigma.cols() != r {
        return Err(Error::DimensionMismatch(format!(
            "involution matrix is {}x{}, algebra rank {r}",
            sigma.rows(),
            sigma.cols()
        )));
    }
    let apply = |x: &AlgebraElem| AlgebraElem(sigma.mul_vec(&x.0).expect("square"));
    if sigma.mul(sigma)? != RingMatrix::identity(algebra.base(), r) {
        return Err(Error::NotAnInvolution("sigma^2 != id".into()));
    }
    let images: Vec<AlgebraElem> = (0..r).map(|i| apply(&algebra.basis(i))).collect();
    for i in 0..r {
        for j in 0..r {
            let lhs = apply(&algebra.mul(&algebra.basis(i), &algebra.basis(j)));
            let rhs = algebra.mul(&images[j], &images[i]);
            if lhs != rhs {
                return Err(Error::NotAnInvolution(format!("sigma(e_{i} e_{j}) != sigma(e_{j}) sigma(e_{i})")));
            }
        }
    }
    let k = algebra.center().rank();
    if let Some(z) = algebra.center_generator() {
        let sz = apply(z);
        if sz == algebra.neg(z) {
            return Ok(InvolutionKind::Unitary);
        }
        if sz != *z {
            return Err(Error::NotAnInvolution("sigma does not preserve the center".into()));
        }
    }
    let rank = symmetric_rank(algebra, sigma)?;
    let n = algebra.degree();
    if rank % k == 0 {
        let over_center = rank / k;
        if over_center == n * (n + 1) / 2 {
            return Ok(InvolutionKind::Orthogonal);
        }
        if over_center == n * (n - 1) / 2 {
            return Ok(InvolutionKind::Symplectic);
        }
    }
    Err(Error::Unclassifiable { rank, degree: n })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::etale::QuadraticEtale;
    use crate::ring::RingSpec;

    fn f3() -> RingSpec {
        RingSpec::prime_field(3).unwrap()
    }

    fn gaussian3() -> Center {
        let r = f3();
        Center::Etale(QuadraticEtale::new(&r, r.from_int(-1)).unwrap())
    }

    #[test]
    fn transpose_is_orthogonal() {
        for n in 1..=3 {
            let a = Algebra::split(&Center::Base(f3()), n).unwrap();
            let inv = AlgebraWithInvolution::transpose(a).unwrap();
            assert_eq!(inv.kind(), InvolutionKind::Orthogonal);
            assert_eq!(inv.symmetric_rank().unwrap(), n * (n + 1) / 2);
        }
    }

    #[test]
    fn symplectic_adjoint() {
        let r = f3();
        let a = Algebra::split(&Center::Base(r.clone()), 2).unwrap();
        let j = RingMatrix::from_ints(&r, 2, 2, &[0, 1, -1, 0]).unwrap();
        let inv = AlgebraWithInvolution::adjoint(a, &j).unwrap();
        assert_eq!(inv.kind(), InvolutionKind::Symplectic);
        assert_eq!(inv.symmetric_rank().unwrap(), 1);
    }

    #[test]
    fn adjoint_rejects_bad_forms() {
        let r = f3();
        let a = Algebra::split(&Center::Base(r.clone()), 2).unwrap();
        let g = RingMatrix::from_ints(&r, 2, 2, &[1, 1, 0, 1]).unwrap();
        assert_eq!(AlgebraWithInvolution::adjoint(a.clone(), &g).unwrap_err(), Error::NotSymmetricOrSkew);
        let g = RingMatrix::from_ints(&r, 2, 2, &[1, 1, 1, 1]).unwrap();
        assert_eq!(AlgebraWithInvolution::adjoint(a, &g).unwrap_err(), Error::SingularForm);
    }

    #[test]
    fn hermitian_involutions_are_unitary() {
        let c = gaussian3();
        let cr = c.ring().clone();
        let a = Algebra::split(&c, 2).unwrap();
        let ct = AlgebraWithInvolution::conjugate_transpose(a.clone()).unwrap();
        assert_eq!(ct.kind(), InvolutionKind::Unitary);
        // Symmetric elements are the hermitian matrices: rank n^2 over R.
        assert_eq!(ct.symmetric_rank().unwrap(), 4);
        for h in [[1, 0, 0, -1], [0, 1, 1, 0]] {
            let h = RingMatrix::from_ints(&cr, 2, 2, &h).unwrap();
            let inv = AlgebraWithInvolution::hermitian(a.clone(), &h).unwrap();
            assert_eq!(inv.kind(), InvolutionKind::Unitary);
            let m = inv.matrix();
            assert_eq!(m.mul(m).unwrap(), RingMatrix::identity(&f3(), 8));
        }
        let i = c.etale().unwrap().sqrt_s();
        let not_h = RingMatrix::new(&cr, 2, 2, vec![i, cr.zero(), cr.zero(), cr.one()]).unwrap();
        assert_eq!(AlgebraWithInvolution::hermitian(a, &not_h).unwrap_err(), Error::NotHermitian);
    }

    #[test]
    fn transpose_over_etale_center_is_first_kind() {
        let a = Algebra::split(&gaussian3(), 2).unwrap();
        let t = AlgebraWithInvolution::transpose(a).unwrap();
        assert_eq!(t.kind(), InvolutionKind::Orthogonal);
        assert_eq!(t.symmetric_rank().unwrap(), 6);
    }

    #[test]
    fn quaternion_conjugation_is_symplectic() {
        let r = RingSpec::prime_field(5).unwrap();
        let q = Algebra::quaternion(&r, r.from_int(-1), r.from_int(-1)).unwrap();
        let inv = AlgebraWithInvolution::canonical(q).unwrap();
        assert_eq!(inv.kind(), InvolutionKind::Symplectic);
        let expected: Vec<i64> = vec![1, 0, 0, 0, 0, -1, 0, 0, 0, 0, -1, 0, 0, 0, 0, -1];
        assert_eq!(*inv.matrix(), RingMatrix::from_ints(&r, 4, 4, &expected).unwrap());
    }

    #[test]
    fn rejects_non_involutions() {
        let r = f3();
        let a = Algebra::split(&Center::Base(r.clone()), 2).unwrap();
        // The identity map is not anti-multiplicative on M_2.
        let id = RingMatrix::identity(&r, 4);
        assert!(matches!(AlgebraWithInvolution::new(a, id), Err(Error::NotAnInvolution(_))));
    }
}
