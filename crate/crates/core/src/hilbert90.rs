//! Constructive Hilbert 90 for unitary involutions: every `a` with
//! `a sigma(a) = 1` is written as `b sigma(b)^{-1}` with
//! `b = c + sigma(c) a`.

use std::collections::BTreeSet;

use crate::algebra::AlgebraElem;
use crate::error::{Error, Result};
use crate::etale::EtaleElem;
use crate::groups::enumerate_unitary;
use crate::involution::AlgebraWithInvolution;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct H90Witness {
    pub input: AlgebraElem,
    pub lambda: EtaleElem,
    pub c: EtaleElem,
    pub b: AlgebraElem,
    /// Number of `lambda` candidates rejected before this one.
    pub rejected: usize,
    pub verified: bool,
}

fn require_unitary(a: &AlgebraWithInvolution) -> Result<()> {
    if !a.is_unitary() {
        return Err(Error::Precondition(format!("needs a unitary involution, got {}", a.kind())));
    }
    Ok(())
}

/// Candidates `1, -1`, then the rest of `U(C)` in canonical order.
fn lambda_candidates(a: &AlgebraWithInvolution) -> Vec<EtaleElem> {
    let e = a.center().etale().expect("unitary involution has an etale center");
    let c = e.ring();
    let one = c.one();
    let minus = c.neg(one);
    let mut out = vec![one, minus];
    out.extend(e.unitary_scalars().into_iter().filter(|u| *u != one && *u != minus));
    out
}

fn find_lambda_counted(a: &AlgebraWithInvolution, x: &AlgebraElem) -> Result<(EtaleElem, usize)> {
    require_unitary(a)?;
    if !a.is_unitary_elem(x) {
        return Err(Error::Precondition(format!("{} is not unitary", a.algebra().format(x))));
    }
    let alg = a.algebra();
    let c = alg.center().ring();
    let chr = alg.reduced_char_poly(x)?;
    let candidates = lambda_candidates(a);
    for (k, lambda) in candidates.iter().enumerate() {
        if c.is_unit(chr.eval(c.neg(*lambda))) {
            return Ok((*lambda, k));
        }
    }
    let tried: Vec<String> = candidates.iter().map(|l| c.format(*l)).collect();
    Err(Error::Exhausted(format!("chr_a(-lambda) is a non-unit for every lambda in {{{}}}", tried.join(", "))))
}

/// A `lambda` in `U(C)` with `chr_a(-lambda)` a unit.
pub fn find_lambda(a: &AlgebraWithInvolution, x: &AlgebraElem) -> Result<EtaleElem> {
    Ok(find_lambda_counted(a, x)?.0)
}

pub fn h90_witness(a: &AlgebraWithInvolution, x: &AlgebraElem) -> Result<H90Witness> {
    let (lambda, rejected) = find_lambda_counted(a, x)?;
    let alg = a.algebra();
    let e = alg.center().etale().expect("unitary");
    let c = e.hilbert90_scalar(lambda)?;
    let b = alg.add(&alg.embed_center(c), &alg.center_mul(e.sigma(c), x));
    let verified = verify_witness(a, x, lambda, c, &b);
    Ok(H90Witness { input: x.clone(), lambda, c, b, rejected, verified })
}

/// Replays a witness with the independent multiplication route.
pub fn verify_witness(a: &AlgebraWithInvolution, x: &AlgebraElem, lambda: EtaleElem, c: EtaleElem, b: &AlgebraElem) -> bool {
    let alg = a.algebra();
    let e = alg.center().etale().expect("unitary");
    let cr = e.ring();
    if cr.mul(lambda, e.sigma(lambda)) != cr.one() || e.one_minus_sigma(c) != Some(lambda) {
        return false;
    }
    if !alg.is_unit(b) {
        return false;
    }
    let Ok(sb_inv) = alg.inverse(&a.apply(b)) else {
        return false;
    };
    alg.mul_independent(b, &sb_inv) == *x && alg.mul_independent(&a.apply(b), &sb_inv) == alg.one()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InclusionReport {
    pub unitary: usize,
    pub verified: usize,
    pub failures: Vec<AlgebraElem>,
    /// Total `lambda` rejections over all witnesses.
    pub lambda_rejections: usize,
}

impl InclusionReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.verified == self.unitary
    }
}

/// Builds and verifies a witness for every unitary element.
pub fn inclusion_check(a: &AlgebraWithInvolution) -> Result<InclusionReport> {
    require_unitary(a)?;
    let mut report = InclusionReport { unitary: 0, verified: 0, failures: Vec::new(), lambda_rejections: 0 };
    for x in enumerate_unitary(a) {
        report.unitary += 1;
        match h90_witness(a, &x) {
            Ok(w) if w.verified => {
                report.verified += 1;
                report.lambda_rejections += w.rejected;
            }
            _ => report.failures.push(x),
        }
    }
    Ok(report)
}

/// `{b sigma(b)^{-1} : b a unit}` by enumeration.
pub fn coboundaries(a: &AlgebraWithInvolution) -> Result<BTreeSet<AlgebraElem>> {
    let alg = a.algebra();
    let mut out = BTreeSet::new();
    for b in alg.elements() {
        if alg.is_unit(&b) {
            let s = alg.inverse(&a.apply(&b))?;
            out.insert(alg.mul(&b, &s));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Algebra, Center};
    use crate::etale::QuadraticEtale;
    use crate::matrix::RingMatrix;
    use crate::ring::RingSpec;

    fn m2_gaussian3() -> AlgebraWithInvolution {
        let r = RingSpec::prime_field(3).unwrap();
        let c = QuadraticEtale::new(&r, r.from_int(-1)).unwrap();
        AlgebraWithInvolution::conjugate_transpose(Algebra::split(&Center::Etale(c), 2).unwrap()).unwrap()
    }

    #[test]
    fn lambda_examples() {
        let a = m2_gaussian3();
        let alg = a.algebra();
        let c = alg.center().ring().clone();
        assert_eq!(find_lambda(&a, &alg.one()).unwrap(), c.one());
        assert_eq!(find_lambda(&a, &alg.neg(&alg.one())).unwrap(), c.neg(c.one()));
        let i = alg.center().etale().unwrap().sqrt_s();
        let d = alg.from_matrix(&RingMatrix::new(&c, 2, 2, vec![i, c.zero(), c.zero(), c.neg(i)]).unwrap());
        assert_eq!(find_lambda(&a, &d).unwrap(), c.one());
        assert!(matches!(find_lambda(&a, &alg.basis(0)), Err(Error::Precondition(_))));
    }

    #[test]
    fn witness_examples() {
        let a = m2_gaussian3();
        let alg = a.algebra();
        let c = alg.center().ring().clone();
        let w = h90_witness(&a, &alg.one()).unwrap();
        assert!(w.verified);
        assert_eq!(w.c, c.from_int(2));
        assert_eq!(w.b, alg.scale(RingSpec::prime_field(3).unwrap().from_int(4), &alg.one()));
        let minus = alg.neg(&alg.one());
        let w = h90_witness(&a, &minus).unwrap();
        assert!(w.verified);
        assert_eq!(w.c, alg.center().etale().unwrap().sqrt_s());
        let i = alg.center().etale().unwrap().sqrt_s();
        let d = alg.from_matrix(&RingMatrix::new(&c, 2, 2, vec![i, c.zero(), c.zero(), c.neg(i)]).unwrap());
        let w = h90_witness(&a, &d).unwrap();
        assert!(w.verified);
        // 1 + d itself is also a witness.
        let one_d = alg.add(&alg.one(), &d);
        assert!(verify_witness(
            &a,
            &d,
            c.one(),
            c.from_int(2),
            &alg.scale(RingSpec::prime_field(3).unwrap().from_int(2), &one_d)
        ));
        assert_eq!(alg.mul(&one_d, &alg.inverse(&a.apply(&one_d)).unwrap()), d);
    }

    #[test]
    fn inclusion_and_brute_force_agree() {
        let a = m2_gaussian3();
        let report = inclusion_check(&a).unwrap();
        assert_eq!(report.unitary, 96);
        assert!(report.passed());
        let cob = coboundaries(&a).unwrap();
        let unitary: BTreeSet<AlgebraElem> = enumerate_unitary(&a).into_iter().collect();
        assert!(unitary.is_subset(&cob));
    }

    #[test]
    fn rejects_first_kind() {
        let r = RingSpec::prime_field(3).unwrap();
        let a = AlgebraWithInvolution::transpose(Algebra::split(&Center::Base(r), 2).unwrap()).unwrap();
        assert!(matches!(inclusion_check(&a), Err(Error::Precondition(_))));
    }
}
