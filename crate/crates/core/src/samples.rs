//! Small named instances used by the tests, the benchmarks and the CLI
//! survey.

use crate::algebra::{Algebra, Center, StructureTable};
use crate::error::Result;
use crate::etale::QuadraticEtale;
use crate::involution::AlgebraWithInvolution;
use crate::matrix::RingMatrix;
use crate::ring::RingSpec;
use crate::transfers::{FiniteFreeExtension, PolyExtension};

fn f(p: u32) -> RingSpec {
    RingSpec::prime_field(p).expect("odd prime")
}

/// `F_p[i] = F_p[x]/(x^2 + 1)` as an extension of `F_p`.
pub fn gaussian(p: u32) -> Result<QuadraticEtale> {
    let r = f(p);
    QuadraticEtale::new(&r, r.from_int(-1))
}

/// Quadratic etale algebras of order at most 81.
pub fn etale_catalog() -> Result<Vec<(String, QuadraticEtale)>> {
    let f9 = gaussian(3)?.ring().clone();
    // 1 + i generates F_9*, so it is not a square.
    let gen9 = f9.from_poly_coeffs(&[f(3).one(), f(3).one()])?;
    let f3f3 = RingSpec::product(vec![f(3), f(3)])?;
    let z9 = RingSpec::zmod(9)?;
    Ok(vec![
        ("F3[i]".into(), gaussian(3)?),
        ("F3 x F3".into(), QuadraticEtale::split(&f(3))?),
        ("F5[sqrt2]".into(), QuadraticEtale::new(&f(5), f(5).from_int(2))?),
        ("F5 x F5".into(), QuadraticEtale::split(&f(5))?),
        ("F7[i]".into(), gaussian(7)?),
        ("Z9[i]".into(), QuadraticEtale::new(&z9, z9.from_int(-1))?),
        ("F9[sqrt(1+i)]".into(), QuadraticEtale::new(&f9, gen9)?),
        ("(F3 x F3)[i]".into(), QuadraticEtale::new(&f3f3, f3f3.from_int(-1))?),
    ])
}

/// The degree-one algebra `C` with the standard involution.
pub fn degree_one(c: &QuadraticEtale) -> Result<AlgebraWithInvolution> {
    AlgebraWithInvolution::conjugate_transpose(Algebra::split(&Center::Etale(c.clone()), 1)?)
}

/// `M_2(F_3[i])` with `X -> h^{-1} conj(X)^t h`, `h` given by integer entries.
pub fn m2_gaussian3(h: [i64; 4]) -> Result<AlgebraWithInvolution> {
    let c = gaussian(3)?;
    let hm = RingMatrix::from_ints(c.ring(), 2, 2, &h)?;
    AlgebraWithInvolution::hermitian(Algebra::split(&Center::Etale(c), 2)?, &hm)
}

/// The hermitian forms shipped for `M_2(F_3[i])`: identity, `diag(1, -1)`
/// and the hyperbolic plane.
pub const HERMITIAN_FORMS: [(&str, [i64; 4]); 3] =
    [("identity", [1, 0, 0, 1]), ("diag(1,-1)", [1, 0, 0, -1]), ("hyperbolic", [0, 1, 1, 0])];

/// `M_2((F_5 x F_5))` with the conjugate transpose, which swaps the factors.
pub fn m2_split_f5() -> Result<AlgebraWithInvolution> {
    let c = QuadraticEtale::split(&f(5))?;
    AlgebraWithInvolution::conjugate_transpose(Algebra::split(&Center::Etale(c), 2)?)
}

/// Every unitary algebra the norm principle is checked on.
pub fn unitary_catalog() -> Result<Vec<AlgebraWithInvolution>> {
    let mut out = Vec::new();
    for (name, c) in etale_catalog()? {
        out.push(degree_one(&c)?.with_label(format!("{name}, degree 1")));
    }
    for (name, h) in HERMITIAN_FORMS {
        out.push(m2_gaussian3(h)?.with_label(format!("M2(F3[i]), h = {name}")));
    }
    out.push(m2_split_f5()?.with_label("M2(F5 x F5), swap"));
    Ok(out)
}

pub fn matrix_algebra(p: u32, n: usize) -> Result<Algebra> {
    Ok(Algebra::split(&Center::Base(f(p)), n)?.with_label(format!("M{n}(F{p})")))
}

/// `(-1, -1)` over `F_p`.
pub fn quaternions(p: u32) -> Result<Algebra> {
    let r = f(p);
    Ok(Algebra::quaternion(&r, r.from_int(-1), r.from_int(-1))?.with_label(format!("(-1,-1)/F{p}")))
}

/// `F_3[x]/(x^2)` as a rank-2 table over `F_3`.
pub fn dual_numbers() -> Result<StructureTable> {
    let r = f(3);
    let (z, o) = (r.zero(), r.one());
    StructureTable::from_dense(&r, 2, &[o, z, z, o, z, o, z, z], 0)
}

/// `F_p[x]/(x^2 - s)` as an extension of `F_p`.
pub fn quadratic_extension(p: u32, s: i64) -> Result<FiniteFreeExtension> {
    let r = f(p);
    FiniteFreeExtension::poly_quotient(&r, vec![r.from_int(-s), r.zero(), r.one()])
}

/// `F_p x F_p` over `F_p`.
pub fn split_extension(p: u32) -> Result<FiniteFreeExtension> {
    let t = FiniteFreeExtension::trivial(&f(p));
    FiniteFreeExtension::product(&t, &t)
}

/// Algebra/extension pairs for the norm inclusion and the transfer checks.
pub fn transfer_pairs() -> Result<Vec<(String, Algebra, FiniteFreeExtension)>> {
    Ok(vec![
        ("M2(F3), F3[i]".into(), matrix_algebra(3, 2)?, quadratic_extension(3, -1)?),
        ("M2(F3), F3 x F3".into(), matrix_algebra(3, 2)?, split_extension(3)?),
        ("F3, F3[i]".into(), matrix_algebra(3, 1)?, quadratic_extension(3, -1)?),
        ("F5, F5[sqrt2]".into(), matrix_algebra(5, 1)?, quadratic_extension(5, 2)?),
        ("F5, F5 x F5".into(), matrix_algebra(5, 1)?, split_extension(5)?),
        ("M2(F5), F5 x F5".into(), matrix_algebra(5, 2)?, split_extension(5)?),
        ("(-1,-1)/F5, F5 x F5".into(), quaternions(5)?, split_extension(5)?),
        ("(-1,-1)/F3, F3[i]".into(), quaternions(3)?, quadratic_extension(3, -1)?),
    ])
}

/// Unitary algebra/extension pairs for the unitary transfer.
pub fn unitary_transfer_pairs() -> Result<Vec<(String, AlgebraWithInvolution, FiniteFreeExtension)>> {
    Ok(vec![
        ("F3[i], F3 x F3".into(), degree_one(&gaussian(3)?)?, split_extension(3)?),
        ("F5[sqrt2], F5 x F5".into(), degree_one(&QuadraticEtale::new(&f(5), f(5).from_int(2))?)?, split_extension(5)?),
        ("F7[i], F7[sqrt3]".into(), degree_one(&gaussian(7)?)?, quadratic_extension(7, 3)?),
        ("M2(F3[i]), F3".into(), m2_gaussian3([1, 0, 0, 1])?, FiniteFreeExtension::trivial(&f(3))),
    ])
}

/// `F_5[t][x]/(x^2 - 1)` and `F_5[t][x]/(x^2 - t x - 1)`.
pub fn poly_extensions() -> Result<Vec<(String, PolyExtension)>> {
    let r = f(5);
    Ok(vec![
        ("x^2 - 1".into(), PolyExtension::from_ints(&r, &[vec![-1], vec![0], vec![1]])?),
        ("x^2 - t x - 1".into(), PolyExtension::from_ints(&r, &[vec![-1], vec![0, -1], vec![1]])?),
    ])
}
