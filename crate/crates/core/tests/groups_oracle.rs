//! Group orders by enumeration against closed formulas.

#[path = "oracle/order_formulas.rs"]
mod order_formulas;

use std::collections::BTreeSet;

use azumaya_core::groups::{enumerate_special, enumerate_unitary, nrd_image, nrd_of_unitary};
use azumaya_core::{samples, AlgebraWithInvolution, SpecialKind};

#[test]
fn formulas_give_expected_small_orders() {
    assert_eq!(order_formulas::gl(2, 3), 48);
    assert_eq!(order_formulas::sl(2, 3), 24);
    assert_eq!(order_formulas::unitary(2, 3), 96);
    assert_eq!(order_formulas::special_unitary(2, 3), 24);
    assert_eq!(order_formulas::unitary(1, 7), 8);
}

#[test]
fn unitary_and_special_orders_match_formulas() {
    let a = samples::m2_gaussian3([1, 0, 0, 1]).unwrap();
    assert_eq!(enumerate_unitary(&a).len() as u64, order_formulas::unitary(2, 3));
    assert_eq!(enumerate_special(&a, SpecialKind::SU).unwrap().len() as u64, order_formulas::special_unitary(2, 3));

    for (p, n) in [(3, 2), (5, 2), (3, 3)] {
        let t = AlgebraWithInvolution::transpose(samples::matrix_algebra(p, n).unwrap()).unwrap();
        let sl = enumerate_special(&t, SpecialKind::SL).unwrap();
        assert_eq!(sl.len() as u64, order_formulas::sl(n as u32, p as u64), "SL_{n}({p})");
    }
    let t = AlgebraWithInvolution::transpose(samples::matrix_algebra(3, 3).unwrap()).unwrap();
    assert_eq!(enumerate_special(&t, SpecialKind::SO).unwrap().len() as u64, order_formulas::special_orthogonal_odd(1, 3));
}

#[test]
fn degree_one_unitary_groups_have_order_q_plus_one() {
    for (name, c) in samples::etale_catalog().unwrap() {
        let a = samples::degree_one(&c).unwrap();
        let u = enumerate_unitary(&a);
        assert_eq!(u.len(), c.unitary_scalars().len(), "{name}");
        let q = c.base().size() as u64;
        if c.base().is_field() {
            let expected = if c.ring().is_field() { q + 1 } else { q - 1 };
            assert_eq!(u.len() as u64, expected, "{name}");
        }
    }
}

#[test]
fn unitary_group_is_closed_under_products_and_inverses() {
    for a in samples::unitary_catalog().unwrap() {
        let alg = a.algebra();
        if alg.element_count().unwrap() > 10_000 {
            continue;
        }
        let u = enumerate_unitary(&a);
        let set: BTreeSet<_> = u.iter().cloned().collect();
        for x in &u {
            assert!(set.contains(&alg.inverse(x).unwrap()));
            assert_eq!(alg.inverse(x).unwrap(), a.apply(x));
            for y in u.iter().step_by(7) {
                assert!(set.contains(&alg.mul(x, y)), "{}", a.label());
            }
        }
    }
}

#[test]
fn special_unitary_is_the_kernel_of_nrd() {
    for (_, h) in samples::HERMITIAN_FORMS {
        let a = samples::m2_gaussian3(h).unwrap();
        let u = enumerate_unitary(&a);
        let su = enumerate_special(&a, SpecialKind::SU).unwrap();
        let image = nrd_image(a.algebra(), &u).unwrap();
        assert_eq!(su.len() * image.len(), u.len());
        assert_eq!(image, nrd_of_unitary(&a).unwrap());
    }
}

#[test]
fn special_kind_is_checked_against_the_involution() {
    let t = AlgebraWithInvolution::transpose(samples::matrix_algebra(3, 2).unwrap()).unwrap();
    assert!(enumerate_special(&t, SpecialKind::SU).is_err());
    let u = samples::m2_gaussian3([1, 0, 0, 1]).unwrap();
    assert!(enumerate_special(&u, SpecialKind::SO).is_err());
}
