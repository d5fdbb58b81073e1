mod common;

use proptest::prelude::*;
use qca_core::poly::{vf_apply, NamedField};
use qca_core::sphere::{
    basis_indices, inner, integrate, restrict, BasisIndex, LaurentSpinor, RestrictedSpinor, SphereCalculus,
};
use qca_core::spinor::{smul, theta_raw};
use qca_core::{Error, Scalar};

fn laurent(max_m: u32, terms: usize) -> impl Strategy<Value = LaurentSpinor> {
    prop::collection::vec((prop::sample::select(basis_indices(max_m)), common::gauss()), 0..=terms).prop_map(|ts| {
        let mut l = LaurentSpinor::zero();
        for (i, c) in ts {
            l.add_term(i, c);
        }
        l
    })
}

fn mean_trace(p: &RestrictedSpinor) -> Scalar {
    integrate(&(&p.u + &p.u.conj()))
}

#[test]
fn theta_has_zero_mean_trace() {
    for a in basis_indices(3) {
        assert!(mean_trace(&restrict(&theta_raw(&a.field()))).is_zero(), "{a}");
    }
}

#[test]
fn expansion_needs_enough_degree() {
    let calc = SphereCalculus::new();
    let p = calc.restricted(BasisIndex::new(qca_core::spinor::Sign::Plus, 2, 1, 1).unwrap());
    assert_eq!(calc.expand(&p, 1), Err(Error::Incomplete(1)));
    assert!(calc.expand(&p, 2).is_ok());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn expand_inverts_evaluate(l in laurent(2, 6)) {
        let calc = SphereCalculus::new();
        prop_assert_eq!(calc.expand(&calc.evaluate(&l), 2).unwrap(), l);
    }

    #[test]
    fn trace_reads_the_unit_coefficient(l in laurent(2, 6)) {
        let calc = SphereCalculus::new();
        prop_assert_eq!(l.mean_trace(), mean_trace(&calc.evaluate(&l)));
    }

    #[test]
    fn restriction_is_multiplicative(p in common::spinor(2, 3), q in common::spinor(2, 3)) {
        prop_assert_eq!(restrict(&smul(&p, &q)), restrict(&p).mul(&restrict(&q)));
    }

    #[test]
    fn inner_product_is_hermitian(p in common::spinor(2, 3), q in common::spinor(2, 3)) {
        let (p, q) = (restrict(&p), restrict(&q));
        prop_assert_eq!(inner(&p, &q), inner(&q, &p).conj());
        let n = inner(&p, &p);
        prop_assert!(n.is_real());
        prop_assert!(n.as_rational().is_some_and(|r| r >= qca_core::scalar::int(0)));
    }

    #[test]
    fn laurent_product_is_associative(x in laurent(1, 2), y in laurent(1, 2), z in laurent(1, 2)) {
        let calc = SphereCalculus::new();
        let lhs = calc.mul(&calc.mul(&x, &y).unwrap(), &z).unwrap();
        let rhs = calc.mul(&x, &calc.mul(&y, &z).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn basis_d0_is_the_radial_derivative(l in laurent(3, 5)) {
        let d0 = l.extension().map(|f| vf_apply(NamedField::D0, f));
        prop_assert_eq!(l.d0().extension(), d0);
    }

    #[test]
    fn residue_of_hat(l in laurent(2, 6)) {
        let (plus1, plus0) = (BasisIndex::plus(0, 0, 1), BasisIndex::plus(0, 0, 0));
        let (r1, r2) = l.hat().residue();
        prop_assert_eq!(r1, -&l.coeff(&plus1).conj());
        prop_assert_eq!(r2, l.coeff(&plus0).conj());
    }
}
