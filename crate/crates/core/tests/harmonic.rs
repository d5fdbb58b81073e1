mod common;

use proptest::prelude::*;
use qca_core::poly::{harmonic_decompose, laplacian, v_poly, vf_apply_poly, w_poly, NamedField, Poly, StarField};
use qca_core::Scalar;

use NamedField::{EHatMinus, EHatPlus, EMinus, EPlus, Theta, ThetaHat};

fn fact(n: u32) -> i64 {
    (1..=n as i64).product()
}

#[test]
fn ladder_relations_on_v_and_w() {
    for m in 0..=4 {
        for l in 0..=m {
            for k in 0..=m {
                let (mi, ki) = (m as i64, k as i64);
                for (poly, (plus, minus, theta)) in [
                    (v_poly as fn(u32, u32, u32) -> _, (EPlus, EMinus, Theta)),
                    (w_poly, (EHatPlus, EHatMinus, ThetaHat)),
                ] {
                    let p = poly(m, l, k).unwrap();
                    let down = if k == 0 { Poly::zero() } else { poly(m, l, k - 1).unwrap() };
                    assert_eq!(vf_apply_poly(plus, &p), down.scale(&Scalar::from_int(-ki * (mi - ki + 1))));
                    assert_eq!(vf_apply_poly(minus, &p), poly(m, l, k + 1).unwrap());
                    assert_eq!(vf_apply_poly(theta, &p), p.scale(&Scalar::from_int(mi - 2 * ki)));
                }
            }
            assert!(v_poly(m, l, m + 1).unwrap().is_zero());
        }
    }
}

#[test]
fn w_in_terms_of_v_and_conjugation() {
    for m in 0..=4 {
        for l in 0..=m {
            for k in 0..=m {
                let sign = |e: u32| if e.is_multiple_of(2) { 1 } else { -1 };
                let w = w_poly(m, l, k).unwrap();
                let c = Scalar::from_ratio(sign(k) * fact(l), fact(m - k));
                assert_eq!(w, v_poly(m, k, m - l).unwrap().scale(&c), "w({m},{l},{k})");
                let v = v_poly(m, l, k).unwrap();
                let c = Scalar::from_ratio(sign(m + l + k) * fact(k), fact(m - k));
                assert_eq!(v.conj(), v_poly(m, m - l, m - k).unwrap().scale(&c), "conj v({m},{l},{k})");
            }
        }
    }
}

#[test]
fn harmonic_families() {
    for m in 0..=4 {
        for l in 0..=m {
            for k in 0..=m {
                assert!(laplacian(&v_poly(m, l, k).unwrap()).is_zero());
                assert!(laplacian(&w_poly(m, l, k).unwrap()).is_zero());
            }
        }
    }
}

fn commutator(x: NamedField, y: NamedField, p: &Poly) -> Poly {
    &vf_apply_poly(x, &vf_apply_poly(y, p)) - &vf_apply_poly(y, &vf_apply_poly(x, p))
}

#[test]
fn vector_field_commutators() {
    for m in common::monomials(4) {
        let p = Poly::term(m, Scalar::one());
        for (plus, minus, theta) in [(EPlus, EMinus, Theta), (EHatPlus, EHatMinus, ThetaHat)] {
            assert_eq!(commutator(theta, plus, &p), vf_apply_poly(plus, &p).scale(&Scalar::from_int(2)));
            assert_eq!(commutator(theta, minus, &p), vf_apply_poly(minus, &p).scale(&Scalar::from_int(-2)));
            assert_eq!(commutator(plus, minus, &p), -&vf_apply_poly(theta, &p));
        }
    }
}

#[test]
fn tangential_fields_kill_the_radius() {
    for f in [EPlus, EMinus, Theta, EHatPlus, EHatMinus, ThetaHat] {
        assert!(vf_apply_poly(f, &Poly::norm_sqr()).is_zero(), "{f:?}");
    }
    assert_eq!(vf_apply_poly(NamedField::D0, &Poly::norm_sqr()), Poly::norm_sqr());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn decomposition_is_exact_and_harmonic(p in common::bihomogeneous(3, 6)) {
        let parts = harmonic_decompose(&p).unwrap();
        let mut sum = Poly::zero();
        for (j, h) in parts.iter().enumerate() {
            prop_assert!(laplacian(h).is_zero());
            sum = &sum + &(h * &Poly::norm_sqr().pow(j as u32));
        }
        prop_assert_eq!(sum, p);
    }

    #[test]
    fn decomposition_rejects_mixed_bidegrees(p in common::bihomogeneous(2, 3)) {
        let q = &p + &Poly::monomial(3, 0, 0, 0);
        prop_assume!(q.bidegree().is_none());
        prop_assert_eq!(harmonic_decompose(&q), Err(qca_core::Error::NotHomogeneous));
    }

    #[test]
    fn star_fields_form_a_ring(p in common::poly(2, 3), q in common::poly(2, 3), r in common::poly(2, 3), j in 0i64..3, k in 0i64..3) {
        let (x, y, z) = (StarField::new(p, -j), StarField::new(q, -k), StarField::new(r, -1));
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert_eq!((&x * &y).conj(), &x.conj() * &y.conj());
    }

    #[test]
    fn derivatives_obey_leibniz(p in common::poly(2, 3), q in common::poly(2, 3), k in 0i64..3) {
        let (x, y) = (StarField::new(p, -k), StarField::new(q, -1));
        for f in NamedField::ALL {
            let lhs = qca_core::poly::vf_apply(f, &(&x * &y));
            let rhs = &(&qca_core::poly::vf_apply(f, &x) * &y) + &(&x * &qca_core::poly::vf_apply(f, &y));
            prop_assert_eq!(lhs, rhs);
        }
    }
}
