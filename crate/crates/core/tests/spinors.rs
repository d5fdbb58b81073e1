mod common;

use proptest::prelude::*;
use qca_core::poly::{vf_apply, NamedField, Poly};
use qca_core::sphere::{basis_indices, restrict};
use qca_core::spinor::{dirac, gamma_apply, smul, strace, tangential_dirac, theta_raw, Dirac, GammaSide, SpinorField};
use qca_core::Scalar;

/// `(z1, z2) ↦ [[z1, −z2~], [z2, z1~]]` for constant spinors.
fn matrix(q: &SpinorField) -> [[Scalar; 2]; 2] {
    let c = |p: &Poly| p.coeff(&qca_core::poly::Monomial::new(0, 0, 0, 0));
    let (a, b) = (c(q.u.num()), c(q.v.num()));
    [[a.clone(), -&b.conj()], [b, a.conj()]]
}

fn mat_mul(x: &[[Scalar; 2]; 2], y: &[[Scalar; 2]; 2]) -> [[Scalar; 2]; 2] {
    let e = |i: usize, j: usize| &(&x[i][0] * &y[0][j]) + &(&x[i][1] * &y[1][j]);
    [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]]
}

fn d0(p: &SpinorField) -> SpinorField {
    p.map(|f| vf_apply(NamedField::D0, f))
}

#[test]
fn complex_scalars_do_not_pull_out_of_the_product() {
    let j = SpinorField::unit_j();
    let i = Scalar::i();
    assert_ne!(smul(&j.scale(&i), &j), smul(&j, &j).scale(&i));
    assert_eq!(smul(&j.scale(&Scalar::from_int(3)), &j), smul(&j, &j).scale(&Scalar::from_int(3)));
}

// θ anticommutes with conjugation, so without the factor 1/i the product
// rule breaks on the conjugated slot.
#[test]
fn raw_theta_is_not_a_derivation() {
    let (j, k) = (SpinorField::unit_j(), SpinorField::kappa());
    let lhs = theta_raw(&smul(&k, &j));
    let rhs = &smul(&theta_raw(&k), &j) + &smul(&k, &theta_raw(&j));
    assert_ne!(lhs, rhs);
}

#[test]
fn polar_decomposition_on_the_basis() {
    for a in basis_indices(2) {
        let p = a.field();
        let rhs = gamma_apply(&(&d0(&p) - &tangential_dirac(&p)), GammaSide::Plus);
        assert_eq!(restrict(&dirac(&p, Dirac::D)), restrict(&rhs), "{a}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn product_matches_matrix_model(p in common::constant(), q in common::constant(), r in common::constant()) {
        prop_assert_eq!(matrix(&smul(&p, &q)), mat_mul(&matrix(&p), &matrix(&q)));
        prop_assert_eq!(smul(&smul(&p, &q), &r), smul(&p, &smul(&q, &r)));
    }

    #[test]
    fn product_is_real_bilinear(p in common::spinor(2, 3), q in common::spinor(2, 3), r in common::spinor(1, 2), s in common::real()) {
        prop_assert_eq!(smul(&(&p + &r), &q), &smul(&p, &q) + &smul(&r, &q));
        prop_assert_eq!(smul(&p.scale(&s), &q), smul(&p, &q).scale(&s));
        prop_assert_eq!(smul(&p, &q.scale(&s)), smul(&p, &q).scale(&s));
    }

    #[test]
    fn product_is_associative(p in common::spinor(1, 3), q in common::spinor(1, 3), r in common::spinor(1, 3)) {
        prop_assert_eq!(smul(&smul(&p, &q), &r), smul(&p, &smul(&q, &r)));
    }

    #[test]
    fn trace_is_symmetric(p in common::spinor(2, 3), q in common::spinor(2, 3)) {
        prop_assert_eq!(strace(&smul(&p, &q)), strace(&smul(&q, &p)));
    }

    #[test]
    fn scaled_theta_is_a_derivation(p in common::spinor(2, 3), q in common::spinor(2, 3)) {
        let th = |x: &SpinorField| theta_raw(x).scale(&Scalar::i().inv().unwrap());
        let lhs = th(&smul(&p, &q));
        let rhs = &smul(&th(&p), &q) + &smul(&p, &th(&q));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn polar_decomposition_on_polynomials(p in common::spinor(3, 4)) {
        let rhs = gamma_apply(&(&d0(&p) - &tangential_dirac(&p)), GammaSide::Plus);
        prop_assert_eq!(restrict(&dirac(&p, Dirac::D)), restrict(&rhs));
    }
}
