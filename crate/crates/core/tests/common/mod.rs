#![allow(dead_code)]

use proptest::prelude::*;
use qca_core::poly::{Monomial, Poly};
use qca_core::scalar::{rat, GaussRational};
use qca_core::spinor::SpinorField;
use qca_core::Scalar;

/// Small Gaussian rationals.
pub fn gauss() -> impl Strategy<Value = Scalar> {
    (-4i64..5, 1i64..4, -4i64..5, 1i64..4)
        .prop_map(|(a, b, c, d)| Scalar::from_gauss(GaussRational::new(rat(a, b), rat(c, d))))
}

pub fn real() -> impl Strategy<Value = Scalar> {
    (-5i64..6, 1i64..4).prop_map(|(a, b)| Scalar::from_ratio(a, b))
}

/// Polynomials with up to `terms` monomials of total degree at most `deg`.
pub fn poly(deg: u32, terms: usize) -> impl Strategy<Value = Poly> {
    prop::collection::vec(((0..=deg), (0..=deg), (0..=deg), (0..=deg), gauss()), 0..=terms).prop_map(move |ts| {
        let mut p = Poly::zero();
        for (a, b, c, d, s) in ts {
            if a + b + c + d <= deg {
                p.add_term(Monomial::new(a, b, c, d), s);
            }
        }
        p
    })
}

/// Polynomials of a single random bidegree `(p, q)` with `p, q ≤ deg`.
pub fn bihomogeneous(deg: u32, terms: usize) -> impl Strategy<Value = Poly> {
    (0..=deg, 0..=deg).prop_flat_map(move |(p, q)| {
        let monos: Vec<Monomial> = Monomial::of_bidegree(p, q).collect();
        prop::collection::vec((prop::sample::select(monos), gauss()), 1..=terms).prop_map(|ts| {
            let mut out = Poly::zero();
            for (m, c) in ts {
                out.add_term(m, c);
            }
            out
        })
    })
}

pub fn spinor(deg: u32, terms: usize) -> impl Strategy<Value = SpinorField> {
    (poly(deg, terms), poly(deg, terms)).prop_map(|(u, v)| SpinorField::from_polys(u, v))
}

/// Constant quaternions with Gaussian-rational components.
pub fn constant() -> impl Strategy<Value = SpinorField> {
    (gauss(), gauss()).prop_map(|(a, b)| SpinorField::from_polys(Poly::constant(a), Poly::constant(b)))
}

/// All monomials of total degree at most `deg`.
pub fn monomials(deg: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    for a in 0..=deg {
        for b in 0..=deg - a {
            for c in 0..=deg - a - b {
                for d in 0..=deg - a - b - c {
                    out.push(Monomial::new(a, b, c, d));
                }
            }
        }
    }
    out
}
