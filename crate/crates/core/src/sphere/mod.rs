//! Restriction to the unit sphere `S³`, exact integration, Laurent
//! expansion in the basis spinors and the algebra built on it.

mod calculus;
mod laurent;

pub use calculus::{cocycle, evaluate, expand, mul_laurent, SphereCalculus};
pub use laurent::{basis_indices, coeff_prefix, join_terms, BasisIndex, LaurentSpinor};

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Sub};

use crate::poly::{Monomial, Poly};
use crate::scalar::{int, Rational, Scalar};
use crate::spinor::{gamma_apply, GammaSide, SpinorField};

/// Normal form modulo `|z|² = 1`: rewrites `z1 z1~ → 1 − z2 z2~`.
pub fn reduce(p: &Poly) -> Poly {
    let mut out = Poly::zero();
    for (m, c) in p.terms() {
        let t = m.a.min(m.c);
        if t == 0 {
            out.add_term(*m, c.clone());
            continue;
        }
        let base = Monomial::new(m.a - t, m.b, m.c - t, m.d);
        // (1 − z2 z2~)^t = Σ_j C(t, j) (−1)^j (z2 z2~)^j
        let mut binom: i64 = 1;
        for j in 0..=t {
            let sign = if j % 2 == 0 { 1 } else { -1 };
            let mono = Monomial::new(base.a, base.b + j, base.c, base.d + j);
            out.add_term(mono, c.scale(&int(sign * binom)));
            binom = binom * (t - j) as i64 / (j + 1) as i64;
        }
    }
    out
}

/// A spinor on `S³` with both components in normal form.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct RestrictedSpinor {
    pub u: Poly,
    pub v: Poly,
}

impl RestrictedSpinor {
    /// Builds a restricted spinor from arbitrary polynomials, reducing them.
    pub fn new(u: &Poly, v: &Poly) -> Self {
        RestrictedSpinor { u: reduce(u), v: reduce(v) }
    }

    pub fn zero() -> Self {
        RestrictedSpinor::default()
    }

    pub fn is_zero(&self) -> bool {
        self.u.is_zero() && self.v.is_zero()
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        RestrictedSpinor { u: self.u.scale(c), v: self.v.scale(c) }
    }

    pub fn degree(&self) -> u32 {
        self.u.degree().max(self.v.degree())
    }

    /// Quaternion product of the restrictions, reduced.
    pub fn mul(&self, o: &RestrictedSpinor) -> RestrictedSpinor {
        let u = &(&self.u * &o.u) - &(&self.v.conj() * &o.v);
        let v = &(&self.u.conj() * &o.v) + &(&self.v * &o.u);
        RestrictedSpinor::new(&u, &v)
    }

    /// `θ` on both components; it preserves the normal form.
    pub fn theta(&self) -> RestrictedSpinor {
        let th = |p: &Poly| {
            let mut out = Poly::zero();
            for (m, c) in p.terms() {
                let w = m.a as i64 + m.b as i64 - m.c as i64 - m.d as i64;
                out.add_term(*m, c.scale(&int(w)));
            }
            out
        };
        RestrictedSpinor { u: th(&self.u), v: th(&self.v) }
    }

    /// The field as a polynomial spinor on `C²`, i.e. its degree-preserving
    /// representative without `|z|` factors.
    pub fn to_field(&self) -> SpinorField {
        SpinorField::from_polys(self.u.clone(), self.v.clone())
    }
}

impl Add for &RestrictedSpinor {
    type Output = RestrictedSpinor;
    fn add(self, o: &RestrictedSpinor) -> RestrictedSpinor {
        RestrictedSpinor { u: &self.u + &o.u, v: &self.v + &o.v }
    }
}

impl Sub for &RestrictedSpinor {
    type Output = RestrictedSpinor;
    fn sub(self, o: &RestrictedSpinor) -> RestrictedSpinor {
        RestrictedSpinor { u: &self.u - &o.u, v: &self.v - &o.v }
    }
}

impl fmt::Display for RestrictedSpinor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.u, self.v)
    }
}

/// Sets `|z| = 1` and reduces.
pub fn restrict(p: &SpinorField) -> RestrictedSpinor {
    RestrictedSpinor::new(p.u.num(), p.v.num())
}

fn factorial(n: u32) -> Rational {
    (1..=n as i64).fold(int(1), |acc, i| acc * int(i))
}

/// `(1/2π²) ∫_{S³} z1^a z2^b z1~^c z2~^d dσ`.
pub fn integrate_monomial(m: &Monomial) -> Rational {
    if m.a != m.c || m.b != m.d {
        return int(0);
    }
    factorial(m.a) * factorial(m.b) / factorial(m.a + m.b + 1)
}

/// `(1/2π²) ∫_{S³} p dσ`; valid on any polynomial, reduced or not.
pub fn integrate(p: &Poly) -> Scalar {
    let mut out = Scalar::zero();
    for (m, c) in p.terms() {
        let w = integrate_monomial(m);
        if w != int(0) {
            out += &c.scale(&w);
        }
    }
    out
}

/// Monomials grouped by torus weight: `∫ x·conj(y)` can only be nonzero
/// when `x` and `y` carry the same weight.
#[derive(Clone, Debug, Default)]
pub(crate) struct WeightIndex {
    buckets: BTreeMap<(i64, i64), Vec<(Monomial, Scalar)>>,
}

impl WeightIndex {
    pub(crate) fn new(p: &Poly) -> Self {
        let mut buckets: BTreeMap<(i64, i64), Vec<(Monomial, Scalar)>> = BTreeMap::new();
        for (m, c) in p.terms() {
            buckets.entry(m.torus_weight()).or_default().push((*m, c.clone()));
        }
        WeightIndex { buckets }
    }

    /// `(1/2π²) ∫ p · conj(q)` with `q` the indexed polynomial.
    pub(crate) fn pair(&self, p: &WeightIndex) -> Scalar {
        let mut out = Scalar::zero();
        for (w, xs) in &p.buckets {
            let Some(ys) = self.buckets.get(w) else { continue };
            for (x, cx) in xs {
                for (y, cy) in ys {
                    let val = integrate_monomial(&x.mul(&y.conj()));
                    out += &(cx * &cy.conj()).scale(&val);
                }
            }
        }
        out
    }
}

/// Hermitian pairing `(1/2π²) ∫ (p.u q.u~ + p.v q.v~) dσ`.
pub fn inner(p: &RestrictedSpinor, q: &RestrictedSpinor) -> Scalar {
    let (qu, qv) = (WeightIndex::new(&q.u), WeightIndex::new(&q.v));
    &qu.pair(&WeightIndex::new(&p.u)) + &qv.pair(&WeightIndex::new(&p.v))
}

/// `(1/2π²) ∫_{S³} γ₊ φ dσ`, componentwise.
pub fn residue_integral(p: &SpinorField) -> (Scalar, Scalar) {
    let g = restrict(&gamma_apply(p, GammaSide::Plus));
    (integrate(&g.u), integrate(&g.v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    #[test]
    fn restriction_examples() {
        let mu = restrict(&SpinorField::mu());
        assert_eq!(mu, RestrictedSpinor::new(&Poly::monomial(0, 1, 0, 0), &Poly::monomial(0, 0, 1, 0)));
        let r = RestrictedSpinor::new(&Poly::monomial(1, 0, 1, 0), &Poly::zero());
        assert_eq!(r.u, &Poly::one() - &Poly::monomial(0, 1, 0, 1));
    }

    #[test]
    fn reduce_is_idempotent_and_kills_the_relation() {
        let p = &Poly::monomial(3, 1, 2, 0) + &Poly::monomial(1, 0, 1, 2);
        assert_eq!(reduce(&reduce(&p)), reduce(&p));
        assert_eq!(reduce(&Poly::norm_sqr()), Poly::one());
    }

    #[test]
    fn integral_values() {
        assert_eq!(integrate(&Poly::monomial(1, 0, 1, 0)), Scalar::from_rational(rat(1, 2)));
        assert_eq!(integrate(&Poly::monomial(1, 1, 1, 1)), Scalar::from_rational(rat(1, 6)));
        assert!(integrate(&Poly::monomial(1, 0, 0, 1)).is_zero());
        // integration respects the relation
        let p = Poly::monomial(2, 1, 2, 1);
        assert_eq!(integrate(&p), integrate(&reduce(&p)));
    }

    #[test]
    fn inner_values() {
        let k = restrict(&SpinorField::kappa());
        let mu = restrict(&SpinorField::mu());
        assert_eq!(inner(&k, &k), Scalar::one());
        assert!(inner(&k, &mu).is_zero());
        let i = restrict(&SpinorField::unit_i());
        assert_eq!(inner(&i, &i), Scalar::one());
    }

    #[test]
    fn residue_integral_of_mu() {
        assert_eq!(residue_integral(&SpinorField::mu()), (Scalar::zero(), Scalar::one()));
    }
}
