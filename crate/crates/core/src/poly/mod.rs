//! Polynomials in `z1, z2, z1~, z2~` with exact coefficients, the
//! `|z|^{-2k}` extension, the first-order operators on the three-sphere and
//! harmonic polynomials.

mod fields;
mod harmonic;
mod star;

pub use fields::{vf_apply, vf_apply_poly, NamedField};
pub use harmonic::{harmonic_decompose, laplacian, v_poly, w_poly};
pub use star::StarField;

use alloc::collections::BTreeMap;
use alloc::string::String;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use crate::scalar::{int, Rational, Scalar};

/// The four coordinates of the real-analytic polynomial ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    Z1,
    Z2,
    Zb1,
    Zb2,
}

impl Var {
    pub const ALL: [Var; 4] = [Var::Z1, Var::Z2, Var::Zb1, Var::Zb2];

    fn slot(self) -> usize {
        self as usize
    }

    pub fn conj(self) -> Var {
        match self {
            Var::Z1 => Var::Zb1,
            Var::Z2 => Var::Zb2,
            Var::Zb1 => Var::Z1,
            Var::Zb2 => Var::Z2,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Var::Z1 => "z1",
            Var::Z2 => "z2",
            Var::Zb1 => "z1~",
            Var::Zb2 => "z2~",
        }
    }
}

/// `z1^a z2^b z1~^c z2~^d`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial {
    pub a: u32,
    pub b: u32,
    pub c: u32,
    pub d: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { a: 0, b: 0, c: 0, d: 0 };

    pub fn new(a: u32, b: u32, c: u32, d: u32) -> Self {
        Monomial { a, b, c, d }
    }

    pub fn var(v: Var) -> Self {
        let mut m = Monomial::ONE;
        m.set(v, 1);
        m
    }

    pub fn exp(&self, v: Var) -> u32 {
        [self.a, self.b, self.c, self.d][v.slot()]
    }

    fn set(&mut self, v: Var, e: u32) {
        match v {
            Var::Z1 => self.a = e,
            Var::Z2 => self.b = e,
            Var::Zb1 => self.c = e,
            Var::Zb2 => self.d = e,
        }
    }

    pub fn mul(&self, o: &Monomial) -> Monomial {
        Monomial::new(self.a + o.a, self.b + o.b, self.c + o.c, self.d + o.d)
    }

    pub fn conj(&self) -> Monomial {
        Monomial::new(self.c, self.d, self.a, self.b)
    }

    pub fn degree(&self) -> u32 {
        self.a + self.b + self.c + self.d
    }

    /// Degrees in the holomorphic and antiholomorphic variables.
    pub fn bidegree(&self) -> (u32, u32) {
        (self.a + self.b, self.c + self.d)
    }

    /// Weight under the maximal torus `(a − c, b − d)`.
    pub fn torus_weight(&self) -> (i64, i64) {
        (self.a as i64 - self.c as i64, self.b as i64 - self.d as i64)
    }

    /// Iterate over all monomials of a given bidegree.
    pub fn of_bidegree(p: u32, q: u32) -> impl Iterator<Item = Monomial> {
        (0..=p).flat_map(move |a| (0..=q).map(move |c| Monomial::new(a, p - a, c, q - c)))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in Var::ALL {
            let e = self.exp(v);
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            f.write_str(v.name())?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

/// A polynomial with [`Scalar`] coefficients; zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Poly {
    terms: BTreeMap<Monomial, Scalar>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn one() -> Self {
        Poly::constant(Scalar::one())
    }

    pub fn constant(c: Scalar) -> Self {
        Poly::term(Monomial::ONE, c)
    }

    pub fn term(m: Monomial, c: Scalar) -> Self {
        let mut p = Poly::zero();
        p.add_term(m, c);
        p
    }

    pub fn var(v: Var) -> Self {
        Poly::term(Monomial::var(v), Scalar::one())
    }

    pub fn monomial(a: u32, b: u32, c: u32, d: u32) -> Self {
        Poly::term(Monomial::new(a, b, c, d), Scalar::one())
    }

    /// `|z|² = z1 z1~ + z2 z2~`.
    pub fn norm_sqr() -> Self {
        Poly::monomial(1, 0, 1, 0) + Poly::monomial(0, 1, 0, 1)
    }

    pub fn add_term(&mut self, m: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(e) => {
                *e += &c;
                if e.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degree; `0` for the zero polynomial.
    pub fn degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    /// The common bidegree of all terms, if there is one.
    pub fn bidegree(&self) -> Option<(u32, u32)> {
        let mut it = self.terms.keys().map(Monomial::bidegree);
        let first = it.next()?;
        it.all(|b| b == first).then_some(first)
    }

    pub fn scale(&self, c: &Scalar) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        let mut out = Poly::zero();
        for (m, x) in &self.terms {
            out.add_term(*m, x * c);
        }
        out
    }

    pub fn scale_rational(&self, q: &Rational) -> Poly {
        self.scale(&Scalar::from_rational(q.clone()))
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Poly {
        Poly { terms: self.terms.iter().map(|(n, c)| (n.mul(m), c.clone())).collect() }
    }

    /// Complex conjugation: conjugate coefficients and swap `z ↔ z~`.
    pub fn conj(&self) -> Poly {
        Poly { terms: self.terms.iter().map(|(m, c)| (m.conj(), c.conj())).collect() }
    }

    /// Partial derivative in one of the four (Wirtinger) coordinates.
    pub fn diff(&self, v: Var) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let e = m.exp(v);
            if e == 0 {
                continue;
            }
            let mut n = *m;
            n.set(v, e - 1);
            out.add_term(n, c.scale(&int(e as i64)));
        }
        out
    }

    pub fn pow(&self, n: u32) -> Poly {
        let mut out = Poly::one();
        for _ in 0..n {
            out = &out * self;
        }
        out
    }

    /// Exact quotient by `|z|²`, or `None` when it does not divide.
    pub fn div_norm_sqr(&self) -> Option<Poly> {
        // Rewrite z1 z1~ = |z|² − z2 z2~ until no z1 z1~ factor remains.
        let mut rest = self.clone();
        let mut quot = Poly::zero();
        let zz = Poly::monomial(0, 1, 0, 1);
        loop {
            let next = rest.terms.iter().find(|(m, _)| m.a > 0 && m.c > 0).map(|(m, c)| (*m, c.clone()));
            let Some((m, c)) = next else { break };
            let reduced = Monomial::new(m.a - 1, m.b, m.c - 1, m.d);
            let t = Poly::term(reduced, c);
            rest.terms.remove(&m);
            rest -= &(&t * &zz);
            quot += &t;
        }
        // The single relation is its own Gröbner basis, so the normal form
        // vanishes exactly on multiples of |z|².
        rest.is_zero().then_some(quot)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            let mut s = String::new();
            let cs = alloc::format!("{c}");
            let is_sum = c.terms().count() > 1;
            if *m == Monomial::ONE {
                s.push_str(&if is_sum { alloc::format!("({cs})") } else { cs });
            } else if c.is_one() {
                s.push_str(&alloc::format!("{m}"));
            } else if *c == -Scalar::one() {
                s.push_str(&alloc::format!("-{m}"));
            } else if is_sum {
                s.push_str(&alloc::format!("({cs})*{m}"));
            } else {
                s.push_str(&alloc::format!("{cs}*{m}"));
            }
            if first {
                f.write_str(&s)?;
            } else if let Some(r) = s.strip_prefix('-') {
                write!(f, " - {r}")?;
            } else {
                write!(f, " + {s}")?;
            }
            first = false;
        }
        Ok(())
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, o: &Poly) -> Poly {
        let mut out = self.clone();
        out += o;
        out
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, o: &Poly) -> Poly {
        let mut out = self.clone();
        out -= o;
        out
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, o: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly { terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect() }
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(self, o: Poly) -> Poly {
        &self + &o
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(self, o: Poly) -> Poly {
        &self - &o
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, o: Poly) -> Poly {
        &self * &o
    }
}

impl AddAssign<&Poly> for Poly {
    fn add_assign(&mut self, o: &Poly) {
        for (m, c) in &o.terms {
            self.add_term(*m, c.clone());
        }
    }
}

impl SubAssign<&Poly> for Poly {
    fn sub_assign(&mut self, o: &Poly) {
        for (m, c) in &o.terms {
            self.add_term(*m, -c);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conj_swaps_variables() {
        let p = Poly::monomial(0, 1, 1, 0).scale(&Scalar::i());
        assert_eq!(p.conj(), Poly::monomial(1, 0, 0, 1).scale(&-Scalar::i()));
    }

    #[test]
    fn division_by_norm() {
        let n = Poly::norm_sqr();
        assert_eq!(n.div_norm_sqr(), Some(Poly::one()));
        let p = &(&Poly::monomial(2, 0, 0, 1) + &Poly::monomial(0, 3, 1, 0)) * &n.pow(2);
        let q = p.div_norm_sqr().unwrap();
        assert_eq!(q.div_norm_sqr().unwrap(), &Poly::monomial(2, 0, 0, 1) + &Poly::monomial(0, 3, 1, 0));
        assert_eq!(Poly::monomial(1, 0, 1, 0).div_norm_sqr(), None);
        assert_eq!(Poly::zero().div_norm_sqr(), Some(Poly::zero()));
    }

    #[test]
    fn derivative() {
        let p = Poly::monomial(2, 0, 1, 0);
        assert_eq!(p.diff(Var::Z1), Poly::monomial(1, 0, 1, 0).scale(&Scalar::from_int(2)));
        assert!(p.diff(Var::Z2).is_zero());
    }

    #[test]
    fn display() {
        let p = &Poly::monomial(1, 0, 1, 0) - &Poly::monomial(0, 1, 0, 1).scale(&Scalar::from_ratio(1, 2));
        assert_eq!(alloc::format!("{p}"), "-1/2*z2*z2~ + z1*z1~");
    }
}
