//! Exact scalars: rationals, Gaussian rationals and finite sums of
//! Gaussian rationals times square roots of squarefree integers.

use alloc::collections::BTreeMap;
use alloc::string::String;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::Error;

/// Exact rational number, always in lowest terms with a positive denominator.
pub type Rational = BigRational;

/// Shorthand for building `p/q`.
pub fn rat(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Shorthand for an integer-valued rational.
pub fn int(p: i64) -> Rational {
    Rational::from_integer(BigInt::from(p))
}

/// `re + im·i` with rational parts.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GaussRational {
    pub re: Rational,
    pub im: Rational,
}

impl GaussRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        GaussRational { re, im }
    }

    pub fn zero() -> Self {
        GaussRational::new(Rational::zero(), Rational::zero())
    }

    pub fn one() -> Self {
        GaussRational::new(Rational::one(), Rational::zero())
    }

    pub fn i() -> Self {
        GaussRational::new(Rational::zero(), Rational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussRational::new(self.re.clone(), -self.im.clone())
    }

    pub fn scale(&self, r: &Rational) -> Self {
        GaussRational::new(&self.re * r, &self.im * r)
    }

    /// `|g|²`.
    pub fn norm_sqr(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> Result<Self, Error> {
        if self.is_zero() {
            return Err(Error::ZeroDivision);
        }
        let n = self.norm_sqr();
        Ok(GaussRational::new(&self.re / &n, -(&self.im / &n)))
    }
}

impl Add for &GaussRational {
    type Output = GaussRational;
    fn add(self, o: &GaussRational) -> GaussRational {
        GaussRational::new(&self.re + &o.re, &self.im + &o.im)
    }
}

impl Sub for &GaussRational {
    type Output = GaussRational;
    fn sub(self, o: &GaussRational) -> GaussRational {
        GaussRational::new(&self.re - &o.re, &self.im - &o.im)
    }
}

impl Mul for &GaussRational {
    type Output = GaussRational;
    fn mul(self, o: &GaussRational) -> GaussRational {
        GaussRational::new(&self.re * &o.re - &self.im * &o.im, &self.re * &o.im + &self.im * &o.re)
    }
}

impl Neg for &GaussRational {
    type Output = GaussRational;
    fn neg(self) -> GaussRational {
        GaussRational::new(-self.re.clone(), -self.im.clone())
    }
}

/// Largest `s` with `s² | n`, and the squarefree cofactor.
fn split_square(mut n: u128) -> (u128, u128) {
    let mut outside = 1u128;
    let mut p = 2u128;
    while p * p <= n {
        while n.is_multiple_of(p * p) {
            n /= p * p;
            outside *= p;
        }
        p += 1;
    }
    (outside, n)
}

/// A finite sum `Σ g_r · √r` over distinct squarefree `r ≥ 1`.
///
/// The representation is canonical: no zero coefficients are stored, so
/// structural equality is value equality. The derived ordering is
/// structural and only meant for use as a map key.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Scalar {
    terms: BTreeMap<u64, GaussRational>,
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar::default()
    }

    pub fn one() -> Self {
        Scalar::from_gauss(GaussRational::one())
    }

    pub fn i() -> Self {
        Scalar::from_gauss(GaussRational::i())
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::from_rational(int(n))
    }

    pub fn from_ratio(p: i64, q: i64) -> Self {
        Scalar::from_rational(rat(p, q))
    }

    pub fn from_rational(r: Rational) -> Self {
        Scalar::from_gauss(GaussRational::new(r, Rational::zero()))
    }

    pub fn from_gauss(g: GaussRational) -> Self {
        Scalar::term(1, g)
    }

    /// `g·√r` for a squarefree `r`.
    pub fn term(radicand: u64, g: GaussRational) -> Self {
        debug_assert!(radicand >= 1);
        let mut terms = BTreeMap::new();
        if !g.is_zero() {
            terms.insert(radicand, g);
        }
        Scalar { terms }
    }

    /// Principal square root of a rational; negative inputs give `i·√|r|`.
    ///
    /// Panics if the squarefree part of `|numerator·denominator|` exceeds `u64`.
    pub fn sqrt(r: &Rational) -> Self {
        if r.is_zero() {
            return Scalar::zero();
        }
        let neg = r.is_negative();
        let r = r.abs();
        // √(p/q) = √(pq)/q
        let pq = (r.numer() * r.denom()).to_u128().expect("radicand too large for a u64 key");
        let (outside, inside) = split_square(pq);
        let coeff = Rational::new(BigInt::from(outside), r.denom().clone());
        let g =
            if neg { GaussRational::new(Rational::zero(), coeff) } else { GaussRational::new(coeff, Rational::zero()) };
        Scalar::term(u64::try_from(inside).expect("radicand too large for a u64 key"), g)
    }

    pub fn sqrt_int(n: i64) -> Self {
        Scalar::sqrt(&int(n))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        *self == Scalar::one()
    }

    /// True when every coefficient has zero imaginary part.
    pub fn is_real(&self) -> bool {
        self.terms.values().all(|g| g.im.is_zero())
    }

    /// The rational value when the scalar is a plain rational.
    pub fn as_rational(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => {
                let (r, g) = self.terms.iter().next()?;
                (*r == 1 && g.im.is_zero()).then(|| g.re.clone())
            }
            _ => None,
        }
    }

    /// The Gaussian rational value when no radical is present.
    pub fn as_gauss(&self) -> Option<GaussRational> {
        match self.terms.len() {
            0 => Some(GaussRational::zero()),
            1 => self.terms.get(&1).cloned(),
            _ => None,
        }
    }

    /// Iterate over `(radicand, coefficient)` pairs in increasing radicand order.
    pub fn terms(&self) -> impl Iterator<Item = (u64, &GaussRational)> {
        self.terms.iter().map(|(r, g)| (*r, g))
    }

    fn add_term(&mut self, r: u64, g: GaussRational) {
        if g.is_zero() {
            return;
        }
        let entry = self.terms.entry(r).or_insert_with(GaussRational::zero);
        *entry = &*entry + &g;
        if entry.is_zero() {
            self.terms.remove(&r);
        }
    }

    pub fn conj(&self) -> Self {
        Scalar { terms: self.terms.iter().map(|(r, g)| (*r, g.conj())).collect() }
    }

    pub fn scale(&self, q: &Rational) -> Self {
        if q.is_zero() {
            return Scalar::zero();
        }
        Scalar { terms: self.terms.iter().map(|(r, g)| (*r, g.scale(q))).collect() }
    }

    pub fn mul_gauss(&self, h: &GaussRational) -> Self {
        if h.is_zero() {
            return Scalar::zero();
        }
        Scalar { terms: self.terms.iter().map(|(r, g)| (*r, g * h)).collect() }
    }

    /// Multiplicative inverse; only single-radical scalars are invertible.
    pub fn inv(&self) -> Result<Self, Error> {
        match self.terms.len() {
            0 => Err(Error::ZeroDivision),
            1 => {
                let (r, g) = self.terms.iter().next().expect("one term");
                // 1/(g√r) = √r/(g r)
                let inv_r = Rational::new(BigInt::one(), BigInt::from(*r));
                Ok(Scalar::term(*r, g.inv()?.scale(&inv_r)))
            }
            _ => Err(Error::NotMonomial),
        }
    }

    pub fn div(&self, o: &Scalar) -> Result<Self, Error> {
        Ok(self * &o.inv()?)
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = Scalar::one();
        for _ in 0..n {
            out = &out * self;
        }
        out
    }
}

fn radical_product(r1: u64, r2: u64) -> (u64, u64) {
    // r1, r2 squarefree: √r1·√r2 = g·√((r1/g)(r2/g)) with g = gcd
    let g = r1.gcd(&r2);
    let rest = (r1 / g) as u128 * (r2 / g) as u128;
    (g, u64::try_from(rest).expect("radicand product exceeds u64"))
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, o: &Scalar) -> Scalar {
        let mut out = self.clone();
        for (r, g) in &o.terms {
            out.add_term(*r, g.clone());
        }
        out
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, o: &Scalar) -> Scalar {
        let mut out = self.clone();
        for (r, g) in &o.terms {
            out.add_term(*r, -g);
        }
        out
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, o: &Scalar) -> Scalar {
        let mut out = Scalar::zero();
        for (r1, g1) in &self.terms {
            for (r2, g2) in &o.terms {
                let (outside, inside) = radical_product(*r1, *r2);
                out.add_term(inside, (g1 * g2).scale(&int(outside as i64)));
            }
        }
        out
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { terms: self.terms.iter().map(|(r, g)| (*r, -g)).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Scalar {
            type Output = Scalar;
            fn $m(self, o: Scalar) -> Scalar {
                (&self).$m(&o)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, o: &Scalar) -> Scalar {
                (&self).$m(o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, o: &Scalar) {
        for (r, g) in &o.terms {
            self.add_term(*r, g.clone());
        }
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, o: &Scalar) {
        for (r, g) in &o.terms {
            self.add_term(*r, -g);
        }
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl From<Rational> for Scalar {
    fn from(r: Rational) -> Self {
        Scalar::from_rational(r)
    }
}

fn write_rational(f: &mut fmt::Formatter<'_>, r: &Rational) -> fmt::Result {
    if r.is_integer() {
        write!(f, "{}", r.numer())
    } else {
        write!(f, "{}/{}", r.numer(), r.denom())
    }
}

/// Writes `re + im·i` in the expression syntax.
fn write_gauss(f: &mut fmt::Formatter<'_>, g: &GaussRational) -> fmt::Result {
    match (g.re.is_zero(), g.im.is_zero()) {
        (_, true) => write_rational(f, &g.re),
        (true, false) => write_imag(f, &g.im),
        (false, false) => {
            f.write_str("(")?;
            write_rational(f, &g.re)?;
            if g.im.is_negative() {
                f.write_str(" - ")?;
                write_imag(f, &-g.im.clone())?;
            } else {
                f.write_str(" + ")?;
                write_imag(f, &g.im)?;
            }
            f.write_str(")")
        }
    }
}

fn write_imag(f: &mut fmt::Formatter<'_>, im: &Rational) -> fmt::Result {
    if im.is_one() {
        f.write_str("i")
    } else if *im == -Rational::one() {
        f.write_str("-i")
    } else {
        write_rational(f, im)?;
        f.write_str("*i")
    }
}

struct Term<'a>(u64, &'a GaussRational);

impl fmt::Display for Term<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let Term(r, g) = *self;
        if r == 1 {
            return write_gauss(f, g);
        }
        if g.im.is_zero() && g.re.is_one() {
            return write!(f, "sqrt({r})");
        }
        if g.im.is_zero() && g.re == -Rational::one() {
            return write!(f, "-sqrt({r})");
        }
        write_gauss(f, g)?;
        write!(f, "*sqrt({r})")
    }
}

/// Canonical text form, readable back by the expression parser.
impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (r, g) in &self.terms {
            let mut s = String::new();
            fmt::write(&mut s, format_args!("{}", Term(*r, g)))?;
            if first {
                f.write_str(&s)?;
            } else if let Some(rest) = s.strip_prefix('-') {
                write!(f, " - {rest}")?;
            } else {
                write!(f, " + {s}")?;
            }
            first = false;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;
    use proptest::prelude::*;

    #[test]
    fn sqrt_normalises_radicand() {
        assert_eq!(Scalar::sqrt_int(8), Scalar::from_int(2) * Scalar::sqrt_int(2));
        assert_eq!(Scalar::sqrt_int(9), Scalar::from_int(3));
        // √(1/2) = √2/2
        assert_eq!(Scalar::sqrt(&rat(1, 2)), Scalar::sqrt_int(2).scale(&rat(1, 2)));
        assert_eq!(Scalar::sqrt_int(-4), Scalar::from_int(2) * Scalar::i());
    }

    #[test]
    fn radical_products_collapse() {
        assert_eq!(Scalar::sqrt_int(2) * Scalar::sqrt_int(2), Scalar::from_int(2));
        assert_eq!(Scalar::sqrt_int(6) * Scalar::sqrt_int(3), Scalar::from_int(3) * Scalar::sqrt_int(2));
        assert_eq!(Scalar::i() * Scalar::i(), Scalar::from_int(-1));
    }

    #[test]
    fn inverse_of_monomials() {
        let x = Scalar::sqrt_int(2).scale(&rat(1, 3)) * Scalar::i();
        assert_eq!(&x * &x.inv().unwrap(), Scalar::one());
        assert!(Scalar::zero().inv().is_err());
        assert!((Scalar::one() + Scalar::sqrt_int(2)).inv().is_err());
    }

    #[test]
    fn display_forms() {
        assert_eq!(Scalar::from_ratio(-1, 2).to_string(), "-1/2");
        assert_eq!(Scalar::i().scale(&rat(-1, 2)).to_string(), "-1/2*i");
        assert_eq!(Scalar::sqrt_int(2).scale(&rat(1, 3)).to_string(), "1/3*sqrt(2)");
        let s = Scalar::from_ratio(1, 2) - Scalar::sqrt_int(3) + Scalar::i();
        assert_eq!(s.to_string(), "(1/2 + i) - sqrt(3)");
        assert_eq!(Scalar::zero().to_string(), "0");
    }

    fn arb_scalar() -> impl Strategy<Value = Scalar> {
        prop::collection::vec(
            (prop::sample::select(vec![1i64, 2, 3, 6, 5]), -6i64..6, 1i64..5, -6i64..6, 1i64..5),
            0..4,
        )
        .prop_map(|ts| {
            let mut s = Scalar::zero();
            for (r, a, b, c, d) in ts {
                let g = GaussRational::new(rat(a, b), rat(c, d));
                s += &(Scalar::sqrt_int(r) * Scalar::from_gauss(g));
            }
            s
        })
    }

    proptest! {
        #[test]
        fn field_axioms(a in arb_scalar(), b in arb_scalar(), c in arb_scalar()) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&(&a - &a), &Scalar::zero());
        }

        #[test]
        fn conj_is_multiplicative(a in arb_scalar(), b in arb_scalar()) {
            prop_assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
            prop_assert_eq!(a.conj().conj(), a);
        }
    }
}
