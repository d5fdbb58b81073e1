use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use super::{Poly, Var};
use crate::scalar::{int, Scalar};

/// `num / |z|^{2k}`, kept with `k ≥ 0` and no spare factor of `|z|²` in `num`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct StarField {
    num: Poly,
    k: u32,
}

impl StarField {
    /// Builds `num / |z|^{2k}` for any integer `k` and cancels common factors.
    pub fn new(num: Poly, k: i64) -> Self {
        if k <= 0 {
            let num = &num * &Poly::norm_sqr().pow((-k) as u32);
            return StarField { num, k: 0 };
        }
        let mut num = num;
        let mut k = k as u32;
        if num.is_zero() {
            return StarField::zero();
        }
        while k > 0 {
            match num.div_norm_sqr() {
                Some(q) => {
                    num = q;
                    k -= 1;
                }
                None => break,
            }
        }
        StarField { num, k }
    }

    pub fn zero() -> Self {
        StarField::default()
    }

    pub fn one() -> Self {
        StarField::from(Poly::one())
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn conj(&self) -> StarField {
        StarField { num: self.num.conj(), k: self.k }
    }

    pub fn scale(&self, c: &Scalar) -> StarField {
        StarField::new(self.num.scale(c), self.k as i64)
    }

    /// Rewrites both operands over the common denominator `|z|^{2K}`.
    fn common(&self, o: &StarField) -> (Poly, Poly, u32) {
        let k = self.k.max(o.k);
        let n = Poly::norm_sqr();
        (&self.num * &n.pow(k - self.k), &o.num * &n.pow(k - o.k), k)
    }

    /// Derivative in a Wirtinger coordinate, by the quotient rule.
    pub fn diff(&self, v: Var) -> StarField {
        // ∂(N |z|^{-2k}) = (∂N·|z|² − k N ∂|z|²) |z|^{-2(k+1)}
        let dn = self.num.diff(v);
        if self.k == 0 {
            return StarField::from(dn);
        }
        let dnorm = Poly::var(v.conj());
        let top = &(&dn * &Poly::norm_sqr()) - &(&self.num * &dnorm).scale(&Scalar::from_rational(int(self.k as i64)));
        StarField::new(top, self.k as i64 + 1)
    }
}

impl From<Poly> for StarField {
    fn from(p: Poly) -> Self {
        StarField { num: p, k: 0 }
    }
}

impl Add for &StarField {
    type Output = StarField;
    fn add(self, o: &StarField) -> StarField {
        let (a, b, k) = self.common(o);
        StarField::new(&a + &b, k as i64)
    }
}

impl Sub for &StarField {
    type Output = StarField;
    fn sub(self, o: &StarField) -> StarField {
        let (a, b, k) = self.common(o);
        StarField::new(&a - &b, k as i64)
    }
}

impl Mul for &StarField {
    type Output = StarField;
    fn mul(self, o: &StarField) -> StarField {
        StarField::new(&self.num * &o.num, (self.k + o.k) as i64)
    }
}

impl Neg for &StarField {
    type Output = StarField;
    fn neg(self) -> StarField {
        StarField { num: -&self.num, k: self.k }
    }
}

impl fmt::Display for StarField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.k == 0 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/|z|^{}", self.num, 2 * self.k)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cancellation() {
        let s = StarField::new(Poly::norm_sqr(), 1);
        assert_eq!(s, StarField::one());
        let a = StarField::new(Poly::monomial(1, 0, 0, 0), 1);
        let b = StarField::new(Poly::monomial(0, 0, 1, 0), 1);
        let p = &a * &b;
        assert_eq!(p.k(), 2);
        assert_eq!(p.num(), &Poly::monomial(1, 0, 1, 0));
    }

    #[test]
    fn sum_over_common_denominator() {
        let a = StarField::new(Poly::monomial(1, 0, 1, 0), 1);
        let b = StarField::new(Poly::monomial(0, 1, 0, 1), 1);
        assert_eq!(&a + &b, StarField::one());
    }

    #[test]
    fn quotient_rule() {
        // ∂/∂z1 (1/|z|²) = −z1~/|z|⁴
        let f = StarField::new(Poly::one(), 1);
        assert_eq!(f.diff(Var::Z1), StarField::new(-Poly::monomial(0, 0, 1, 0), 2));
    }
}
