//! Quaternion-valued fields on `C² ∖ 0` written as columns `(u, v)`,
//! meaning the quaternion `u + j v`.

use core::fmt;
use core::ops::{Add, Neg, Sub};

use crate::error::Result;
use crate::poly::{v_poly, vf_apply, w_poly, NamedField, Poly, StarField, Var};
use crate::scalar::{int, Rational, Scalar};

/// Chirality of a basis spinor: `+` regular at the origin, `−` regular at infinity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

/// Which Dirac operator to apply.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Dirac {
    D,
    Ddag,
}

/// Which half of the Clifford multiplication by the unit normal.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GammaSide {
    Plus,
    Minus,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct SpinorField {
    pub u: StarField,
    pub v: StarField,
}

fn p(a: u32, b: u32, c: u32, d: u32, s: i64) -> StarField {
    StarField::from(Poly::monomial(a, b, c, d).scale(&Scalar::from_int(s)))
}

impl SpinorField {
    pub fn new(u: StarField, v: StarField) -> Self {
        SpinorField { u, v }
    }

    pub fn from_polys(u: Poly, v: Poly) -> Self {
        SpinorField::new(u.into(), v.into())
    }

    pub fn zero() -> Self {
        SpinorField::default()
    }

    pub fn is_zero(&self) -> bool {
        self.u.is_zero() && self.v.is_zero()
    }

    /// `I = (1, 0)`.
    pub fn unit_i() -> Self {
        SpinorField::new(StarField::one(), StarField::zero())
    }

    /// `J = (0, −1)`.
    pub fn unit_j() -> Self {
        SpinorField::new(StarField::zero(), p(0, 0, 0, 0, -1))
    }

    /// `κ = (z2, −z1~)`.
    pub fn kappa() -> Self {
        SpinorField::new(p(0, 1, 0, 0, 1), p(0, 0, 1, 0, -1))
    }

    /// `κ* = (z2~, z1~)`.
    pub fn kappa_star() -> Self {
        SpinorField::new(p(0, 0, 0, 1, 1), p(0, 0, 1, 0, 1))
    }

    /// `μ = (z2, z1~)/|z|⁴`, equal to `(z2, z1~)` on the sphere.
    pub fn mu() -> Self {
        SpinorField::new(StarField::new(Poly::monomial(0, 1, 0, 0), 2), StarField::new(Poly::monomial(0, 0, 1, 0), 2))
    }

    /// `μ* = (z2~, −z1~)`.
    pub fn mu_star() -> Self {
        SpinorField::new(p(0, 0, 0, 1, 1), p(0, 0, 1, 0, -1))
    }

    /// `λ = (z1, z2~)`.
    pub fn lambda() -> Self {
        SpinorField::new(p(1, 0, 0, 0, 1), p(0, 0, 0, 1, 1))
    }

    /// `ν = (−z1, z2~)/|z|⁴`, equal to `(−z1, z2~)` on the sphere.
    pub fn nu() -> Self {
        SpinorField::new(StarField::new(-Poly::monomial(1, 0, 0, 0), 2), StarField::new(Poly::monomial(0, 0, 0, 1), 2))
    }

    /// Right multiplication by a complex scalar, acting on both components.
    pub fn scale(&self, c: &Scalar) -> Self {
        SpinorField::new(self.u.scale(c), self.v.scale(c))
    }

    pub fn map(&self, f: impl Fn(&StarField) -> StarField) -> Self {
        SpinorField::new(f(&self.u), f(&self.v))
    }
}

impl Add for &SpinorField {
    type Output = SpinorField;
    fn add(self, o: &SpinorField) -> SpinorField {
        SpinorField::new(&self.u + &o.u, &self.v + &o.v)
    }
}

impl Sub for &SpinorField {
    type Output = SpinorField;
    fn sub(self, o: &SpinorField) -> SpinorField {
        SpinorField::new(&self.u - &o.u, &self.v - &o.v)
    }
}

impl Neg for &SpinorField {
    type Output = SpinorField;
    fn neg(self) -> SpinorField {
        SpinorField::new(-&self.u, -&self.v)
    }
}

impl fmt::Display for SpinorField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.u, self.v)
    }
}

/// Quaternion product `(z1, z2)·(w1, w2) = (z1 w1 − z2~ w2, z1~ w2 + z2 w1)`.
pub fn smul(a: &SpinorField, b: &SpinorField) -> SpinorField {
    let u = &(&a.u * &b.u) - &(&a.v.conj() * &b.v);
    let v = &(&a.u.conj() * &b.v) + &(&a.v * &b.u);
    SpinorField::new(u, v)
}

/// `tr(u + j v) = u + u~`.
pub fn strace(a: &SpinorField) -> StarField {
    &a.u + &a.u.conj()
}

pub fn sbracket(a: &SpinorField, b: &SpinorField) -> SpinorField {
    &smul(a, b) - &smul(b, a)
}

/// `D = [[∂z1, −∂z2~], [∂z2, ∂z1~]]` and its adjoint `[[∂z1~, ∂z2~], [−∂z2, ∂z1]]`.
pub fn dirac(a: &SpinorField, which: Dirac) -> SpinorField {
    let (u, v) = (&a.u, &a.v);
    match which {
        Dirac::D => SpinorField::new(&u.diff(Var::Z1) - &v.diff(Var::Zb2), &u.diff(Var::Z2) + &v.diff(Var::Zb1)),
        Dirac::Ddag => SpinorField::new(&u.diff(Var::Zb1) + &v.diff(Var::Zb2), &v.diff(Var::Z1) - &u.diff(Var::Z2)),
    }
}

/// Multiplication by `|z|·γ±`, i.e. `γ±` on the unit sphere:
/// `γ₊ = [[z1~, −z2], [z2~, z1]]`, `γ₋ = [[z1, z2], [−z2~, z1~]]`.
pub fn gamma_apply(a: &SpinorField, side: GammaSide) -> SpinorField {
    let (u, v) = (&a.u, &a.v);
    match side {
        GammaSide::Plus => SpinorField::new(
            &(&p(0, 0, 1, 0, 1) * u) - &(&p(0, 1, 0, 0, 1) * v),
            &(&p(0, 0, 0, 1, 1) * u) + &(&p(1, 0, 0, 0, 1) * v),
        ),
        GammaSide::Minus => SpinorField::new(
            &(&p(1, 0, 0, 0, 1) * u) + &(&p(0, 1, 0, 0, 1) * v),
            &(&p(0, 0, 1, 0, 1) * v) - &(&p(0, 0, 0, 1, 1) * u),
        ),
    }
}

/// Tangential Dirac operator on the unit sphere, `[[−θ/2, e₊], [−e₋, θ/2]]`.
pub fn tangential_dirac(a: &SpinorField) -> SpinorField {
    let half = Scalar::from_rational(Rational::new(1.into(), 2.into()));
    let th_u = vf_apply(NamedField::Theta, &a.u).scale(&half);
    let th_v = vf_apply(NamedField::Theta, &a.v).scale(&half);
    SpinorField::new(&vf_apply(NamedField::EPlus, &a.v) - &th_u, &th_v - &vf_apply(NamedField::EMinus, &a.u))
}

/// `θ` applied to both components.
pub fn theta_raw(a: &SpinorField) -> SpinorField {
    a.map(|f| vf_apply(NamedField::Theta, f))
}

fn factorial(n: u32) -> Rational {
    (1..=n as i64).fold(int(1), |acc, i| acc * int(i))
}

/// The normalisation `√((m+1−k)! / (k! l! (m−l)!))`.
pub fn phi_norm(m: u32, l: u32, k: u32) -> Scalar {
    Scalar::sqrt(&(factorial(m + 1 - k) / (factorial(k) * factorial(l) * factorial(m - l))))
}

/// The basis spinor `φ^{±(m,l,k)}` with `0 ≤ l ≤ m`, `0 ≤ k ≤ m + 1`.
pub fn phi_basis(sign: Sign, m: u32, l: u32, k: u32) -> Result<SpinorField> {
    if l > m || k > m + 1 {
        return Err(crate::Error::Range(alloc::format!("phi({}, {m}, {l}, {k})", sign.symbol())));
    }
    let c = phi_norm(m, l, k);
    let field = match sign {
        Sign::Plus => {
            let top = if k == 0 { Poly::zero() } else { v_poly(m, l, k - 1)?.scale(&Scalar::from_int(k as i64)) };
            SpinorField::from_polys(top, -v_poly(m, l, k)?)
        }
        Sign::Minus => {
            let e = m as i64 + 2;
            SpinorField::new(
                StarField::new(w_poly(m + 1, m + 1 - l, k)?, e),
                StarField::new(w_poly(m + 1, m - l, k)?, e),
            )
        }
    };
    Ok(field.scale(&c))
}
