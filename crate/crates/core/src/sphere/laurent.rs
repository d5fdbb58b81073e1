use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Neg, Sub};

use crate::error::{Error, Result};
use crate::scalar::{rat, Rational, Scalar};
use crate::spinor::{phi_basis, Sign, SpinorField};

/// Label `(±, m, l, k)` of a basis spinor.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BasisIndex {
    pub sign: Sign,
    pub m: u32,
    pub l: u32,
    pub k: u32,
}

impl BasisIndex {
    pub fn new(sign: Sign, m: u32, l: u32, k: u32) -> Result<Self> {
        if l > m || k > m + 1 {
            return Err(Error::Range(format!("phi{}({m},{l},{k})", sign.symbol())));
        }
        Ok(BasisIndex { sign, m, l, k })
    }

    pub const fn plus(m: u32, l: u32, k: u32) -> Self {
        BasisIndex { sign: Sign::Plus, m, l, k }
    }

    pub const fn minus(m: u32, l: u32, k: u32) -> Self {
        BasisIndex { sign: Sign::Minus, m, l, k }
    }

    /// Homogeneity degree of the extension: `m` for `+`, `−(m+3)` for `−`.
    pub fn grade(&self) -> i64 {
        match self.sign {
            Sign::Plus => self.m as i64,
            Sign::Minus => -(self.m as i64 + 3),
        }
    }

    /// Polynomial degree of the restriction to `S³`.
    pub fn restricted_degree(&self) -> u32 {
        match self.sign {
            Sign::Plus => self.m,
            Sign::Minus => self.m + 1,
        }
    }

    /// Eigenvalue of the tangential Dirac operator, also the `d₀` eigenvalue.
    pub fn eigenvalue(&self) -> Rational {
        rat(self.grade(), 2)
    }

    pub fn field(&self) -> SpinorField {
        phi_basis(self.sign, self.m, self.l, self.k).expect("indices validated at construction")
    }
}

impl fmt::Display for BasisIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "phi{}({},{},{})", self.sign.symbol(), self.m, self.l, self.k)
    }
}

/// All basis labels with `m ≤ m_max`, `+` before `−`, then by `(m, l, k)`.
pub fn basis_indices(m_max: u32) -> Vec<BasisIndex> {
    let mut out = Vec::new();
    for sign in [Sign::Plus, Sign::Minus] {
        for m in 0..=m_max {
            for l in 0..=m {
                for k in 0..=m + 1 {
                    out.push(BasisIndex { sign, m, l, k });
                }
            }
        }
    }
    out
}

/// A finite combination `Σ C_A φ_A` of basis spinors.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct LaurentSpinor {
    terms: BTreeMap<BasisIndex, Scalar>,
}

impl LaurentSpinor {
    pub fn zero() -> Self {
        LaurentSpinor::default()
    }

    pub fn basis(idx: BasisIndex) -> Self {
        LaurentSpinor::term(idx, Scalar::one())
    }

    pub fn term(idx: BasisIndex, c: Scalar) -> Self {
        let mut out = LaurentSpinor::zero();
        out.add_term(idx, c);
        out
    }

    /// `I = φ+(0,0,1)`.
    pub fn unit_i() -> Self {
        LaurentSpinor::basis(BasisIndex::plus(0, 0, 1))
    }

    /// `J = φ+(0,0,0)`.
    pub fn unit_j() -> Self {
        LaurentSpinor::basis(BasisIndex::plus(0, 0, 0))
    }

    /// `κ = φ+(1,0,1)`.
    pub fn kappa() -> Self {
        LaurentSpinor::basis(BasisIndex::plus(1, 0, 1))
    }

    /// `μ = φ−(0,0,0)`.
    pub fn mu() -> Self {
        LaurentSpinor::basis(BasisIndex::minus(0, 0, 0))
    }

    /// `λ = φ+(1,1,1)`.
    pub fn lambda() -> Self {
        LaurentSpinor::basis(BasisIndex::plus(1, 1, 1))
    }

    /// `ν = φ−(0,0,1)`.
    pub fn nu() -> Self {
        LaurentSpinor::basis(BasisIndex::minus(0, 0, 1))
    }

    /// `κ* = −(1/√2) φ+(1,1,2) + ½(μ − κ)`.
    pub fn kappa_star() -> Self {
        let mut out = LaurentSpinor::term(BasisIndex::plus(1, 1, 2), -Scalar::sqrt(&rat(1, 2)));
        out.add_term(BasisIndex::minus(0, 0, 0), Scalar::from_ratio(1, 2));
        out.add_term(BasisIndex::plus(1, 0, 1), Scalar::from_ratio(-1, 2));
        out
    }

    /// `μ* = −(1/√2) φ+(1,1,2) − ½(μ − κ)`.
    pub fn mu_star() -> Self {
        let mut out = LaurentSpinor::term(BasisIndex::plus(1, 1, 2), -Scalar::sqrt(&rat(1, 2)));
        out.add_term(BasisIndex::minus(0, 0, 0), Scalar::from_ratio(-1, 2));
        out.add_term(BasisIndex::plus(1, 0, 1), Scalar::from_ratio(1, 2));
        out
    }

    pub fn add_term(&mut self, idx: BasisIndex, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&idx) {
            Some(e) => {
                *e += &c;
                if e.is_zero() {
                    self.terms.remove(&idx);
                }
            }
            None => {
                self.terms.insert(idx, c);
            }
        }
    }

    pub fn coeff(&self, idx: &BasisIndex) -> Scalar {
        self.terms.get(idx).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BasisIndex, &Scalar)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Largest `m` among the terms.
    pub fn max_m(&self) -> u32 {
        self.terms.keys().map(|b| b.m).max().unwrap_or(0)
    }

    /// Largest polynomial degree of a term restricted to the sphere.
    pub fn restricted_degree(&self) -> u32 {
        self.terms.keys().map(BasisIndex::restricted_degree).max().unwrap_or(0)
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        let mut out = LaurentSpinor::zero();
        for (i, x) in &self.terms {
            out.add_term(*i, x * c);
        }
        out
    }

    pub fn conj_coeffs(&self) -> Self {
        LaurentSpinor { terms: self.terms.iter().map(|(i, c)| (*i, c.conj())).collect() }
    }

    /// `(−C_{−(0,0,1)}, C_{−(0,0,0)})`.
    pub fn residue(&self) -> (Scalar, Scalar) {
        (-self.coeff(&BasisIndex::minus(0, 0, 1)), self.coeff(&BasisIndex::minus(0, 0, 0)))
    }

    /// Swaps the sign of every label and conjugates every coefficient.
    pub fn hat(&self) -> Self {
        LaurentSpinor {
            terms: self.terms.iter().map(|(i, c)| (BasisIndex { sign: i.sign.flip(), ..*i }, c.conj())).collect(),
        }
    }

    /// The harmonic extension `Σ C_A φ_A` to `C² ∖ {0}`.
    pub fn extension(&self) -> SpinorField {
        self.terms.iter().fold(SpinorField::zero(), |acc, (i, c)| &acc + &i.field().scale(c))
    }

    /// `d₀` on the basis: each term times half its grade.
    pub fn d0(&self) -> Self {
        let mut out = LaurentSpinor::zero();
        for (i, c) in &self.terms {
            out.add_term(*i, c.scale(&i.eigenvalue()));
        }
        out
    }

    /// Splits into homogeneous components keyed by grade.
    pub fn grade(&self) -> BTreeMap<i64, LaurentSpinor> {
        let mut out: BTreeMap<i64, LaurentSpinor> = BTreeMap::new();
        for (i, c) in &self.terms {
            out.entry(i.grade()).or_default().add_term(*i, c.clone());
        }
        out
    }

    /// `(1/2π²) ∫ tr φ dσ = 2 Re C_{+(0,0,1)}`.
    pub fn mean_trace(&self) -> Scalar {
        let c = self.coeff(&BasisIndex::plus(0, 0, 1));
        &c + &c.conj()
    }
}

impl Add for &LaurentSpinor {
    type Output = LaurentSpinor;
    fn add(self, o: &LaurentSpinor) -> LaurentSpinor {
        let mut out = self.clone();
        for (i, c) in &o.terms {
            out.add_term(*i, c.clone());
        }
        out
    }
}

impl Sub for &LaurentSpinor {
    type Output = LaurentSpinor;
    fn sub(self, o: &LaurentSpinor) -> LaurentSpinor {
        let mut out = self.clone();
        for (i, c) in &o.terms {
            out.add_term(*i, -c);
        }
        out
    }
}

impl Neg for &LaurentSpinor {
    type Output = LaurentSpinor;
    fn neg(self) -> LaurentSpinor {
        LaurentSpinor { terms: self.terms.iter().map(|(i, c)| (*i, -c)).collect() }
    }
}

/// Writes `c*` before a factor, with parentheses around sums and the unit omitted.
pub fn coeff_prefix(c: &Scalar) -> String {
    if c.is_one() {
        String::new()
    } else if *c == -Scalar::one() {
        String::from("-")
    } else if c.terms().count() > 1 {
        format!("({c})*")
    } else {
        format!("{c}*")
    }
}

/// Joins signed term strings as `a + b - c`.
pub fn join_terms(f: &mut fmt::Formatter<'_>, parts: impl IntoIterator<Item = String>) -> fmt::Result {
    let mut first = true;
    for s in parts {
        if first {
            f.write_str(&s)?;
        } else if let Some(r) = s.strip_prefix('-') {
            write!(f, " - {r}")?;
        } else {
            write!(f, " + {s}")?;
        }
        first = false;
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

impl fmt::Display for LaurentSpinor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        join_terms(f, self.terms.iter().map(|(i, c)| format!("{}{i}", coeff_prefix(c))))
    }
}
