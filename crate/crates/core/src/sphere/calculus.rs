use alloc::collections::BTreeMap;
use core::cell::RefCell;

use super::{integrate, restrict, BasisIndex, LaurentSpinor, RestrictedSpinor, WeightIndex};
use crate::error::{Error, Result};
use crate::scalar::{rat, Scalar};

struct BasisEntry {
    field: RestrictedSpinor,
    u: WeightIndex,
    v: WeightIndex,
}

/// Expansion and multiplication on `S³` with memoised basis data.
///
/// The caches make repeated products of basis spinors cheap. A calculus
/// is meant to be owned by one thread; build one per thread when needed.
#[derive(Default)]
pub struct SphereCalculus {
    basis: RefCell<BTreeMap<BasisIndex, BasisEntry>>,
    products: RefCell<BTreeMap<(BasisIndex, BasisIndex), LaurentSpinor>>,
    cocycles: RefCell<BTreeMap<(BasisIndex, BasisIndex), Scalar>>,
}

impl SphereCalculus {
    pub fn new() -> Self {
        SphereCalculus::default()
    }

    fn with_entry<R>(&self, idx: BasisIndex, f: impl FnOnce(&BasisEntry) -> R) -> R {
        if !self.basis.borrow().contains_key(&idx) {
            let field = restrict(&idx.field());
            let entry = BasisEntry { u: WeightIndex::new(&field.u), v: WeightIndex::new(&field.v), field };
            self.basis.borrow_mut().insert(idx, entry);
        }
        f(&self.basis.borrow()[&idx])
    }

    /// The restriction of a basis spinor to `S³`.
    pub fn restricted(&self, idx: BasisIndex) -> RestrictedSpinor {
        self.with_entry(idx, |e| e.field.clone())
    }

    /// Coefficient of `φ_idx` in `p`, i.e. `⟨p, φ_idx⟩`.
    pub fn coefficient(&self, p: &RestrictedSpinor, idx: BasisIndex) -> Scalar {
        let (pu, pv) = (WeightIndex::new(&p.u), WeightIndex::new(&p.v));
        self.with_entry(idx, |e| &e.u.pair(&pu) + &e.v.pair(&pv))
    }

    /// Expands `p` over all basis spinors with `m ≤ m_max`; fails with
    /// [`Error::Incomplete`] unless the expansion reproduces `p` exactly.
    pub fn expand(&self, p: &RestrictedSpinor, m_max: u32) -> Result<LaurentSpinor> {
        let (pu, pv) = (WeightIndex::new(&p.u), WeightIndex::new(&p.v));
        let mut out = LaurentSpinor::zero();
        for idx in super::basis_indices(m_max) {
            let c = self.with_entry(idx, |e| &e.u.pair(&pu) + &e.v.pair(&pv));
            out.add_term(idx, c);
        }
        if self.evaluate(&out) != *p {
            return Err(Error::Incomplete(m_max));
        }
        Ok(out)
    }

    /// Expands with the smallest bound that is always sufficient: the
    /// polynomial degree of `p`.
    pub fn expand_auto(&self, p: &RestrictedSpinor) -> Result<LaurentSpinor> {
        self.expand(p, p.degree())
    }

    pub fn evaluate(&self, l: &LaurentSpinor) -> RestrictedSpinor {
        let mut out = RestrictedSpinor::zero();
        for (idx, c) in l.terms() {
            out = &out + &self.with_entry(*idx, |e| e.field.scale(c));
        }
        out
    }

    /// `expand(evaluate(l1)·evaluate(l2))`; only real-bilinear in the coefficients.
    pub fn mul(&self, l1: &LaurentSpinor, l2: &LaurentSpinor) -> Result<LaurentSpinor> {
        let p = self.evaluate(l1).mul(&self.evaluate(l2));
        self.expand_auto(&p)
    }

    /// Product of two basis spinors, memoised.
    pub fn basis_product(&self, a: BasisIndex, b: BasisIndex) -> LaurentSpinor {
        if let Some(p) = self.products.borrow().get(&(a, b)) {
            return p.clone();
        }
        let p = self.restricted(a).mul(&self.restricted(b));
        let l = self.expand_auto(&p).expect("degree bound is always sufficient");
        self.products.borrow_mut().insert((a, b), l.clone());
        l
    }

    /// The complex-bilinear extension of the basis product table.
    pub fn mul_bilinear(&self, l1: &LaurentSpinor, l2: &LaurentSpinor) -> LaurentSpinor {
        let mut out = LaurentSpinor::zero();
        for (a, x) in l1.terms() {
            for (b, y) in l2.terms() {
                let xy = x * y;
                for (c, z) in self.basis_product(*a, *b).terms() {
                    out.add_term(*c, z * &xy);
                }
            }
        }
        out
    }

    /// `c(p, q) = (1/2i) (1/2π²) ∫ tr[θp · q] dσ` on concrete fields.
    pub fn cocycle_fields(&self, p: &RestrictedSpinor, q: &RestrictedSpinor) -> Scalar {
        let tp = p.theta();
        let top = &(&tp.u * &q.u) - &(&tp.v.conj() * &q.v);
        let s = integrate(&top);
        // tr = x + x~, and 1/(2i) = −i/2
        (&s + &s.conj()).mul_gauss(&crate::scalar::GaussRational::new(rat(0, 1), rat(-1, 2)))
    }

    /// The cocycle on evaluated Laurent spinors.
    pub fn cocycle(&self, l1: &LaurentSpinor, l2: &LaurentSpinor) -> Scalar {
        self.cocycle_fields(&self.evaluate(l1), &self.evaluate(l2))
    }

    /// Cocycle of two basis spinors, memoised.
    pub fn basis_cocycle(&self, a: BasisIndex, b: BasisIndex) -> Scalar {
        if let Some(c) = self.cocycles.borrow().get(&(a, b)) {
            return c.clone();
        }
        let c = self.cocycle_fields(&self.restricted(a), &self.restricted(b));
        self.cocycles.borrow_mut().insert((a, b), c.clone());
        c
    }

    /// The complex-bilinear extension of the basis cocycle table.
    pub fn cocycle_bilinear(&self, l1: &LaurentSpinor, l2: &LaurentSpinor) -> Scalar {
        let mut out = Scalar::zero();
        for (a, x) in l1.terms() {
            for (b, y) in l2.terms() {
                let c = self.basis_cocycle(*a, *b);
                if !c.is_zero() {
                    out += &(&(x * y) * &c);
                }
            }
        }
        out
    }
}

/// Expands `p` over the basis with `m ≤ m_max`.
pub fn expand(p: &RestrictedSpinor, m_max: u32) -> Result<LaurentSpinor> {
    SphereCalculus::new().expand(p, m_max)
}

/// Realises a Laurent spinor on `S³`.
pub fn evaluate(l: &LaurentSpinor) -> RestrictedSpinor {
    SphereCalculus::new().evaluate(l)
}

/// Product of two Laurent spinors through their values on `S³`.
pub fn mul_laurent(l1: &LaurentSpinor, l2: &LaurentSpinor) -> Result<LaurentSpinor> {
    SphereCalculus::new().mul(l1, l2)
}

/// The cocycle `c(l1, l2)` on evaluated fields.
pub fn cocycle(l1: &LaurentSpinor, l2: &LaurentSpinor) -> Scalar {
    SphereCalculus::new().cocycle(l1, l2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Poly;
    use crate::spinor::SpinorField;

    #[test]
    fn expand_examples() {
        let calc = SphereCalculus::new();
        let k = restrict(&SpinorField::kappa());
        assert_eq!(calc.expand(&k, 1).unwrap(), LaurentSpinor::kappa());
        let ks = restrict(&SpinorField::kappa_star());
        assert_eq!(calc.expand(&ks, 1).unwrap(), LaurentSpinor::kappa_star());
        let ms = restrict(&SpinorField::mu_star());
        assert_eq!(calc.expand(&ms, 1).unwrap(), LaurentSpinor::mu_star());
        // (z1 z2, 0) needs m = 2
        let p = RestrictedSpinor::new(&Poly::monomial(1, 1, 0, 0), &Poly::zero());
        assert_eq!(calc.expand(&p, 1), Err(Error::Incomplete(1)));
        assert!(calc.expand(&p, 2).is_ok());
    }

    #[test]
    fn products_of_generators() {
        let calc = SphereCalculus::new();
        let i = LaurentSpinor::unit_i();
        assert_eq!(calc.mul(&LaurentSpinor::kappa(), &LaurentSpinor::kappa_star()).unwrap(), i);
        assert_eq!(calc.mul(&LaurentSpinor::unit_j(), &LaurentSpinor::unit_j()).unwrap(), -&i);
    }

    #[test]
    fn cocycle_kills_constants() {
        let calc = SphereCalculus::new();
        for x in [LaurentSpinor::kappa(), LaurentSpinor::mu(), LaurentSpinor::kappa_star()] {
            assert!(calc.cocycle(&LaurentSpinor::unit_i(), &x).is_zero());
        }
        assert_eq!(calc.cocycle(&LaurentSpinor::kappa_star(), &LaurentSpinor::kappa()), Scalar::i());
    }
}
