//! The central extension `ĝ(a)` of `C[φ±] ⊗ U(g)` and its extension `ĝ`
//! by the radial derivation `d`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::cell::RefCell;
use core::fmt;
use core::ops::{Add, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::enveloping::{u_mul, u_trace_form, weight_of, PBWMonomial, UElement};
use crate::error::{Error, Result};
use crate::lie::{LieAlgebra, RootWeight, ThetaTriple};
use crate::scalar::{Rational, Scalar};
use crate::sphere::{coeff_prefix, join_terms, LaurentSpinor, SphereCalculus};

/// `Σ φ_m ⊗ m + α a + β d` with one Laurent spinor per PBW monomial `m`.
///
/// Complex scalars move freely across the tensor sign, so this map is a
/// canonical form: equal elements have equal representations.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct GhatElement {
    terms: BTreeMap<PBWMonomial, LaurentSpinor>,
    a: Scalar,
    d: Scalar,
}

impl GhatElement {
    pub fn zero() -> Self {
        GhatElement::default()
    }

    /// The central element `a`.
    pub fn a() -> Self {
        GhatElement { a: Scalar::one(), ..GhatElement::default() }
    }

    /// The derivation `d`.
    pub fn d() -> Self {
        GhatElement { d: Scalar::one(), ..GhatElement::default() }
    }

    pub fn central(a: Scalar, d: Scalar) -> Self {
        GhatElement { terms: BTreeMap::new(), a, d }
    }

    /// `φ ⊗ X`.
    pub fn tensor(phi: &LaurentSpinor, x: &UElement) -> Self {
        let mut out = GhatElement::zero();
        out.add_tensor(phi, x);
        out
    }

    pub fn add_tensor(&mut self, phi: &LaurentSpinor, x: &UElement) {
        for (m, c) in x.terms() {
            let part = phi.scale(c);
            let slot = self.terms.entry(m.clone()).or_default();
            *slot = &*slot + &part;
            if slot.is_zero() {
                self.terms.remove(m);
            }
        }
    }

    pub fn a_coeff(&self) -> &Scalar {
        &self.a
    }

    pub fn d_coeff(&self) -> &Scalar {
        &self.d
    }

    /// The `(spinor, monomial)` pairs, one per PBW monomial.
    pub fn terms(&self) -> impl Iterator<Item = (&LaurentSpinor, &PBWMonomial)> {
        self.terms.iter().map(|(m, l)| (l, m))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty() && self.a.is_zero() && self.d.is_zero()
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        let mut out = GhatElement::central(&self.a * c, &self.d * c);
        for (m, l) in &self.terms {
            let x = l.scale(c);
            if !x.is_zero() {
                out.terms.insert(m.clone(), x);
            }
        }
        out
    }

    /// The part without `a` and `d`.
    pub fn loop_part(&self) -> Self {
        GhatElement { terms: self.terms.clone(), a: Scalar::zero(), d: Scalar::zero() }
    }

    pub fn render(&self, g: &LieAlgebra) -> String {
        struct R<'a>(&'a GhatElement, &'a LieAlgebra);
        impl fmt::Display for R<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                let R(x, g) = *self;
                let mut parts = Vec::new();
                for (m, l) in &x.terms {
                    let mono = m.render(g);
                    let spin = if l.len() == 1 {
                        let (i, c) = l.terms().next().expect("one term");
                        format!("{}{i}", coeff_prefix(c))
                    } else {
                        format!("({l})")
                    };
                    parts.push(format!("{spin} . {mono}"));
                }
                for (c, name) in [(&x.a, "a"), (&x.d, "d")] {
                    if !c.is_zero() {
                        parts.push(format!("{}{name}", coeff_prefix(c)));
                    }
                }
                join_terms(f, parts)
            }
        }
        format!("{}", R(self, g))
    }
}

impl Add for &GhatElement {
    type Output = GhatElement;
    fn add(self, o: &GhatElement) -> GhatElement {
        let mut out = GhatElement::central(&self.a + &o.a, &self.d + &o.d);
        out.terms = self.terms.clone();
        for (m, l) in &o.terms {
            let slot = out.terms.entry(m.clone()).or_default();
            *slot = &*slot + l;
            if slot.is_zero() {
                out.terms.remove(m);
            }
        }
        out
    }
}

impl Neg for &GhatElement {
    type Output = GhatElement;
    fn neg(self) -> GhatElement {
        self.scale(&-Scalar::one())
    }
}

impl Sub for &GhatElement {
    type Output = GhatElement;
    fn sub(self, o: &GhatElement) -> GhatElement {
        self + &-o
    }
}

/// `(N/2) δ + λ + c Λ₀` as an element of the dual of `ĥ`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GhatWeight {
    pub delta: Rational,
    pub lambda: RootWeight,
    pub lambda0: Rational,
}

impl GhatWeight {
    pub fn new(delta: Rational, lambda: RootWeight) -> Self {
        GhatWeight { delta, lambda, lambda0: Rational::zero() }
    }
}

impl Add for &GhatWeight {
    type Output = GhatWeight;
    fn add(self, o: &GhatWeight) -> GhatWeight {
        GhatWeight {
            delta: &self.delta + &o.delta,
            lambda: &self.lambda + &o.lambda,
            lambda0: &self.lambda0 + &o.lambda0,
        }
    }
}

/// Writes `1/2 d + a1`, with `d` standing for `δ` and `L0` for `Λ₀`.
impl fmt::Display for GhatWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (c, name) in [(&self.delta, "d"), (&self.lambda0, "L0")] {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let body = if mag.is_one() { String::from(name) } else { format!("{mag} {name}") };
            parts.push(if c.is_negative() { format!("-{body}") } else { body });
        }
        if !self.lambda.is_zero() {
            parts.push(format!("{}", self.lambda));
        }
        join_terms(f, parts)
    }
}

/// The generator families of `ĝ(a)` attached to a simple Lie algebra.
#[derive(Clone, Debug)]
pub struct Generators {
    pub theta: ThetaTriple,
    /// `(ê_i, f̂_i, ĥ_i)` = `I ⊗ (e_i, f_i, h_i)`.
    pub chevalley: Vec<(GhatElement, GhatElement, GhatElement)>,
    pub h_theta: GhatElement,
    pub e_j: GhatElement,
    pub f_j: GhatElement,
    pub e_kappa: GhatElement,
    pub f_kappa: GhatElement,
    pub e_mu: GhatElement,
    pub f_mu: GhatElement,
}

impl Generators {
    /// `(label, ê, f̂)` for the three families `J`, `κ`, `μ`.
    pub fn families(&self) -> [(&'static str, &GhatElement, &GhatElement); 3] {
        [("J", &self.e_j, &self.f_j), ("kappa", &self.e_kappa, &self.f_kappa), ("mu", &self.e_mu, &self.f_mu)]
    }

    /// All generators with their names.
    pub fn named(&self) -> Vec<(String, GhatElement)> {
        let mut out = Vec::new();
        for (i, (e, f, h)) in self.chevalley.iter().enumerate() {
            out.push((format!("e_{}", i + 1), e.clone()));
            out.push((format!("f_{}", i + 1), f.clone()));
            out.push((format!("h_{}", i + 1), h.clone()));
        }
        for (name, e, f) in self.families() {
            out.push((format!("e_{name}"), e.clone()));
            out.push((format!("f_{name}"), f.clone()));
        }
        out.push((String::from("h_theta"), self.h_theta.clone()));
        out
    }
}

/// Bracket and weight computations for `ĝ` over a fixed Lie algebra.
///
/// Holds caches for spinor products, cocycle values and trace forms, so it
/// should be reused across many brackets on one thread.
pub struct Ghat<'g> {
    g: &'g LieAlgebra,
    sphere: SphereCalculus,
    products: RefCell<BTreeMap<(PBWMonomial, PBWMonomial), UElement>>,
    traces: RefCell<BTreeMap<(PBWMonomial, PBWMonomial), Scalar>>,
}

impl<'g> Ghat<'g> {
    pub fn new(g: &'g LieAlgebra) -> Self {
        Ghat { g, sphere: SphereCalculus::new(), products: RefCell::default(), traces: RefCell::default() }
    }

    pub fn algebra(&self) -> &'g LieAlgebra {
        self.g
    }

    pub fn sphere(&self) -> &SphereCalculus {
        &self.sphere
    }

    fn mono(m: &PBWMonomial) -> UElement {
        UElement::term(m.clone(), Scalar::one())
    }

    fn u_product(&self, m1: &PBWMonomial, m2: &PBWMonomial) -> UElement {
        let key = (m1.clone(), m2.clone());
        if let Some(x) = self.products.borrow().get(&key) {
            return x.clone();
        }
        let x = u_mul(self.g, &Self::mono(m1), &Self::mono(m2));
        self.products.borrow_mut().insert(key, x.clone());
        x
    }

    fn trace(&self, m1: &PBWMonomial, m2: &PBWMonomial) -> Scalar {
        let key = (m1.clone(), m2.clone());
        if let Some(x) = self.traces.borrow().get(&key) {
            return x.clone();
        }
        let x = u_trace_form(self.g, &Self::mono(m1), &Self::mono(m2));
        self.traces.borrow_mut().insert(key, x.clone());
        x
    }

    /// `[d, x] = Σ d₀φ ⊗ X`.
    pub fn apply_d(&self, x: &GhatElement) -> GhatElement {
        let mut out = GhatElement::zero();
        for (m, l) in &x.terms {
            let dl = l.d0();
            if !dl.is_zero() {
                out.terms.insert(m.clone(), dl);
            }
        }
        out
    }

    /// `[φ⊗X, ψ⊗Y] = (φψ)⊗XY − (ψφ)⊗YX + (X|Y) c(φ,ψ) a`, `[d, φ⊗X] = d₀φ⊗X`,
    /// with `a` central.
    pub fn bracket(&self, x: &GhatElement, y: &GhatElement) -> GhatElement {
        let mut out = GhatElement::zero();
        for (m1, l1) in &x.terms {
            for (m2, l2) in &y.terms {
                let s12 = self.sphere.mul_bilinear(l1, l2);
                let s21 = self.sphere.mul_bilinear(l2, l1);
                out.add_tensor(&s12, &self.u_product(m1, m2));
                out.add_tensor(&-&s21, &self.u_product(m2, m1));
                let tf = self.trace(m1, m2);
                if !tf.is_zero() {
                    out.a += &(&tf * &self.sphere.cocycle_bilinear(l1, l2));
                }
            }
        }
        if !x.d.is_zero() {
            out = &out + &self.apply_d(y).scale(&x.d);
        }
        if !y.d.is_zero() {
            out = &out - &self.apply_d(x).scale(&y.d);
        }
        out
    }

    /// Weight of `φ ⊗ X` for homogeneous `φ` and single-weight `X`.
    pub fn weight_of_term(&self, phi: &LaurentSpinor, x: &UElement) -> Result<GhatWeight> {
        let grades = phi.grade();
        let mut weights = x.terms().map(|(m, _)| weight_of(self.g, m));
        let (Some(grade), Some(lambda)) = (grades.keys().next(), weights.next()) else {
            return Err(Error::Inhomogeneous);
        };
        if grades.len() != 1 || weights.any(|w| w != lambda) {
            return Err(Error::Inhomogeneous);
        }
        Ok(GhatWeight::new(Rational::new((*grade).into(), 2.into()), lambda))
    }

    /// Splits `x` into simultaneous ad(ĥ)-eigenspaces.
    pub fn weight_decompose(&self, x: &GhatElement) -> BTreeMap<GhatWeight, GhatElement> {
        let mut out: BTreeMap<GhatWeight, GhatElement> = BTreeMap::new();
        for (m, l) in &x.terms {
            let lambda = weight_of(self.g, m);
            for (grade, part) in l.grade() {
                let w = GhatWeight::new(Rational::new(grade.into(), 2.into()), lambda.clone());
                let slot = out.entry(w).or_default();
                slot.terms.insert(m.clone(), part);
            }
        }
        if !x.a.is_zero() || !x.d.is_zero() {
            let w = GhatWeight::new(Rational::zero(), RootWeight::zero(self.g.rank()));
            let slot = out.entry(w).or_default();
            slot.a = x.a.clone();
            slot.d = x.d.clone();
        }
        out
    }

    /// True when `[d, x] = 0`.
    pub fn centralizer_of_d(&self, x: &GhatElement) -> bool {
        self.bracket(&GhatElement::d(), x).is_zero()
    }

    /// The Chevalley generators and the `J`, `κ`, `μ` families.
    pub fn generators(&self) -> Result<Generators> {
        let g = self.g;
        let theta = g.highest_root_triple()?;
        let rd = g.root_data()?;
        let dim = g.dim();
        let i = LaurentSpinor::unit_i();
        let lift = |phi: &LaurentSpinor, x: &crate::lie::LieElement| GhatElement::tensor(phi, &UElement::from_lie(x));
        let chevalley = rd
            .simple
            .iter()
            .map(|&(e, f, h)| {
                (
                    GhatElement::tensor(&i, &UElement::generator(dim, e)),
                    GhatElement::tensor(&i, &UElement::generator(dim, f)),
                    GhatElement::tensor(&i, &UElement::generator(dim, h)),
                )
            })
            .collect();
        let (et, ft) = (&theta.e_theta, &theta.e_minus_theta);
        Ok(Generators {
            chevalley,
            h_theta: lift(&i, &theta.h_theta),
            e_j: lift(&-&LaurentSpinor::unit_j(), et),
            f_j: lift(&LaurentSpinor::unit_j(), ft),
            e_kappa: lift(&LaurentSpinor::kappa_star(), et),
            f_kappa: lift(&LaurentSpinor::kappa(), ft),
            e_mu: lift(&LaurentSpinor::mu_star(), et),
            f_mu: lift(&LaurentSpinor::mu(), ft),
            theta,
        })
    }
}

/// One-off bracket; prefer [`Ghat::bracket`] for repeated use.
pub fn ghat_bracket(g: &LieAlgebra, x: &GhatElement, y: &GhatElement) -> GhatElement {
    Ghat::new(g).bracket(x, y)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::build_sl;
    use alloc::string::ToString;

    fn gen(g: &LieAlgebra, label: &str) -> UElement {
        UElement::generator(g.dim(), g.index_of(label).unwrap())
    }

    #[test]
    fn constant_spinors_reproduce_g() {
        let g = build_sl(2).unwrap();
        let gh = Ghat::new(&g);
        let i = LaurentSpinor::unit_i();
        let x = gh.bracket(&GhatElement::tensor(&i, &gen(&g, "e_1")), &GhatElement::tensor(&i, &gen(&g, "f_1")));
        assert_eq!(x, GhatElement::tensor(&i, &gen(&g, "h_1")));
    }

    #[test]
    fn d_acts_by_half_grade() {
        let g = build_sl(2).unwrap();
        let gh = Ghat::new(&g);
        let x = GhatElement::tensor(&LaurentSpinor::mu(), &gen(&g, "e_1"));
        assert_eq!(gh.bracket(&GhatElement::d(), &x), x.scale(&Scalar::from_ratio(-3, 2)));
        assert!(gh.bracket(&GhatElement::a(), &x).is_zero());
        assert!(gh.bracket(&GhatElement::d(), &GhatElement::a()).is_zero());
    }

    #[test]
    fn weights_of_terms() {
        let g = build_sl(2).unwrap();
        let gh = Ghat::new(&g);
        let w = gh.weight_of_term(&LaurentSpinor::kappa(), &gen(&g, "e_1")).unwrap();
        assert_eq!(w.to_string(), "1/2 d + a1");
        let fe = u_mul(&g, &gen(&g, "f_1"), &gen(&g, "e_1"));
        assert_eq!(gh.weight_of_term(&LaurentSpinor::mu(), &fe).unwrap().to_string(), "-3/2 d");
        assert_eq!(gh.weight_of_term(&LaurentSpinor::unit_i(), &gen(&g, "h_1")).unwrap().to_string(), "0");
        let mixed = &LaurentSpinor::kappa() + &LaurentSpinor::mu();
        assert_eq!(gh.weight_of_term(&mixed, &gen(&g, "e_1")), Err(Error::Inhomogeneous));
    }

    #[test]
    fn decomposition_and_centralizer() {
        let g = build_sl(2).unwrap();
        let gh = Ghat::new(&g);
        let x = &GhatElement::tensor(&LaurentSpinor::kappa(), &gen(&g, "e_1"))
            + &GhatElement::tensor(&LaurentSpinor::mu(), &gen(&g, "f_1"));
        let parts = gh.weight_decompose(&x);
        let names: Vec<String> = parts.keys().map(|w| w.to_string()).collect();
        assert_eq!(names, ["-3/2 d - a1", "1/2 d + a1"]);
        assert_eq!(gh.weight_decompose(&(&GhatElement::a() + &GhatElement::d())).len(), 1);
        let kk = gh.sphere().mul(&LaurentSpinor::kappa(), &LaurentSpinor::kappa_star()).unwrap();
        assert!(gh.centralizer_of_d(&GhatElement::tensor(&kk, &gen(&g, "e_1"))));
        assert!(!gh.centralizer_of_d(&GhatElement::tensor(&LaurentSpinor::kappa(), &gen(&g, "e_1"))));
        assert!(gh.centralizer_of_d(&(&GhatElement::a() + &GhatElement::d())));
    }

    #[test]
    fn chevalley_relations() {
        let g = build_sl(2).unwrap();
        let gh = Ghat::new(&g);
        let gens = gh.generators().unwrap();
        let (e, f, h) = &gens.chevalley[0];
        assert_eq!(gh.bracket(h, e), e.scale(&Scalar::from_int(2)));
        assert_eq!(gh.bracket(e, f), *h);
        assert_eq!(gh.bracket(&gens.e_j, &gens.f_j), gens.h_theta);
    }
}
