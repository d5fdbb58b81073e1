//! The universal enveloping algebra in PBW normal form.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, Neg, Sub};

use crate::lie::{BasisRole, LieAlgebra, LieElement, RootWeight};
use crate::linalg::Matrix;
use crate::scalar::Scalar;

/// Exponents over the ordered basis of the Lie algebra.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PBWMonomial(pub Vec<u32>);

impl PBWMonomial {
    pub fn one(dim: usize) -> Self {
        PBWMonomial(vec![0; dim])
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    /// The ordered word `x_1^{n_1} x_2^{n_2} …` as a list of basis indices.
    pub fn word(&self) -> Vec<usize> {
        self.0.iter().enumerate().flat_map(|(i, &n)| core::iter::repeat_n(i, n as usize)).collect()
    }

    /// Rendered as `f_1^2*h_1`, or `1` for the empty word.
    pub fn render(&self, g: &LieAlgebra) -> String {
        let parts: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &n)| n > 0)
            .map(|(i, &n)| if n == 1 { String::from(g.label(i)) } else { format!("{}^{n}", g.label(i)) })
            .collect();
        if parts.is_empty() {
            String::from("1")
        } else {
            parts.join("*")
        }
    }
}

/// Which adjacent out-of-order pair the normal-ordering rewrite fixes first.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    Leftmost,
    Rightmost,
}

/// A finite combination of PBW monomials.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct UElement {
    terms: BTreeMap<PBWMonomial, Scalar>,
}

impl UElement {
    pub fn zero() -> Self {
        UElement::default()
    }

    pub fn one(dim: usize) -> Self {
        UElement::term(PBWMonomial::one(dim), Scalar::one())
    }

    pub fn term(m: PBWMonomial, c: Scalar) -> Self {
        let mut out = UElement::zero();
        out.add_term(m, c);
        out
    }

    /// The basis vector `b_i` as a degree-one element.
    pub fn generator(dim: usize, i: usize) -> Self {
        let mut m = PBWMonomial::one(dim);
        m.0[i] = 1;
        UElement::term(m, Scalar::one())
    }

    pub fn from_lie(x: &LieElement) -> Self {
        let mut out = UElement::zero();
        for (i, c) in x.support() {
            out = &out + &UElement::generator(x.0.len(), i).scale(c);
        }
        out
    }

    pub fn add_term(&mut self, m: PBWMonomial, c: Scalar) {
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

    pub fn terms(&self) -> impl Iterator<Item = (&PBWMonomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &PBWMonomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.terms.keys().map(PBWMonomial::degree).max().unwrap_or(0)
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        let mut out = UElement::zero();
        for (m, x) in &self.terms {
            out.add_term(m.clone(), x * c);
        }
        out
    }

    /// Rendered highest degree first, e.g. `f_1^2*e_1 + 2*f_1*h_1 - 2*f_1`.
    pub fn render(&self, g: &LieAlgebra) -> String {
        let mut order: Vec<(&PBWMonomial, &Scalar)> = self.terms.iter().collect();
        order.sort_by(|a, b| (b.0.degree(), b.0).cmp(&(a.0.degree(), a.0)));
        let mut out = String::new();
        for (m, c) in order {
            let mono = m.render(g);
            let term = if m.degree() == 0 {
                if c.terms().count() > 1 {
                    format!("({c})")
                } else {
                    format!("{c}")
                }
            } else {
                format!("{}{mono}", crate::sphere::coeff_prefix(c))
            };
            if out.is_empty() {
                out = term;
            } else if let Some(r) = term.strip_prefix('-') {
                out.push_str(" - ");
                out.push_str(r);
            } else {
                out.push_str(" + ");
                out.push_str(&term);
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

impl Add for &UElement {
    type Output = UElement;
    fn add(self, o: &UElement) -> UElement {
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &UElement {
    type Output = UElement;
    fn sub(self, o: &UElement) -> UElement {
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Neg for &UElement {
    type Output = UElement;
    fn neg(self) -> UElement {
        UElement { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
}

/// Normal-orders a word of basis indices by `x_b x_a → x_a x_b + [x_b, x_a]`.
pub fn normal_form(g: &LieAlgebra, word: &[usize], strategy: Strategy) -> UElement {
    let dim = g.dim();
    let mut out = UElement::zero();
    let mut work: BTreeMap<Vec<usize>, Scalar> = BTreeMap::new();
    work.insert(word.to_vec(), Scalar::one());
    while let Some((w, c)) = work.pop_first() {
        if c.is_zero() {
            continue;
        }
        let descent = match strategy {
            Strategy::Leftmost => (0..w.len().saturating_sub(1)).find(|&p| w[p] > w[p + 1]),
            Strategy::Rightmost => (0..w.len().saturating_sub(1)).rev().find(|&p| w[p] > w[p + 1]),
        };
        let Some(p) = descent else {
            let mut m = PBWMonomial::one(dim);
            for &i in &w {
                m.0[i] += 1;
            }
            out.add_term(m, c);
            continue;
        };
        let mut swapped = w.clone();
        swapped.swap(p, p + 1);
        add_work(&mut work, swapped, c.clone());
        for (k, s) in g.basis_bracket(w[p], w[p + 1]).support() {
            let mut shorter = Vec::with_capacity(w.len() - 1);
            shorter.extend_from_slice(&w[..p]);
            shorter.push(k);
            shorter.extend_from_slice(&w[p + 2..]);
            add_work(&mut work, shorter, &c * s);
        }
    }
    out
}

fn add_work(work: &mut BTreeMap<Vec<usize>, Scalar>, w: Vec<usize>, c: Scalar) {
    let e = work.entry(w).or_default();
    *e += &c;
}

/// Product in `U(g)`, returned in PBW normal form.
pub fn u_mul(g: &LieAlgebra, x: &UElement, y: &UElement) -> UElement {
    u_mul_with(g, x, y, Strategy::Leftmost)
}

pub fn u_mul_with(g: &LieAlgebra, x: &UElement, y: &UElement, strategy: Strategy) -> UElement {
    let mut out = UElement::zero();
    for (m1, c1) in x.terms() {
        for (m2, c2) in y.terms() {
            let mut w = m1.word();
            w.extend(m2.word());
            let c = c1 * c2;
            for (m, s) in normal_form(g, &w, strategy).terms() {
                out.add_term(m.clone(), s * &c);
            }
        }
    }
    out
}

/// `x y − y x`.
pub fn u_commutator(g: &LieAlgebra, x: &UElement, y: &UElement) -> UElement {
    &u_mul(g, x, y) - &u_mul(g, y, x)
}

/// Sum of the basis weights, counted with multiplicity.
pub fn weight_of(g: &LieAlgebra, m: &PBWMonomial) -> RootWeight {
    let mut w = RootWeight::zero(g.rank());
    for (i, &n) in m.0.iter().enumerate() {
        if n > 0 {
            w = &w + &g.basis_weight(i).scale(n as i64);
        }
    }
    w
}

/// Splits `x` into ad(h)-weight components.
pub fn weight_decompose(g: &LieAlgebra, x: &UElement) -> BTreeMap<RootWeight, UElement> {
    let mut out: BTreeMap<RootWeight, UElement> = BTreeMap::new();
    for (m, c) in x.terms() {
        out.entry(weight_of(g, m)).or_default().add_term(m.clone(), c.clone());
    }
    out
}

/// The image of a monomial under the adjoint representation.
pub fn adjoint_image(g: &LieAlgebra, m: &PBWMonomial) -> Matrix {
    let mut out = Matrix::identity(g.dim());
    for i in m.word() {
        out = &out * g.ad_basis(i);
    }
    out
}

pub fn adjoint_image_of(g: &LieAlgebra, x: &UElement) -> Matrix {
    let mut out = Matrix::zero(g.dim());
    for (m, c) in x.terms() {
        out = &out + &adjoint_image(g, m).scale(c);
    }
    out
}

/// `(x|y) = tr(ρ(x) ρ(y))` with `ρ` the adjoint representation of `U(g)`.
pub fn u_trace_form(g: &LieAlgebra, x: &UElement, y: &UElement) -> Scalar {
    adjoint_image_of(g, x).trace_product(&adjoint_image_of(g, y))
}

/// True when the monomial uses only simple root vectors and the Cartan part.
pub fn in_simple_span(g: &LieAlgebra, m: &PBWMonomial) -> bool {
    let Some(roles) = g.roles() else { return false };
    m.0.iter().zip(roles).all(|(&n, role)| {
        n == 0
            || match role {
                BasisRole::Cartan(_) => true,
                BasisRole::Negative(r) | BasisRole::Positive(r) => r.height() == 1,
            }
    })
}
