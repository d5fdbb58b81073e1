//! Mechanised invariant suites with per-case reports.
//!
//! Every check returns [`Case`]s carrying the offending element on failure,
//! so a report can be printed or serialised without rerunning anything.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::enveloping::{PBWMonomial, UElement};
use crate::error::{Error, Result};
use crate::ghat::{Ghat, GhatElement, GhatWeight};
use crate::lie::LieAlgebra;
use crate::poly::Poly;
use crate::scalar::{rat, Rational, Scalar};
use crate::sphere::{basis_indices, restrict, BasisIndex, LaurentSpinor, RestrictedSpinor, SphereCalculus};
use crate::spinor::{dirac, tangential_dirac, theta_raw, Dirac, Sign};

/// The available suites.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    Cocycle,
    JacobiA,
    JacobiD,
    Eigen,
    Ortho,
    Generators,
    Grading,
    Table,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::Cocycle,
        Suite::JacobiA,
        Suite::JacobiD,
        Suite::Eigen,
        Suite::Ortho,
        Suite::Generators,
        Suite::Grading,
        Suite::Table,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Cocycle => "cocycle",
            Suite::JacobiA => "jacobi_a",
            Suite::JacobiD => "jacobi_d",
            Suite::Eigen => "eigen",
            Suite::Ortho => "ortho",
            Suite::Generators => "generators",
            Suite::Grading => "grading",
            Suite::Table => "table",
        }
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Suite> {
        Suite::ALL.into_iter().find(|x| x.name() == s).ok_or_else(|| Error::Range(format!("unknown suite `{s}`")))
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One checked statement. `detail` holds the counterexample on failure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Case {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Case {
    pub fn pass(name: impl Into<String>) -> Self {
        Case { name: name.into(), passed: true, detail: String::new() }
    }

    pub fn fail(name: impl Into<String>, detail: impl Into<String>) -> Self {
        Case { name: name.into(), passed: false, detail: detail.into() }
    }

    pub fn check(name: impl Into<String>, ok: bool, detail: impl FnOnce() -> String) -> Self {
        if ok {
            Case::pass(name)
        } else {
            Case::fail(name, detail())
        }
    }

    /// Passes when `got == want`; otherwise records both.
    pub fn equal<T: PartialEq + fmt::Display>(name: impl Into<String>, got: &T, want: &T) -> Self {
        Case::check(name, got == want, || format!("got {got}, expected {want}"))
    }
}

/// The outcome of one suite. `notes` carries measured values worth showing
/// even when everything passes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub suite: Suite,
    pub cases: Vec<Case>,
    pub notes: Vec<String>,
}

impl Report {
    pub fn passed(&self) -> usize {
        self.cases.iter().filter(|c| c.passed).count()
    }

    pub fn total(&self) -> usize {
        self.cases.len()
    }

    pub fn all_passed(&self) -> bool {
        self.cases.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Case> {
        self.cases.iter().filter(|c| !c.passed)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Options {
    /// Bound on the basis degree `m` for suites that range over basis spinors.
    pub max_m: u32,
}

impl Default for Options {
    fn default() -> Self {
        Options { max_m: 2 }
    }
}

/// Runs one suite against `g`.
pub fn verify_suite(g: &LieAlgebra, suite: Suite, opts: Options) -> Result<Report> {
    let gh = Ghat::new(g);
    let calc = gh.sphere();
    let mut notes = Vec::new();
    let cases = match suite {
        Suite::Cocycle => {
            let mut v = cocycle_witnesses(calc);
            v.extend(cocycle_antisymmetry(calc, opts.max_m));
            v.extend(cocycle_cyclic(calc));
            v.extend(skew_derivation(calc, opts.max_m));
            v
        }
        Suite::JacobiA => {
            let elems = named_elements(g)?;
            let mut v = ghat_antisymmetry(&gh, &elems);
            v.extend(jacobi_a(&gh, &elems));
            v
        }
        Suite::JacobiD => {
            let v = jacobi_d(&gh, &named_elements(g)?, opts.max_m)?;
            let status = match v.iter().find(|c| !c.passed) {
                None => String::from("holds on all sampled pairs"),
                Some(c) => format!("fails; first divergent triple: {}: {}", c.name, c.detail),
            };
            notes.push(format!("d-Jacobi identity {status}"));
            v
        }
        Suite::Eigen => {
            let mut v = eigenvalues(opts.max_m);
            v.extend(multiplicities(opts.max_m));
            v.extend(harmonicity(opts.max_m));
            v.extend(theta_expansion(calc, opts.max_m));
            v
        }
        Suite::Ortho => orthonormality(calc, opts.max_m),
        Suite::Generators => {
            let (v, charges) = generator_relations(&gh)?;
            for (name, c) in charges {
                notes.push(format!("central charge {name}: {c}"));
            }
            v
        }
        Suite::Grading => {
            let mut v = weight_diagonal(&gh, opts.max_m)?;
            v.extend(bracket_grading(&gh)?);
            v
        }
        Suite::Table => {
            notes.push(format!("corrected identity: {}", corrected_identity(calc)?));
            let mut v = generator_table(calc)?;
            v.extend(star_lemma(calc)?);
            v
        }
    };
    Ok(Report { suite, cases, notes })
}

/// `I, J, κ, κ*, μ, μ*` with their names.
pub fn named_spinors() -> [(&'static str, LaurentSpinor); 6] {
    [
        ("I", LaurentSpinor::unit_i()),
        ("J", LaurentSpinor::unit_j()),
        ("kappa", LaurentSpinor::kappa()),
        ("kappa*", LaurentSpinor::kappa_star()),
        ("mu", LaurentSpinor::mu()),
        ("mu*", LaurentSpinor::mu_star()),
    ]
}

/// The U-parts for the Lie-algebra suites: the full basis for rank one,
/// the Chevalley generators otherwise.
fn u_samples(g: &LieAlgebra) -> Result<Vec<usize>> {
    if g.dim() == 3 {
        return Ok((0..3).collect());
    }
    Ok(g.root_data()?.simple.iter().flat_map(|&(e, f, h)| [e, f, h]).collect())
}

/// Named spinors tensored with the sample U-parts.
pub fn named_elements(g: &LieAlgebra) -> Result<Vec<(String, GhatElement)>> {
    let mut out = Vec::new();
    for (s, phi) in named_spinors() {
        for &i in &u_samples(g)? {
            let x = GhatElement::tensor(&phi, &UElement::generator(g.dim(), i));
            out.push((format!("{s}.{}", g.label(i)), x));
        }
    }
    Ok(out)
}

// Cocycle

/// Witness values `c(κ*,κ) = i`, `c(κ,κ*) = −i`, `c(μ,μ*) = −i/2`, `c(J,−J) = 0`.
pub fn cocycle_witnesses(calc: &SphereCalculus) -> Vec<Case> {
    let i = Scalar::i();
    let half = Scalar::from_ratio(1, 2);
    let j = LaurentSpinor::unit_j();
    let table = [
        ("c(kappa*, kappa)", LaurentSpinor::kappa_star(), LaurentSpinor::kappa(), i.clone()),
        ("c(kappa, kappa*)", LaurentSpinor::kappa(), LaurentSpinor::kappa_star(), -&i),
        ("c(mu, mu*)", LaurentSpinor::mu(), LaurentSpinor::mu_star(), -&(&i * &half)),
        ("c(J, -J)", j.clone(), -&j, Scalar::zero()),
    ];
    table.into_iter().map(|(name, x, y, want)| Case::equal(name, &calc.cocycle_bilinear(&x, &y), &want)).collect()
}

/// `c(A,B) + c(B,A) = 0` for basis spinors with `m ≤ max_m`.
pub fn cocycle_antisymmetry(calc: &SphereCalculus, max_m: u32) -> Vec<Case> {
    let basis = basis_indices(max_m);
    let mut out = Vec::new();
    for (n, &a) in basis.iter().enumerate() {
        for &b in &basis[n..] {
            let s = &calc.basis_cocycle(a, b) + &calc.basis_cocycle(b, a);
            out.push(Case::check(format!("antisymmetry c({a}, {b})"), s.is_zero(), || {
                format!("c(A,B) + c(B,A) = {s}")
            }));
        }
    }
    out
}

/// `c([x,y],z) + c([y,z],x) + c([z,x],y) = 0` on the named spinors, with
/// `[x,y] = xy − yx`.
pub fn cocycle_cyclic(calc: &SphereCalculus) -> Vec<Case> {
    let named = named_spinors();
    let br = |x: &LaurentSpinor, y: &LaurentSpinor| &calc.mul_bilinear(x, y) - &calc.mul_bilinear(y, x);
    let mut out = Vec::new();
    for (a, (na, x)) in named.iter().enumerate() {
        for (b, (nb, y)) in named.iter().enumerate().skip(a) {
            for (nc, z) in named.iter().skip(b) {
                let s = &(&calc.cocycle_bilinear(&br(x, y), z) + &calc.cocycle_bilinear(&br(y, z), x))
                    + &calc.cocycle_bilinear(&br(z, x), y);
                out.push(Case::check(format!("cyclic ({na}, {nb}, {nc})"), s.is_zero(), || {
                    format!("cyclic sum = {s}")
                }));
            }
        }
    }
    out
}

/// `c(d₀A, B) + c(A, d₀B) = 0` for basis spinors with `m ≤ max_m`.
pub fn skew_derivation(calc: &SphereCalculus, max_m: u32) -> Vec<Case> {
    let basis = basis_indices(max_m);
    let mut out = Vec::new();
    for &a in &basis {
        for &b in &basis {
            let (x, y) = (LaurentSpinor::basis(a), LaurentSpinor::basis(b));
            let s = &calc.cocycle_bilinear(&x.d0(), &y) + &calc.cocycle_bilinear(&x, &y.d0());
            out.push(Case::check(format!("skew-derivation ({a}, {b})"), s.is_zero(), || {
                format!("c(d0 A, B) + c(A, d0 B) = {s}")
            }));
        }
    }
    out
}

// Lie algebra structure

pub fn ghat_antisymmetry(gh: &Ghat<'_>, elems: &[(String, GhatElement)]) -> Vec<Case> {
    let g = gh.algebra();
    let mut out = Vec::new();
    for (n, (nx, x)) in elems.iter().enumerate() {
        for (ny, y) in &elems[n..] {
            let s = &gh.bracket(x, y) + &gh.bracket(y, x);
            out.push(Case::check(format!("antisymmetry [{nx}, {ny}]"), s.is_zero(), || {
                format!("[x,y] + [y,x] = {}", s.render(g))
            }));
        }
    }
    out
}

/// `[x,[y,z]] + [y,[z,x]] + [z,[x,y]] = 0` on all ordered triples.
pub fn jacobi_a(gh: &Ghat<'_>, elems: &[(String, GhatElement)]) -> Vec<Case> {
    let g = gh.algebra();
    let n = elems.len();
    let inner: Vec<Vec<GhatElement>> =
        (0..n).map(|a| (0..n).map(|b| gh.bracket(&elems[a].1, &elems[b].1)).collect()).collect();
    let mut out = Vec::new();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let (x, y, z) = (&elems[a].1, &elems[b].1, &elems[c].1);
                let s = &(&gh.bracket(x, &inner[b][c]) + &gh.bracket(y, &inner[c][a])) + &gh.bracket(z, &inner[a][b]);
                let name = format!("jacobi ({}, {}, {})", elems[a].0, elems[b].0, elems[c].0);
                out.push(Case::check(name, s.is_zero(), || format!("Jacobi sum = {}", s.render(g))));
            }
        }
    }
    out
}

/// `[d,[x,y]] = [[d,x],y] + [x,[d,y]]` on pairs of named elements and on
/// `φ_A ⊗ e, φ_B ⊗ f` for basis spinors with `m ≤ max_m`.
pub fn jacobi_d(gh: &Ghat<'_>, elems: &[(String, GhatElement)], max_m: u32) -> Result<Vec<Case>> {
    let g = gh.algebra();
    let d = GhatElement::d();
    let check = |nx: &str, ny: &str, x: &GhatElement, y: &GhatElement| {
        let lhs = gh.bracket(&d, &gh.bracket(x, y));
        let rhs = &gh.bracket(&gh.bracket(&d, x), y) + &gh.bracket(x, &gh.bracket(&d, y));
        let diff = &lhs - &rhs;
        Case::check(format!("d-jacobi (d, {nx}, {ny})"), diff.is_zero(), || {
            format!("[d,[x,y]] - [[d,x],y] - [x,[d,y]] = {}", diff.render(g))
        })
    };
    let mut out = Vec::new();
    for (nx, x) in elems {
        for (ny, y) in elems {
            out.push(check(nx, ny, x, y));
        }
    }
    let (e, f, _) = g.root_data()?.simple[0];
    let (ue, uf) = (UElement::generator(g.dim(), e), UElement::generator(g.dim(), f));
    let basis = basis_indices(max_m);
    for &a in &basis {
        for &b in &basis {
            let x = GhatElement::tensor(&LaurentSpinor::basis(a), &ue);
            let y = GhatElement::tensor(&LaurentSpinor::basis(b), &uf);
            out.push(check(&format!("{a}.{}", g.label(e)), &format!("{b}.{}", g.label(f)), &x, &y));
        }
    }
    Ok(out)
}

// Spectral data

/// The tangential Dirac operator acts on `φ^{+(m,l,k)}` by `m/2` and on
/// `φ^{−(m,l,k)}` by `−(m+3)/2`.
pub fn eigenvalues(max_m: u32) -> Vec<Case> {
    basis_indices(max_m)
        .into_iter()
        .map(|a| {
            let field = a.field();
            let got = restrict(&tangential_dirac(&field));
            let want = restrict(&field).scale(&Scalar::from_rational(a.eigenvalue()));
            Case::equal(format!("eigenvalue {a}"), &got, &want)
        })
        .collect()
}

/// Each eigenvalue `m/2` and `−(m+3)/2` has multiplicity `(m+1)(m+2)`.
pub fn multiplicities(max_m: u32) -> Vec<Case> {
    let mut counts: BTreeMap<Rational, usize> = BTreeMap::new();
    for a in basis_indices(max_m) {
        *counts.entry(a.eigenvalue()).or_default() += 1;
    }
    let mut out = Vec::new();
    for m in 0..=max_m {
        let want = ((m + 1) * (m + 2)) as usize;
        for (sign, ev) in [("+", rat(m as i64, 2)), ("-", rat(-(m as i64) - 3, 2))] {
            let got = counts.get(&ev).copied().unwrap_or(0);
            out.push(Case::equal(format!("multiplicity {sign} m={m}"), &got, &want));
        }
    }
    out
}

/// `D φ = 0` on `C² ∖ {0}`.
pub fn harmonicity(max_m: u32) -> Vec<Case> {
    basis_indices(max_m)
        .into_iter()
        .map(|a| {
            let out = dirac(&a.field(), Dirac::D);
            Case::check(format!("harmonic {a}"), out.is_zero(), || format!("D phi = {out:?}"))
        })
        .collect()
}

/// The two-term expansion of `θφ` for every basis spinor.
pub fn theta_expansion(calc: &SphereCalculus, max_m: u32) -> Vec<Case> {
    basis_indices(max_m)
        .into_iter()
        .map(|a| {
            let got = restrict(&theta_raw(&a.field()));
            let want = calc.evaluate(&theta_formula(a));
            Case::equal(format!("theta {a}"), &got, &want)
        })
        .collect()
}

/// `θφ^{±(m,l,k)}` as a combination of two basis spinors.
pub fn theta_formula(a: BasisIndex) -> LaurentSpinor {
    let (m, l, k) = (a.m as i64, a.l as i64, a.k as i64);
    let parity = |e: i64| if e % 2 == 0 { Scalar::one() } else { -Scalar::one() };
    let mut out = LaurentSpinor::zero();
    match a.sign {
        Sign::Plus => {
            out.add_term(a, Scalar::from_rational(rat(m - 2 * k, 1) + rat(2 * k, m + 1)));
            if k > 0 && k <= m {
                let c = &Scalar::sqrt(&rat(k * (m + 1 - k), 1)) * &Scalar::from_ratio(2, m + 1);
                let idx = BasisIndex::new(Sign::Minus, a.m - 1, a.k - 1, a.l).expect("k ≥ 1 and k ≤ m");
                out.add_term(idx, &parity(l) * &c);
            }
        }
        Sign::Minus => {
            out.add_term(a, Scalar::from_rational(rat((m - 2 * l) * (m + 3), m + 2)));
            let c = &Scalar::sqrt(&rat((l + 1) * (m + 1 - l), 1)) * &Scalar::from_ratio(2, m + 2);
            let idx = BasisIndex::new(Sign::Plus, a.m + 1, a.k, a.l + 1).expect("in range");
            out.add_term(idx, &parity(k) * &c);
        }
    }
    out
}

/// `⟨φ_A, φ_B⟩ = δ_AB`, one case per `A`.
pub fn orthonormality(calc: &SphereCalculus, max_m: u32) -> Vec<Case> {
    let basis = basis_indices(max_m);
    basis
        .iter()
        .map(|&a| {
            let fa = calc.restricted(a);
            let bad = basis.iter().find_map(|&b| {
                let got = calc.coefficient(&fa, b);
                let want = if a == b { Scalar::one() } else { Scalar::zero() };
                (got != want).then(|| format!("<{a}, {b}> = {got}"))
            });
            match bad {
                None => Case::pass(format!("orthonormal {a}")),
                Some(d) => Case::fail(format!("orthonormal {a}"), d),
            }
        })
        .collect()
}

// Generators

/// `(family, measured central charge)` pairs.
pub type Charges = Vec<(String, String)>;

/// Chevalley relations, the vanishing brackets between the families and the
/// simple generators, and the three central charges. Also returns the
/// measured charges `[ê, f̂] − ĥ_θ`.
pub fn generator_relations(gh: &Ghat<'_>) -> Result<(Vec<Case>, Charges)> {
    let g = gh.algebra();
    let gens = gh.generators()?;
    let rd = g.root_data()?;
    let r = |x: &GhatElement| x.render(g);
    let mut out = Vec::new();
    for (i, (ei, _, hi)) in gens.chevalley.iter().enumerate() {
        for (j, (ej, fj, _)) in gens.chevalley.iter().enumerate() {
            let (a, b) = (i + 1, j + 1);
            let want = if i == j { hi.clone() } else { GhatElement::zero() };
            let got = gh.bracket(ei, fj);
            out.push(Case::check(format!("[e_{a}, f_{b}]"), got == want, || format!("got {}", r(&got))));
            let aij = Scalar::from_int(rd.cartan[i][j]);
            let got = gh.bracket(hi, ej);
            let want = ej.scale(&aij);
            out.push(Case::check(format!("[h_{a}, e_{b}]"), got == want, || {
                format!("got {}, expected {}", r(&got), r(&want))
            }));
            let got = gh.bracket(hi, fj);
            let want = fj.scale(&-&aij);
            out.push(Case::check(format!("[h_{a}, f_{b}]"), got == want, || {
                format!("got {}, expected {}", r(&got), r(&want))
            }));
        }
    }
    for (name, e, f) in gens.families() {
        for (i, (ei, fi, _)) in gens.chevalley.iter().enumerate() {
            let n = i + 1;
            let got = gh.bracket(e, fi);
            out.push(Case::check(format!("[e_{name}, f_{n}] = 0"), got.is_zero(), || format!("got {}", r(&got))));
            let got = gh.bracket(f, ei);
            out.push(Case::check(format!("[f_{name}, e_{n}] = 0"), got.is_zero(), || format!("got {}", r(&got))));
        }
    }
    let i = Scalar::i();
    let expected = [("J", Scalar::zero()), ("kappa", -&i), ("mu", -&(&i * &Scalar::from_ratio(1, 2)))];
    let mut charges = Vec::new();
    for ((name, e, f), (_, want)) in gens.families().into_iter().zip(expected) {
        let rest = &gh.bracket(e, f) - &gens.h_theta;
        let measured = if rest.terms().next().is_none() && rest.d_coeff().is_zero() {
            rest.a_coeff().to_string()
        } else {
            format!("not central: {}", r(&rest))
        };
        charges.push((String::from(name), measured));
        let target = &gens.h_theta + &GhatElement::central(want.clone(), Scalar::zero());
        let got = &rest + &gens.h_theta;
        out.push(Case::check(format!("[e_{name}, f_{name}] = h_theta + ({want}) a"), got == target, || {
            format!("got {}", r(&got))
        }));
    }
    Ok((out, charges))
}

// Weights

/// All PBW monomials of degree at most `deg`.
pub fn pbw_monomials(dim: usize, deg: u32) -> Vec<PBWMonomial> {
    let mut out = vec![PBWMonomial::one(dim)];
    let mut frontier = out.clone();
    for _ in 0..deg {
        let mut next = Vec::new();
        for m in &frontier {
            let last = m.word().last().copied().unwrap_or(0);
            for i in last..dim {
                let mut e = m.0.clone();
                e[i] += 1;
                next.push(PBWMonomial(e));
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

fn pairing(g: &LieAlgebra, w: &GhatWeight, i: usize) -> Result<Rational> {
    let rd = g.root_data()?;
    Ok(w.lambda.0.iter().enumerate().map(|(j, c)| rat(c * rd.cartan[i][j], 1)).sum())
}

/// `ad(ĥ)` acts on `φ_A ⊗ w` by the scalar `(N/2)δ + λ`.
pub fn weight_diagonal(gh: &Ghat<'_>, max_m: u32) -> Result<Vec<Case>> {
    let g = gh.algebra();
    let gens = gh.generators()?;
    let mut out = Vec::new();
    for a in basis_indices(max_m) {
        let phi = LaurentSpinor::basis(a);
        for m in pbw_monomials(g.dim(), 2) {
            let u = UElement::term(m.clone(), Scalar::one());
            let x = GhatElement::tensor(&phi, &u);
            let w = gh.weight_of_term(&phi, &u)?;
            let mut bad = None;
            let got = gh.bracket(&GhatElement::d(), &x);
            if got != x.scale(&Scalar::from_rational(w.delta.clone())) {
                bad = Some(format!("[d, x] = {}", got.render(g)));
            }
            for (i, (_, _, hi)) in gens.chevalley.iter().enumerate() {
                let got = gh.bracket(hi, &x);
                if bad.is_none() && got != x.scale(&Scalar::from_rational(pairing(g, &w, i)?)) {
                    bad = Some(format!("[h_{}, x] = {}", i + 1, got.render(g)));
                }
            }
            let name = format!("weight {a}.{} = {w}", m.render(g));
            out.push(match bad {
                None => Case::pass(name),
                Some(d) => Case::fail(name, d),
            });
        }
    }
    Ok(out)
}

/// Brackets of homogeneous components land at the sum of the weights,
/// sampled on `φ_A ⊗ {e_1, f_1, h_1}` with `m ≤ 1`.
pub fn bracket_grading(gh: &Ghat<'_>) -> Result<Vec<Case>> {
    let g = gh.algebra();
    let (e, f, h) = g.root_data()?.simple[0];
    let mut samples = Vec::new();
    for a in basis_indices(1) {
        for i in [e, f, h] {
            let phi = LaurentSpinor::basis(a);
            let u = UElement::generator(g.dim(), i);
            let w = gh.weight_of_term(&phi, &u)?;
            samples.push((format!("{a}.{}", g.label(i)), GhatElement::tensor(&phi, &u), w));
        }
    }
    let mut out = Vec::new();
    for (nx, x, wx) in &samples {
        for (ny, y, wy) in &samples {
            let want = wx + wy;
            let parts = gh.weight_decompose(&gh.bracket(x, y));
            let stray: Vec<String> = parts.keys().filter(|w| **w != want).map(|w| w.to_string()).collect();
            out.push(Case::check(format!("grading [{nx}, {ny}] at {want}"), stray.is_empty(), || {
                format!("components at {}", stray.join(", "))
            }));
        }
    }
    Ok(out)
}

// Generator table

/// `((a, b, c, d), k)` is `k z1^a z2^b z1~^c z2~^d`.
type Terms<'a> = &'a [((u32, u32, u32, u32), i64)];

fn poly(terms: Terms<'_>) -> Poly {
    let mut p = Poly::zero();
    for &((a, b, c, d), k) in terms {
        p = &p + &Poly::monomial(a, b, c, d).scale(&Scalar::from_int(k));
    }
    p
}

fn column(u: Terms<'_>, v: Terms<'_>, c: Scalar) -> RestrictedSpinor {
    RestrictedSpinor::new(&poly(u), &poly(v)).scale(&c)
}

fn idx(sign: Sign, m: u32, l: u32, k: u32) -> BasisIndex {
    BasisIndex::new(sign, m, l, k).expect("table indices are in range")
}

/// `(name, basis spinor, coordinate form on S³)` for the sixteen spinors of
/// degree at most one that the table writes out.
fn coordinate_forms() -> Vec<(&'static str, BasisIndex, RestrictedSpinor)> {
    use Sign::{Minus as M, Plus as P};
    let one = Scalar::one;
    let s2 = || Scalar::sqrt_int(2);
    // Exponents are (z1, z2, z1~, z2~).
    let (z1, z2, w1, w2) = ((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1));
    vec![
        ("I", idx(P, 0, 0, 1), column(&[((0, 0, 0, 0), 1)], &[], one())),
        ("J", idx(P, 0, 0, 0), column(&[], &[((0, 0, 0, 0), -1)], one())),
        ("kappa", idx(P, 1, 0, 1), column(&[(z2, 1)], &[(w1, -1)], one())),
        ("mu", idx(M, 0, 0, 0), column(&[(z2, 1)], &[(w1, 1)], one())),
        ("lambda", idx(P, 1, 1, 1), column(&[(z1, 1)], &[(w2, 1)], one())),
        ("nu", idx(M, 0, 0, 1), column(&[(z1, -1)], &[(w2, 1)], one())),
        ("phi+(1,0,0)", idx(P, 1, 0, 0), column(&[], &[(z2, -1)], s2())),
        ("phi+(1,0,2)", idx(P, 1, 0, 2), column(&[(w1, 1)], &[], s2())),
        ("phi+(1,1,2)", idx(P, 1, 1, 2), column(&[(w2, -1)], &[], s2())),
        ("phi+(1,1,0)", idx(P, 1, 1, 0), column(&[], &[(z1, -1)], s2())),
        ("phi-(1,0,0)", idx(M, 1, 0, 0), column(&[((0, 2, 0, 0), 1)], &[((0, 1, 1, 0), 1)], s2())),
        ("phi-(1,1,0)", idx(M, 1, 1, 0), column(&[((0, 1, 1, 0), 1)], &[((0, 0, 2, 0), 1)], s2())),
        ("phi-(1,1,2)", idx(M, 1, 1, 2), column(&[((1, 0, 0, 1), -1)], &[((0, 0, 0, 2), 1)], s2())),
        ("phi-(1,0,2)", idx(M, 1, 0, 2), column(&[((2, 0, 0, 0), 1)], &[((1, 0, 0, 1), -1)], s2())),
        (
            "phi-(1,0,1)",
            idx(M, 1, 0, 1),
            column(&[((1, 1, 0, 0), -2)], &[((0, 1, 0, 1), 1), ((1, 0, 1, 0), -1)], one()),
        ),
        ("phi-(1,1,1)", idx(M, 1, 1, 1), column(&[((0, 1, 0, 1), 1), ((1, 0, 1, 0), -1)], &[((0, 0, 1, 1), 2)], one())),
    ]
}

struct Words<'c> {
    calc: &'c SphereCalculus,
}

impl Words<'_> {
    fn mul(&self, x: &LaurentSpinor, y: &LaurentSpinor) -> Result<LaurentSpinor> {
        self.calc.mul(x, y)
    }

    fn mul3(&self, x: &LaurentSpinor, y: &LaurentSpinor, z: &LaurentSpinor) -> Result<LaurentSpinor> {
        self.mul(&self.mul(x, y)?, z)
    }
}

/// The product identities of the generator table, as `(name, lhs, rhs)`.
fn product_identities(calc: &SphereCalculus) -> Result<Vec<(&'static str, LaurentSpinor, LaurentSpinor)>> {
    use Sign::{Minus as M, Plus as P};
    let w = Words { calc };
    let (j, k, mu) = (LaurentSpinor::unit_j(), LaurentSpinor::kappa(), LaurentSpinor::mu());
    let (la, nu) = (LaurentSpinor::lambda(), LaurentSpinor::nu());
    let r = Scalar::sqrt(&rat(1, 2));
    let half = Scalar::from_ratio(1, 2);
    let b = |i: BasisIndex| LaurentSpinor::basis(i);
    let kpm = &k + &mu;
    let mmk = &mu - &k;
    let lpn = &la + &nu;
    let lmn = &la - &nu;
    Ok(vec![
        ("lambda = -kappa J", la.clone(), -&w.mul(&k, &j)?),
        ("nu = -mu J", nu.clone(), -&w.mul(&mu, &j)?),
        ("phi+(1,0,0) = J(kappa+mu)/sqrt2", b(idx(P, 1, 0, 0)), w.mul(&j, &kpm)?.scale(&r)),
        ("phi+(1,0,2) = J(mu-kappa)/sqrt2", b(idx(P, 1, 0, 2)), w.mul(&j, &mmk)?.scale(&r)),
        ("phi+(1,1,2) = -J(lambda+nu)/sqrt2", b(idx(P, 1, 1, 2)), w.mul(&j, &lpn)?.scale(&-&r)),
        ("phi+(1,1,0) = J(lambda-nu)/sqrt2", b(idx(P, 1, 1, 0)), w.mul(&j, &lmn)?.scale(&r)),
        ("phi-(1,0,0) = nu J(kappa+mu)/sqrt2", b(idx(M, 1, 0, 0)), w.mul3(&nu, &j, &kpm)?.scale(&r)),
        ("phi-(1,1,0) = mu J(mu-kappa)/sqrt2", b(idx(M, 1, 1, 0)), w.mul3(&mu, &j, &mmk)?.scale(&r)),
        ("phi-(1,1,2) = nu J(lambda+nu)/sqrt2", b(idx(M, 1, 1, 2)), w.mul3(&nu, &j, &lpn)?.scale(&r)),
        ("phi-(1,0,2) = mu J(lambda-nu)/sqrt2", b(idx(M, 1, 0, 2)), w.mul3(&mu, &j, &lmn)?.scale(&r)),
        (
            "phi-(1,0,1) = (nu/2)(kappa+mu+J(lambda-nu))",
            b(idx(M, 1, 0, 1)),
            w.mul(&nu, &(&kpm + &w.mul(&j, &lmn)?))?.scale(&half),
        ),
        (
            "phi-(1,1,1) = (mu/2)(-kappa+mu+J(lambda+nu))",
            b(idx(M, 1, 1, 1)),
            w.mul(&mu, &(&mmk + &w.mul(&j, &lpn)?))?.scale(&half),
        ),
    ])
}

/// Coordinate forms and product identities of the generator table.
pub fn generator_table(calc: &SphereCalculus) -> Result<Vec<Case>> {
    let mut out = Vec::new();
    for (name, i, col) in coordinate_forms() {
        out.push(Case::equal(format!("coordinates {name}"), &calc.restricted(i), &col));
    }
    for (name, lhs, rhs) in product_identities(calc)? {
        out.push(Case::equal(String::from(name), &rhs, &lhs));
    }
    Ok(out)
}

/// `φ^{−(1,0,1)} = (ν/2)(κ + μ − J(λ − ν))`, which holds on `S³`, rendered
/// with its status.
pub fn corrected_identity(calc: &SphereCalculus) -> Result<String> {
    let w = Words { calc };
    let (j, k, mu) = (LaurentSpinor::unit_j(), LaurentSpinor::kappa(), LaurentSpinor::mu());
    let (la, nu) = (LaurentSpinor::lambda(), LaurentSpinor::nu());
    let rhs = w.mul(&nu, &(&(&k + &mu) - &w.mul(&j, &(&la - &nu))?))?.scale(&Scalar::from_ratio(1, 2));
    let lhs = LaurentSpinor::basis(idx(Sign::Minus, 1, 0, 1));
    let status = if lhs == rhs { "holds" } else { "fails" };
    Ok(format!("phi-(1,0,1) = (nu/2)(kappa+mu-J(lambda-nu)) {status}"))
}

/// `κκ* = κ*κ = μμ* = μ*μ = I`.
pub fn star_lemma(calc: &SphereCalculus) -> Result<Vec<Case>> {
    let i = LaurentSpinor::unit_i();
    let (k, ks) = (LaurentSpinor::kappa(), LaurentSpinor::kappa_star());
    let (m, ms) = (LaurentSpinor::mu(), LaurentSpinor::mu_star());
    let pairs = [("kappa kappa*", &k, &ks), ("kappa* kappa", &ks, &k), ("mu mu*", &m, &ms), ("mu* mu", &ms, &m)];
    pairs.into_iter().map(|(name, x, y)| Ok(Case::equal(format!("{name} = I"), &calc.mul(x, y)?, &i))).collect()
}
