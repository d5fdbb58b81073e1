//! Static kinds, evaluation and printing of expressions.

use std::fmt;

use qca_core::enveloping::{u_commutator, u_mul, weight_decompose, UElement};
use qca_core::ghat::{Generators, Ghat, GhatElement, GhatWeight};
use qca_core::lie::{LieAlgebra, RootWeight};
use qca_core::poly::{Poly, Var};
use qca_core::sphere::{BasisIndex, LaurentSpinor, RestrictedSpinor, SphereCalculus};
use qca_core::{Error, Rational, Scalar};

use crate::error::{CliError, Pos};
use crate::parser::{BinOp, Expr, ExprKind};

/// What an expression denotes, decided before evaluation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Scalar,
    /// A polynomial in `z1, z2, z1~, z2~`.
    Poly,
    /// A spinor given by its polynomial components, restricted to `S³`.
    Field,
    /// A Laurent spinor in the basis `phi±(m,l,k)`.
    Spinor,
    U,
    Ghat,
    Weight,
    /// A residue `(r1, r2)`.
    Pair,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::Scalar => "scalar",
            Kind::Poly => "polynomial",
            Kind::Field => "spinor field",
            Kind::Spinor => "spinor",
            Kind::U => "U-element",
            Kind::Ghat => "ĝ element",
            Kind::Weight => "weight",
            Kind::Pair => "residue pair",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    Scalar(Scalar),
    Poly(Poly),
    Field(RestrictedSpinor),
    Spinor(LaurentSpinor),
    U(UElement),
    Ghat(GhatElement),
    Weight(GhatWeight),
    Pair(Scalar, Scalar),
}

impl Value {
    pub fn kind(&self) -> Kind {
        match self {
            Value::Scalar(_) => Kind::Scalar,
            Value::Poly(_) => Kind::Poly,
            Value::Field(_) => Kind::Field,
            Value::Spinor(_) => Kind::Spinor,
            Value::U(_) => Kind::U,
            Value::Ghat(_) => Kind::Ghat,
            Value::Weight(_) => Kind::Weight,
            Value::Pair(..) => Kind::Pair,
        }
    }
}

const SPINOR_NAMES: [&str; 8] = ["I", "J", "kappa", "kappa*", "mu", "mu*", "lambda", "nu"];
const GHAT_NAMES: [&str; 9] = ["a", "d", "e_J", "f_J", "e_kappa", "f_kappa", "e_mu", "f_mu", "h_theta"];

fn var_of(name: &str) -> Option<Var> {
    Var::ALL.into_iter().find(|v| v.name() == name)
}

/// Kinds that can be scaled, added and multiplied by scalars.
fn linear(k: Kind) -> bool {
    !matches!(k, Kind::Weight | Kind::Pair)
}

fn spinorish(k: Kind) -> bool {
    matches!(k, Kind::Field | Kind::Spinor)
}

/// Common kind of a sum, or `None` if the operands cannot be added.
fn join(a: Kind, b: Kind) -> Option<Kind> {
    use Kind::*;
    match (a, b) {
        _ if a == b => linear(a).then_some(a),
        (Scalar, Poly) | (Poly, Scalar) => Some(Poly),
        (Scalar, U) | (U, Scalar) => Some(U),
        (Field, Spinor) | (Spinor, Field) => Some(Spinor),
        (Field | Spinor | U | Ghat, Field | Spinor | U | Ghat) => Some(Ghat),
        _ => None,
    }
}

fn product(a: Kind, b: Kind) -> Option<Kind> {
    use Kind::*;
    match (a, b) {
        (Scalar, k) | (k, Scalar) => linear(k).then_some(k),
        (Poly, Poly) => Some(Poly),
        (Field, Field) => Some(Field),
        (Field | Spinor, Field | Spinor) => Some(Spinor),
        (Field | Spinor, U) | (U, Field | Spinor) => Some(Ghat),
        (U, U) => Some(U),
        _ => None,
    }
}

fn bracket_kind(a: Kind, b: Kind) -> Option<Kind> {
    use Kind::*;
    match (a, b) {
        (U, U) => Some(U),
        (Field | Spinor, Field | Spinor) => Some(Spinor),
        (Field | Spinor | U | Ghat, Field | Spinor | U | Ghat) => Some(Ghat),
        _ => None,
    }
}

/// Evaluation context: the Lie algebra, the ĝ caches and the expansion bound.
pub struct Session<'g> {
    gh: Ghat<'g>,
    gens: Option<Generators>,
    max_m: u32,
}

impl<'g> Session<'g> {
    pub fn new(g: &'g LieAlgebra, max_m: u32) -> Self {
        let gh = Ghat::new(g);
        let gens = gh.generators().ok();
        Session { gh, gens, max_m }
    }

    pub fn algebra(&self) -> &'g LieAlgebra {
        self.gh.algebra()
    }

    pub fn ghat(&self) -> &Ghat<'g> {
        &self.gh
    }

    fn calc(&self) -> &SphereCalculus {
        self.gh.sphere()
    }

    /// The Lie basis index of a label, accepting `e1` for `e_1`.
    fn lie_index(&self, name: &str) -> Option<usize> {
        let g = self.algebra();
        g.index_of(name).or_else(|| {
            let split = name.find(|c: char| c.is_ascii_digit())?;
            let (head, tail) = name.split_at(split);
            if head.is_empty() || head.ends_with('_') {
                return None;
            }
            g.index_of(&format!("{head}_{tail}"))
        })
    }

    fn name_kind(&self, name: &str, pos: Pos) -> Result<Kind, CliError> {
        if name == "i" {
            Ok(Kind::Scalar)
        } else if SPINOR_NAMES.contains(&name) {
            Ok(Kind::Spinor)
        } else if GHAT_NAMES.contains(&name) {
            Ok(Kind::Ghat)
        } else if var_of(name).is_some() {
            Ok(Kind::Poly)
        } else if self.lie_index(name).is_some() {
            Ok(Kind::U)
        } else {
            Err(CliError::ty(pos, format!("unknown name `{name}`")))
        }
    }

    /// Checks `e` and returns its kind without evaluating anything.
    pub fn typecheck(&self, e: &Expr) -> Result<Kind, CliError> {
        let pos = e.pos;
        match &e.kind {
            ExprKind::Int(_) => Ok(Kind::Scalar),
            ExprKind::Name(n) => self.name_kind(n, pos),
            ExprKind::Phi { sign, m, l, k } => {
                BasisIndex::new(*sign, *m, *l, *k).map_err(|err| CliError::eval(pos, err))?;
                Ok(Kind::Spinor)
            }
            ExprKind::Neg(x) => {
                let k = self.typecheck(x)?;
                if linear(k) {
                    Ok(k)
                } else {
                    Err(CliError::ty(pos, format!("cannot negate a {k}")))
                }
            }
            ExprKind::Bin(op, a, b) => {
                let (ka, kb) = (self.typecheck(a)?, self.typecheck(b)?);
                let out = match op {
                    BinOp::Add | BinOp::Sub => join(ka, kb),
                    BinOp::Mul | BinOp::Dot => product(ka, kb),
                    BinOp::Div => (kb == Kind::Scalar && linear(ka)).then_some(ka),
                };
                out.ok_or_else(|| {
                    let hint =
                        if ka == Kind::Ghat || kb == Kind::Ghat { "; ĝ has no product, use [x, y]" } else { "" };
                    let verb = match op {
                        BinOp::Add => "add",
                        BinOp::Sub => "subtract",
                        BinOp::Div => "divide",
                        BinOp::Mul | BinOp::Dot => "multiply",
                    };
                    CliError::ty(pos, format!("cannot {verb} a {ka} and a {kb}{hint}"))
                })
            }
            ExprKind::Pow(x, _) => {
                let k = self.typecheck(x)?;
                match k {
                    Kind::Scalar | Kind::Poly | Kind::Field | Kind::Spinor | Kind::U => Ok(k),
                    _ => Err(CliError::ty(pos, format!("cannot raise a {k} to a power"))),
                }
            }
            ExprKind::Bracket(a, b) => {
                let (ka, kb) = (self.typecheck(a)?, self.typecheck(b)?);
                bracket_kind(ka, kb).ok_or_else(|| CliError::ty(pos, format!("cannot bracket a {ka} with a {kb}")))
            }
            ExprKind::Call(name, args) => self.call_kind(name, args, pos),
        }
    }

    fn call_kind(&self, name: &str, args: &[Expr], pos: Pos) -> Result<Kind, CliError> {
        let arity = match name {
            "c" | "spinor" => 2,
            "d0" | "theta" | "expand" | "res" | "hat" | "weight" | "sqrt" => 1,
            _ => return Err(CliError::ty(pos, format!("unknown function `{name}`"))),
        };
        if args.len() != arity {
            return Err(CliError::ty(pos, format!("`{name}` takes {arity} argument(s), got {}", args.len())));
        }
        let kinds = args.iter().map(|a| self.typecheck(a)).collect::<Result<Vec<_>, _>>()?;
        let bad =
            |i: usize, want: &str| CliError::ty(args[i].pos, format!("`{name}` expects {want}, got a {}", kinds[i]));
        match name {
            "c" => {
                for (i, &k) in kinds.iter().enumerate() {
                    if !spinorish(k) {
                        return Err(bad(i, "a spinor"));
                    }
                }
                Ok(Kind::Scalar)
            }
            "spinor" => {
                for (i, &k) in kinds.iter().enumerate() {
                    if !matches!(k, Kind::Scalar | Kind::Poly) {
                        return Err(bad(i, "a polynomial"));
                    }
                }
                Ok(Kind::Field)
            }
            "sqrt" => match kinds[0] {
                Kind::Scalar => Ok(Kind::Scalar),
                _ => Err(bad(0, "a scalar")),
            },
            "weight" => match kinds[0] {
                Kind::Spinor | Kind::Field | Kind::U | Kind::Ghat => Ok(Kind::Weight),
                _ => Err(bad(0, "a spinor, U-element or ĝ element")),
            },
            "d0" => match kinds[0] {
                Kind::Spinor | Kind::Field => Ok(Kind::Spinor),
                Kind::Ghat | Kind::U => Ok(Kind::Ghat),
                _ => Err(bad(0, "a spinor or ĝ element")),
            },
            "res" if spinorish(kinds[0]) => Ok(Kind::Pair),
            _ if spinorish(kinds[0]) => Ok(Kind::Spinor),
            _ => Err(bad(0, "a spinor")),
        }
    }

    /// Typechecks and evaluates.
    pub fn run(&self, e: &Expr) -> Result<Value, CliError> {
        self.typecheck(e)?;
        self.eval(e)
    }

    fn expand_field(&self, p: &RestrictedSpinor, pos: Pos) -> Result<LaurentSpinor, CliError> {
        self.calc().expand_auto(p).map_err(|err| CliError::eval(pos, err))
    }

    /// Converts `v` to kind `to`, which must be reachable by promotion.
    ///
    /// Panics on an unreachable pair; [`Session::typecheck`] rules those out.
    pub fn promote(&self, v: Value, to: Kind, pos: Pos) -> Result<Value, CliError> {
        let dim = self.algebra().dim();
        Ok(match (v, to) {
            (v, k) if v.kind() == k => v,
            (Value::Scalar(c), Kind::Poly) => Value::Poly(Poly::constant(c)),
            (Value::Scalar(c), Kind::U) => Value::U(UElement::one(dim).scale(&c)),
            (Value::Field(p), Kind::Spinor) => Value::Spinor(self.expand_field(&p, pos)?),
            (Value::Field(p), Kind::Ghat) => {
                Value::Ghat(GhatElement::tensor(&self.expand_field(&p, pos)?, &UElement::one(dim)))
            }
            (Value::Spinor(l), Kind::Ghat) => Value::Ghat(GhatElement::tensor(&l, &UElement::one(dim))),
            (Value::U(x), Kind::Ghat) => Value::Ghat(GhatElement::tensor(&LaurentSpinor::unit_i(), &x)),
            (v, k) => unreachable!("no promotion from {} to {k}", v.kind()),
        })
    }

    fn spinor(&self, v: Value, pos: Pos) -> Result<LaurentSpinor, CliError> {
        match self.promote(v, Kind::Spinor, pos)? {
            Value::Spinor(l) => Ok(l),
            _ => unreachable!(),
        }
    }

    fn ghat_value(&self, v: Value, pos: Pos) -> Result<GhatElement, CliError> {
        match self.promote(v, Kind::Ghat, pos)? {
            Value::Ghat(x) => Ok(x),
            _ => unreachable!(),
        }
    }

    fn poly(&self, v: Value, pos: Pos) -> Result<Poly, CliError> {
        match self.promote(v, Kind::Poly, pos)? {
            Value::Poly(p) => Ok(p),
            _ => unreachable!(),
        }
    }

    fn scalar(v: Value) -> Scalar {
        match v {
            Value::Scalar(c) => c,
            _ => unreachable!("typechecked as a scalar"),
        }
    }

    fn mul_spinors(&self, a: &LaurentSpinor, b: &LaurentSpinor, pos: Pos) -> Result<LaurentSpinor, CliError> {
        self.calc().mul(a, b).map_err(|err| CliError::eval(pos, err))
    }

    fn scale(v: Value, c: &Scalar) -> Value {
        match v {
            Value::Scalar(x) => Value::Scalar(&x * c),
            Value::Poly(p) => Value::Poly(p.scale(c)),
            Value::Field(p) => Value::Field(p.scale(c)),
            Value::Spinor(l) => Value::Spinor(l.scale(c)),
            Value::U(x) => Value::U(x.scale(c)),
            Value::Ghat(x) => Value::Ghat(x.scale(c)),
            Value::Weight(_) | Value::Pair(..) => unreachable!("typechecked as linear"),
        }
    }

    fn add(&self, a: Value, b: Value, pos: Pos) -> Result<Value, CliError> {
        let k = join(a.kind(), b.kind()).expect("typechecked sum");
        Ok(match (self.promote(a, k, pos)?, self.promote(b, k, pos)?) {
            (Value::Scalar(x), Value::Scalar(y)) => Value::Scalar(&x + &y),
            (Value::Poly(x), Value::Poly(y)) => Value::Poly(&x + &y),
            (Value::Field(x), Value::Field(y)) => Value::Field(&x + &y),
            (Value::Spinor(x), Value::Spinor(y)) => Value::Spinor(&x + &y),
            (Value::U(x), Value::U(y)) => Value::U(&x + &y),
            (Value::Ghat(x), Value::Ghat(y)) => Value::Ghat(&x + &y),
            _ => unreachable!("promoted to a common kind"),
        })
    }

    fn mul(&self, a: Value, b: Value, pos: Pos) -> Result<Value, CliError> {
        let g = self.algebra();
        Ok(match (a, b) {
            (Value::Scalar(c), v) | (v, Value::Scalar(c)) => Self::scale(v, &c),
            (Value::Poly(x), Value::Poly(y)) => Value::Poly(&x * &y),
            (Value::Field(x), Value::Field(y)) => Value::Field(x.mul(&y)),
            (Value::U(x), Value::U(y)) => Value::U(u_mul(g, &x, &y)),
            (Value::U(x), s) => Value::Ghat(GhatElement::tensor(&self.spinor(s, pos)?, &x)),
            (s, Value::U(x)) => Value::Ghat(GhatElement::tensor(&self.spinor(s, pos)?, &x)),
            (a, b) => {
                let (x, y) = (self.spinor(a, pos)?, self.spinor(b, pos)?);
                Value::Spinor(self.mul_spinors(&x, &y, pos)?)
            }
        })
    }

    fn pow(&self, v: Value, n: u32, pos: Pos) -> Result<Value, CliError> {
        let g = self.algebra();
        Ok(match v {
            Value::Scalar(c) => Value::Scalar(c.pow(n)),
            Value::Poly(p) => Value::Poly(p.pow(n)),
            Value::Field(p) => {
                let one = RestrictedSpinor::new(&Poly::one(), &Poly::zero());
                Value::Field((0..n).fold(one, |acc, _| acc.mul(&p)))
            }
            Value::Spinor(l) => {
                let mut acc = LaurentSpinor::unit_i();
                for _ in 0..n {
                    acc = self.mul_spinors(&acc, &l, pos)?;
                }
                Value::Spinor(acc)
            }
            Value::U(x) => Value::U((0..n).fold(UElement::one(g.dim()), |acc, _| u_mul(g, &acc, &x))),
            _ => unreachable!("typechecked power"),
        })
    }

    fn bracket(&self, a: Value, b: Value, pos: Pos) -> Result<Value, CliError> {
        let g = self.algebra();
        Ok(match (a, b) {
            (Value::U(x), Value::U(y)) => Value::U(u_commutator(g, &x, &y)),
            (a, b) if spinorish(a.kind()) && spinorish(b.kind()) => {
                let (x, y) = (self.spinor(a, pos)?, self.spinor(b, pos)?);
                Value::Spinor(&self.mul_spinors(&x, &y, pos)? - &self.mul_spinors(&y, &x, pos)?)
            }
            (a, b) => Value::Ghat(self.gh.bracket(&self.ghat_value(a, pos)?, &self.ghat_value(b, pos)?)),
        })
    }

    fn weight(&self, v: Value, pos: Pos) -> Result<GhatWeight, CliError> {
        let inhomogeneous = || CliError::eval(pos, Error::Inhomogeneous);
        let g = self.algebra();
        g.root_data().map_err(|err| CliError::eval(pos, err))?;
        match v {
            Value::U(x) => {
                let parts = weight_decompose(g, &x);
                let mut keys = parts.into_keys();
                match (keys.next(), keys.next()) {
                    (Some(w), None) => Ok(GhatWeight::new(Rational::from_integer(0.into()), w)),
                    (None, _) => Ok(GhatWeight::new(Rational::from_integer(0.into()), RootWeight::zero(g.rank()))),
                    _ => Err(inhomogeneous()),
                }
            }
            v => {
                let x = self.ghat_value(v, pos)?;
                let parts = self.gh.weight_decompose(&x);
                let mut keys = parts.into_keys();
                match (keys.next(), keys.next()) {
                    (Some(w), None) => Ok(w),
                    (None, _) => Ok(GhatWeight::new(Rational::from_integer(0.into()), RootWeight::zero(g.rank()))),
                    _ => Err(inhomogeneous()),
                }
            }
        }
    }

    fn call(&self, name: &str, args: &[Expr], pos: Pos) -> Result<Value, CliError> {
        let mut vals = Vec::with_capacity(args.len());
        for a in args {
            vals.push(self.eval(a)?);
        }
        let apos = args[0].pos;
        let mut vals = vals.into_iter();
        let first = vals.next().expect("arity checked");
        Ok(match name {
            "c" => {
                let second = vals.next().expect("arity checked");
                match (first, second) {
                    (Value::Field(p), Value::Field(q)) => Value::Scalar(self.calc().cocycle_fields(&p, &q)),
                    (a, b) => {
                        let (x, y) = (self.spinor(a, apos)?, self.spinor(b, args[1].pos)?);
                        Value::Scalar(self.calc().cocycle_bilinear(&x, &y))
                    }
                }
            }
            "spinor" => {
                let second = vals.next().expect("arity checked");
                Value::Field(RestrictedSpinor::new(&self.poly(first, apos)?, &self.poly(second, args[1].pos)?))
            }
            "sqrt" => {
                let c = Self::scalar(first);
                let r = c.as_rational().filter(|r| *r >= Rational::from_integer(0.into()));
                let r = r.ok_or_else(|| {
                    CliError::eval(apos, Error::Range(format!("sqrt needs a nonnegative rational, got {c}")))
                })?;
                Value::Scalar(Scalar::sqrt(&r))
            }
            "weight" => Value::Weight(self.weight(first, apos)?),
            "d0" => match first {
                v @ (Value::Ghat(_) | Value::U(_)) => Value::Ghat(self.gh.apply_d(&self.ghat_value(v, apos)?)),
                v => Value::Spinor(self.spinor(v, apos)?.d0()),
            },
            "theta" => {
                let p = match first {
                    Value::Field(p) => p,
                    v => self.calc().evaluate(&self.spinor(v, apos)?),
                };
                Value::Spinor(self.expand_field(&p.theta(), pos)?)
            }
            "expand" => {
                let p = match first {
                    Value::Field(p) => p,
                    v => self.calc().evaluate(&self.spinor(v, apos)?),
                };
                Value::Spinor(self.calc().expand(&p, self.max_m).map_err(|err| CliError::eval(pos, err))?)
            }
            "res" => {
                let (r1, r2) = self.spinor(first, apos)?.residue();
                Value::Pair(r1, r2)
            }
            "hat" => Value::Spinor(self.spinor(first, apos)?.hat()),
            _ => unreachable!("typechecked call"),
        })
    }

    fn named(&self, name: &str) -> Value {
        let g = self.algebra();
        let gens = self.gens.as_ref();
        let gen = |f: fn(&Generators) -> &GhatElement| Value::Ghat(f(gens.expect("typechecked ĝ generator")).clone());
        match name {
            "i" => Value::Scalar(Scalar::i()),
            "I" => Value::Spinor(LaurentSpinor::unit_i()),
            "J" => Value::Spinor(LaurentSpinor::unit_j()),
            "kappa" => Value::Spinor(LaurentSpinor::kappa()),
            "kappa*" => Value::Spinor(LaurentSpinor::kappa_star()),
            "mu" => Value::Spinor(LaurentSpinor::mu()),
            "mu*" => Value::Spinor(LaurentSpinor::mu_star()),
            "lambda" => Value::Spinor(LaurentSpinor::lambda()),
            "nu" => Value::Spinor(LaurentSpinor::nu()),
            "a" => Value::Ghat(GhatElement::a()),
            "d" => Value::Ghat(GhatElement::d()),
            "e_J" => gen(|x| &x.e_j),
            "f_J" => gen(|x| &x.f_j),
            "e_kappa" => gen(|x| &x.e_kappa),
            "f_kappa" => gen(|x| &x.f_kappa),
            "e_mu" => gen(|x| &x.e_mu),
            "f_mu" => gen(|x| &x.f_mu),
            "h_theta" => gen(|x| &x.h_theta),
            _ => match var_of(name) {
                Some(v) => Value::Poly(Poly::var(v)),
                None => Value::U(UElement::generator(g.dim(), self.lie_index(name).expect("typechecked label"))),
            },
        }
    }

    fn eval(&self, e: &Expr) -> Result<Value, CliError> {
        let pos = e.pos;
        match &e.kind {
            ExprKind::Int(n) => Ok(Value::Scalar(Scalar::from_rational(n.clone()))),
            ExprKind::Name(n) => {
                if GHAT_NAMES[2..].contains(&n.as_str()) && self.gens.is_none() {
                    let err = self.gh.generators().expect_err("generators unavailable");
                    return Err(CliError::eval(pos, err));
                }
                Ok(self.named(n))
            }
            ExprKind::Phi { sign, m, l, k } => {
                let idx = BasisIndex::new(*sign, *m, *l, *k).map_err(|err| CliError::eval(pos, err))?;
                Ok(Value::Spinor(LaurentSpinor::basis(idx)))
            }
            ExprKind::Neg(x) => Ok(Self::scale(self.eval(x)?, &-Scalar::one())),
            ExprKind::Bin(op, a, b) => {
                let (x, y) = (self.eval(a)?, self.eval(b)?);
                match op {
                    BinOp::Add => self.add(x, y, pos),
                    BinOp::Sub => self.add(x, Self::scale(y, &-Scalar::one()), pos),
                    BinOp::Mul | BinOp::Dot => self.mul(x, y, pos),
                    BinOp::Div => {
                        let inv = Self::scalar(y).inv().map_err(|err| CliError::eval(b.pos, err))?;
                        Ok(Self::scale(x, &inv))
                    }
                }
            }
            ExprKind::Pow(x, n) => {
                let v = self.eval(x)?;
                self.pow(v, *n, pos)
            }
            ExprKind::Bracket(a, b) => {
                let (x, y) = (self.eval(a)?, self.eval(b)?);
                self.bracket(x, y, pos)
            }
            ExprKind::Call(name, args) => self.call(name, args, pos),
        }
    }

    /// Text that parses back to an equal value, up to promotion.
    pub fn render(&self, v: &Value) -> String {
        let g = self.algebra();
        match v {
            Value::Scalar(c) => c.to_string(),
            Value::Poly(p) => p.to_string(),
            Value::Field(p) => format!("spinor{p}"),
            Value::Spinor(l) => l.to_string(),
            Value::U(x) => x.render(g),
            Value::Ghat(x) if x.is_zero() => String::from("0"),
            Value::Ghat(x) => x.render(g),
            Value::Weight(w) => w.to_string(),
            Value::Pair(a, b) => format!("({a}, {b})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::parse;
    use qca_core::lie::build_sl;

    fn eval(src: &str) -> Result<String, CliError> {
        let g = build_sl(2).unwrap();
        let s = Session::new(&g, 2);
        let v = s.run(&parse(src)?)?;
        Ok(s.render(&v))
    }

    #[test]
    fn worked_values() {
        assert_eq!(eval("c(kappa*, kappa)").unwrap(), "i");
        assert_eq!(eval("expand(kappa . kappa*)").unwrap(), "phi+(0,0,1)");
        assert_eq!(eval("weight(kappa . e_1)").unwrap(), "1/2 d + a1");
        assert_eq!(eval("[e1, f1]").unwrap(), "h_1");
        assert_eq!(eval("1/2 + 1/3").unwrap(), "5/6");
        assert_eq!(eval("sqrt(8)").unwrap(), "2*sqrt(2)");
    }

    #[test]
    fn kind_errors() {
        for src in
            ["[1, kappa]", "[kappa, 2]", "a * d", "z1 + kappa", "c(e_1, kappa)", "foo", "bar(1)", "kappa / kappa"]
        {
            assert!(matches!(eval(src), Err(CliError::Type { .. })), "{src}");
        }
    }

    #[test]
    fn mixed_brackets_land_in_ghat() {
        assert_eq!(eval("[kappa, e_1]").unwrap(), eval("[kappa . 1, I . e_1]").unwrap());
        assert_eq!(eval("[d, kappa . e_1]").unwrap(), "1/2*phi+(1,0,1) . e_1");
    }

    #[test]
    fn inhomogeneous_weight_is_an_error() {
        let err = eval("weight(kappa . e_1 + mu . f_1)").unwrap_err();
        assert!(matches!(err, CliError::Eval { source: Error::Inhomogeneous, .. }), "{err}");
    }
}
