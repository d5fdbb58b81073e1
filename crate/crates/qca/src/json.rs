//! JSON forms of values, verification reports and Lie algebras.
//!
//! A scalar is an array of radical terms `{sqrt, re, im}` with `re` and
//! `im` as `"p/q"` strings; every reader accepts exactly what the
//! matching writer produces.

use std::collections::BTreeMap;

use serde_json::{json, Map, Value as Json};

use qca_core::enveloping::{PBWMonomial, UElement};
use qca_core::ghat::{GhatElement, GhatWeight};
use qca_core::lie::{BasisRole, LieAlgebra, RootWeight};
use qca_core::sphere::{BasisIndex, LaurentSpinor};
use qca_core::spinor::Sign;
use qca_core::verify::Report;
use qca_core::{GaussRational, Rational, Scalar};

use crate::error::CliError;
use crate::eval::{Session, Value};

fn bad(what: &str, j: &Json) -> CliError {
    CliError::Input(format!("malformed {what}: {j}"))
}

fn rational_text(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

fn rational_from(j: &Json) -> Result<Rational, CliError> {
    match j {
        Json::String(s) => s.parse().map_err(|_| bad("rational", j)),
        Json::Number(n) => n.as_i64().map(|n| Rational::from_integer(n.into())).ok_or_else(|| bad("rational", j)),
        _ => Err(bad("rational", j)),
    }
}

fn field<'a>(j: &'a Json, key: &str, what: &str) -> Result<&'a Json, CliError> {
    j.get(key).ok_or_else(|| CliError::Input(format!("{what} is missing `{key}`: {j}")))
}

fn uint(j: &Json, key: &str, what: &str) -> Result<u64, CliError> {
    let v = field(j, key, what)?;
    v.as_u64().ok_or_else(|| bad(what, v))
}

fn array<'a>(j: &'a Json, what: &str) -> Result<&'a Vec<Json>, CliError> {
    j.as_array().ok_or_else(|| bad(what, j))
}

pub fn scalar_to_json(c: &Scalar) -> Json {
    Json::Array(
        c.terms().map(|(r, g)| json!({"sqrt": r, "re": rational_text(&g.re), "im": rational_text(&g.im)})).collect(),
    )
}

/// Also accepts a bare integer or a `"p/q"` string, for hand-written input.
pub fn scalar_from_json(j: &Json) -> Result<Scalar, CliError> {
    if !j.is_array() {
        return rational_from(j).map(Scalar::from_rational);
    }
    let mut out = Scalar::zero();
    for t in array(j, "scalar")? {
        let r = uint(t, "sqrt", "scalar term")?;
        if r == 0 {
            return Err(bad("scalar term", t));
        }
        let re = rational_from(field(t, "re", "scalar term")?)?;
        let im = rational_from(field(t, "im", "scalar term")?)?;
        let root = Scalar::sqrt(&Rational::from_integer(r.into()));
        out += &root.mul_gauss(&GaussRational::new(re, im));
    }
    Ok(out)
}

pub fn laurent_to_json(l: &LaurentSpinor) -> Json {
    Json::Array(
        l.terms()
            .map(|(i, c)| {
                json!({"sign": i.sign.symbol().to_string(), "m": i.m, "l": i.l, "k": i.k, "coeff": scalar_to_json(c)})
            })
            .collect(),
    )
}

pub fn laurent_from_json(j: &Json) -> Result<LaurentSpinor, CliError> {
    let mut out = LaurentSpinor::zero();
    for t in array(j, "spinor")? {
        let sign = match field(t, "sign", "spinor term")?.as_str() {
            Some("+") => Sign::Plus,
            Some("-") => Sign::Minus,
            _ => return Err(bad("spinor sign", t)),
        };
        let n = |key| -> Result<u32, CliError> {
            u32::try_from(uint(t, key, "spinor term")?).map_err(|_| bad("spinor index", t))
        };
        let idx = BasisIndex::new(sign, n("m")?, n("l")?, n("k")?).map_err(|e| CliError::Input(e.to_string()))?;
        out.add_term(idx, scalar_from_json(field(t, "coeff", "spinor term")?)?);
    }
    Ok(out)
}

fn monomial_to_json(m: &PBWMonomial) -> Json {
    json!(m.0)
}

fn monomial_from_json(g: &LieAlgebra, j: &Json) -> Result<PBWMonomial, CliError> {
    let exps = array(j, "PBW monomial")?;
    if exps.len() != g.dim() {
        return Err(CliError::Input(format!("PBW monomial {j} needs {} exponents", g.dim())));
    }
    let exps = exps.iter().map(|e| e.as_u64().and_then(|e| u32::try_from(e).ok()).ok_or_else(|| bad("exponent", e)));
    Ok(PBWMonomial(exps.collect::<Result<_, _>>()?))
}

/// `monomial` holds the exponents in basis order; `label` is for reading only.
pub fn u_to_json(g: &LieAlgebra, x: &UElement) -> Json {
    Json::Array(
        x.terms()
            .map(|(m, c)| json!({"monomial": monomial_to_json(m), "label": m.render(g), "coeff": scalar_to_json(c)}))
            .collect(),
    )
}

pub fn u_from_json(g: &LieAlgebra, j: &Json) -> Result<UElement, CliError> {
    let mut out = UElement::zero();
    for t in array(j, "U-element")? {
        let m = monomial_from_json(g, field(t, "monomial", "U term")?)?;
        out.add_term(m, scalar_from_json(field(t, "coeff", "U term")?)?);
    }
    Ok(out)
}

pub fn ghat_to_json(g: &LieAlgebra, x: &GhatElement) -> Json {
    let terms: Vec<Json> = x
        .terms()
        .map(|(l, m)| json!({"spinor": laurent_to_json(l), "u": monomial_to_json(m), "label": m.render(g)}))
        .collect();
    json!({"terms": terms, "a_coeff": scalar_to_json(x.a_coeff()), "d_coeff": scalar_to_json(x.d_coeff())})
}

pub fn ghat_from_json(g: &LieAlgebra, j: &Json) -> Result<GhatElement, CliError> {
    let a = scalar_from_json(field(j, "a_coeff", "ĝ element")?)?;
    let d = scalar_from_json(field(j, "d_coeff", "ĝ element")?)?;
    let mut out = GhatElement::central(a, d);
    for t in array(field(j, "terms", "ĝ element")?, "ĝ terms")? {
        let l = laurent_from_json(field(t, "spinor", "ĝ term")?)?;
        let m = monomial_from_json(g, field(t, "u", "ĝ term")?)?;
        out.add_tensor(&l, &UElement::term(m, Scalar::one()));
    }
    Ok(out)
}

pub fn weight_to_json(w: &GhatWeight) -> Json {
    json!({"delta": rational_text(&w.delta), "lambda": w.lambda.0, "lambda0": rational_text(&w.lambda0)})
}

/// `{kind, text, value}`, where `text` is the printed form.
pub fn value_to_json(s: &Session<'_>, v: &Value) -> Json {
    let g = s.algebra();
    let value = match v {
        Value::Scalar(c) => scalar_to_json(c),
        Value::Poly(p) => Json::Array(
            p.terms().map(|(m, c)| json!({"monomial": m.to_string(), "coeff": scalar_to_json(c)})).collect(),
        ),
        Value::Field(p) => json!({"u": p.u.to_string(), "v": p.v.to_string()}),
        Value::Spinor(l) => laurent_to_json(l),
        Value::U(x) => u_to_json(g, x),
        Value::Ghat(x) => ghat_to_json(g, x),
        Value::Weight(w) => weight_to_json(w),
        Value::Pair(a, b) => json!([scalar_to_json(a), scalar_to_json(b)]),
    };
    json!({"kind": v.kind().to_string(), "text": s.render(v), "value": value})
}

pub fn report_to_json(r: &Report, algebra: &str, max_m: u32) -> Json {
    let cases: Vec<Json> = r
        .cases
        .iter()
        .map(|c| {
            let status = if c.passed { "pass" } else { "fail" };
            let counterexample =
                if c.passed || c.detail.is_empty() { Json::Null } else { Json::String(c.detail.clone()) };
            json!({"name": c.name, "status": status, "counterexample": counterexample})
        })
        .collect();
    json!({
        "suite": r.suite.name(),
        "algebra": algebra,
        "max_m": max_m,
        "passed": r.passed(),
        "total": r.total(),
        "notes": r.notes,
        "cases": cases,
    })
}

/// Structure constants keyed by label:
///
/// ```json
/// {"name": "sl2", "basis": ["f_1", "h_1", "e_1"],
///  "brackets": [{"left": "e_1", "right": "f_1", "result": {"h_1": 1}}],
///  "roles": {"f_1": {"negative": [1]}, "h_1": {"cartan": 0}, "e_1": {"positive": [1]}}}
/// ```
///
/// Omitted brackets vanish. Without `roles` only the roots-free commands work.
pub fn algebra_to_json(g: &LieAlgebra) -> Json {
    let dim = g.dim();
    let mut brackets = Vec::new();
    for i in 0..dim {
        for j in i + 1..dim {
            let x = g.basis_bracket(i, j);
            if x.is_zero() {
                continue;
            }
            let result: Map<String, Json> =
                x.support().map(|(k, c)| (g.label(k).to_string(), scalar_to_json(c))).collect();
            brackets.push(json!({"left": g.label(i), "right": g.label(j), "result": result}));
        }
    }
    let mut out = json!({"name": g.name(), "basis": g.labels(), "brackets": brackets});
    if let Some(roles) = g.roles() {
        let roles: Map<String, Json> = roles
            .iter()
            .enumerate()
            .map(|(i, r)| {
                let v = match r {
                    BasisRole::Negative(w) => json!({"negative": w.0}),
                    BasisRole::Cartan(k) => json!({"cartan": k}),
                    BasisRole::Positive(w) => json!({"positive": w.0}),
                };
                (g.label(i).to_string(), v)
            })
            .collect();
        out["roles"] = Json::Object(roles);
    }
    out
}

fn root_from(j: &Json) -> Result<RootWeight, CliError> {
    let v = array(j, "root")?.iter().map(|k| k.as_i64().ok_or_else(|| bad("root", j)));
    Ok(RootWeight(v.collect::<Result<_, _>>()?))
}

pub fn algebra_from_json(j: &Json) -> Result<LieAlgebra, CliError> {
    let name = field(j, "name", "algebra")?.as_str().ok_or_else(|| bad("algebra name", j))?;
    let labels: Vec<String> = array(field(j, "basis", "algebra")?, "basis")?
        .iter()
        .map(|l| l.as_str().map(String::from).ok_or_else(|| bad("basis label", l)))
        .collect::<Result<_, _>>()?;
    let index = |l: &Json| -> Result<usize, CliError> {
        let s = l.as_str().ok_or_else(|| bad("basis label", l))?;
        labels.iter().position(|x| x == s).ok_or_else(|| CliError::Input(format!("unknown basis label `{s}`")))
    };
    let mut brackets: BTreeMap<(usize, usize), Vec<(usize, Scalar)>> = BTreeMap::new();
    let empty = Vec::new();
    let list = match j.get("brackets") {
        Some(b) => array(b, "brackets")?,
        None => &empty,
    };
    for b in list {
        let (i, k) = (index(field(b, "left", "bracket")?)?, index(field(b, "right", "bracket")?)?);
        let result = field(b, "result", "bracket")?.as_object().ok_or_else(|| bad("bracket result", b))?;
        let mut terms = Vec::new();
        for (label, c) in result {
            terms.push((index(&Json::String(label.clone()))?, scalar_from_json(c)?));
        }
        brackets.insert((i, k), terms);
    }
    let roles = match j.get("roles") {
        None => None,
        Some(r) => {
            let r = r.as_object().ok_or_else(|| bad("roles", r))?;
            let mut out = Vec::with_capacity(labels.len());
            for l in &labels {
                let v = r.get(l).ok_or_else(|| CliError::Input(format!("no role for basis label `{l}`")))?;
                let role = if let Some(w) = v.get("negative") {
                    BasisRole::Negative(root_from(w)?)
                } else if let Some(w) = v.get("positive") {
                    BasisRole::Positive(root_from(w)?)
                } else if let Some(k) = v.get("cartan").and_then(Json::as_u64) {
                    BasisRole::Cartan(k as usize)
                } else {
                    return Err(bad("role", v));
                };
                out.push(role);
            }
            Some(out)
        }
    };
    LieAlgebra::new(name, labels, &brackets, roles).map_err(|e| CliError::Input(e.to_string()))
}
