//! Expression syntax.
//!
//! ```text
//! expr  := dot (('+' | '-') dot)*
//! dot   := prod ('.' prod)*
//! prod  := unary (('*' | '/') unary)*
//! unary := '-' unary | pow
//! pow   := atom ('^' INT)?
//! atom  := INT | NAME | NAME '(' args ')' | PHI '(' INT ',' INT ',' INT ')'
//!        | '(' expr ')' | '[' expr ',' expr ']'
//! ```
//!
//! `*` and `.` are the same product and differ only in precedence, so
//! `kappa . e_1 * f_1` is `kappa ⊗ (e_1 f_1)`.

use std::fmt;

use qca_core::spinor::Sign;
use qca_core::Rational;

use crate::error::{CliError, Pos};
use crate::lexer::{tokenize, Tok, Token};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BinOp {
    Add,
    Sub,
    /// `.`
    Dot,
    /// `*`
    Mul,
    Div,
}

impl BinOp {
    fn symbol(self) -> &'static str {
        match self {
            BinOp::Add => " + ",
            BinOp::Sub => " - ",
            BinOp::Dot => " . ",
            BinOp::Mul => "*",
            BinOp::Div => "/",
        }
    }

    fn prec(self) -> u8 {
        match self {
            BinOp::Add | BinOp::Sub => 1,
            BinOp::Dot => 2,
            BinOp::Mul | BinOp::Div => 3,
        }
    }
}

const PREC_UNARY: u8 = 4;
const PREC_POW: u8 = 5;
const PREC_ATOM: u8 = 6;

#[derive(Clone, Debug)]
pub enum ExprKind {
    Int(Rational),
    Name(String),
    Phi { sign: Sign, m: u32, l: u32, k: u32 },
    Neg(Box<Expr>),
    Bin(BinOp, Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
    Bracket(Box<Expr>, Box<Expr>),
    Call(String, Vec<Expr>),
}

/// An expression node with the position of its first token.
#[derive(Clone, Debug)]
pub struct Expr {
    pub kind: ExprKind,
    pub pos: Pos,
}

/// Structural equality; positions are ignored.
impl PartialEq for Expr {
    fn eq(&self, o: &Expr) -> bool {
        use ExprKind::*;
        match (&self.kind, &o.kind) {
            (Int(a), Int(b)) => a == b,
            (Name(a), Name(b)) => a == b,
            (Phi { sign: s, m, l, k }, Phi { sign: t, m: n, l: j, k: i }) => (s, m, l, k) == (t, n, j, i),
            (Neg(a), Neg(b)) => a == b,
            (Bin(p, a, b), Bin(q, c, d)) => p == q && a == c && b == d,
            (Pow(a, n), Pow(b, m)) => a == b && n == m,
            (Bracket(a, b), Bracket(c, d)) => a == c && b == d,
            (Call(f, a), Call(g, b)) => f == g && a == b,
            _ => false,
        }
    }
}

impl Expr {
    pub fn new(kind: ExprKind) -> Expr {
        Expr { kind, pos: Pos::default() }
    }

    fn prec(&self) -> u8 {
        match &self.kind {
            ExprKind::Bin(op, ..) => op.prec(),
            ExprKind::Neg(_) => PREC_UNARY,
            ExprKind::Pow(..) => PREC_POW,
            _ => PREC_ATOM,
        }
    }

    fn write_at(&self, f: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
        let paren = self.prec() < min;
        if paren {
            f.write_str("(")?;
        }
        match &self.kind {
            ExprKind::Int(n) => write!(f, "{n}")?,
            ExprKind::Name(s) => f.write_str(s)?,
            ExprKind::Phi { sign, m, l, k } => write!(f, "phi{}({m},{l},{k})", sign.symbol())?,
            ExprKind::Neg(x) => {
                f.write_str("-")?;
                x.write_at(f, PREC_UNARY)?;
            }
            ExprKind::Bin(op, a, b) => {
                a.write_at(f, op.prec())?;
                f.write_str(op.symbol())?;
                // `kappa*-x` would lex as `kappa* - x`
                let neg = matches!(b.kind, ExprKind::Neg(_));
                b.write_at(f, if neg && *op == BinOp::Mul { PREC_ATOM } else { op.prec() + 1 })?;
            }
            ExprKind::Pow(x, n) => {
                x.write_at(f, PREC_ATOM)?;
                write!(f, "^{n}")?;
            }
            ExprKind::Bracket(a, b) => write!(f, "[{a}, {b}]")?,
            ExprKind::Call(name, args) => {
                write!(f, "{name}(")?;
                for (i, a) in args.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{a}")?;
                }
                f.write_str(")")?;
            }
        }
        if paren {
            f.write_str(")")?;
        }
        Ok(())
    }
}

/// Prints with the fewest parentheses that parse back to the same tree.
impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_at(f, 0)
    }
}

struct Parser {
    toks: Vec<Token>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.toks[self.at]
    }

    fn bump(&mut self) -> Token {
        let t = self.toks[self.at].clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn describe(t: &Tok) -> String {
        match t {
            Tok::Int(s) => format!("`{s}`"),
            Tok::Ident(s) => format!("`{s}`"),
            Tok::Phi(c) => format!("`phi{c}`"),
            Tok::Sym(c) => format!("`{c}`"),
            Tok::End => String::from("end of input"),
        }
    }

    fn expect(&mut self, c: char) -> Result<Pos, CliError> {
        let t = self.bump();
        if t.tok == Tok::Sym(c) {
            Ok(t.pos)
        } else {
            Err(CliError::parse(t.pos, format!("expected `{c}`, found {}", Self::describe(&t.tok))))
        }
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek().tok == Tok::Sym(c) {
            self.bump();
            true
        } else {
            false
        }
    }

    fn uint(&mut self) -> Result<u32, CliError> {
        let t = self.bump();
        match &t.tok {
            Tok::Int(s) => s.parse().map_err(|_| CliError::parse(t.pos, format!("integer `{s}` is too large"))),
            other => Err(CliError::parse(t.pos, format!("expected an integer, found {}", Self::describe(other)))),
        }
    }

    fn binary(&mut self, level: u8) -> Result<Expr, CliError> {
        if level == PREC_UNARY {
            return self.unary();
        }
        let mut lhs = self.binary(level + 1)?;
        loop {
            let op = match (&self.peek().tok, level) {
                (Tok::Sym('+'), 1) => BinOp::Add,
                (Tok::Sym('-'), 1) => BinOp::Sub,
                (Tok::Sym('.'), 2) => BinOp::Dot,
                (Tok::Sym('*'), 3) => BinOp::Mul,
                (Tok::Sym('/'), 3) => BinOp::Div,
                _ => return Ok(lhs),
            };
            self.bump();
            let rhs = self.binary(level + 1)?;
            let pos = lhs.pos;
            lhs = Expr { kind: ExprKind::Bin(op, Box::new(lhs), Box::new(rhs)), pos };
        }
    }

    fn unary(&mut self) -> Result<Expr, CliError> {
        if self.peek().tok == Tok::Sym('-') {
            let pos = self.bump().pos;
            let x = self.unary()?;
            return Ok(Expr { kind: ExprKind::Neg(Box::new(x)), pos });
        }
        let base = self.atom()?;
        if self.eat('^') {
            let n = self.uint()?;
            let pos = base.pos;
            return Ok(Expr { kind: ExprKind::Pow(Box::new(base), n), pos });
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr, CliError> {
        let t = self.bump();
        let pos = t.pos;
        let kind = match t.tok {
            Tok::Int(s) => ExprKind::Int(s.parse().expect("digits parse as an integer")),
            Tok::Phi(c) => {
                self.expect('(')?;
                let m = self.uint()?;
                self.expect(',')?;
                let l = self.uint()?;
                self.expect(',')?;
                let k = self.uint()?;
                self.expect(')')?;
                let sign = if c == '+' { Sign::Plus } else { Sign::Minus };
                ExprKind::Phi { sign, m, l, k }
            }
            Tok::Ident(name) if name == "phi" && self.peek().tok == Tok::Sym('(') => {
                self.bump();
                let s = self.bump();
                let sign = match s.tok {
                    Tok::Sym('+') => Sign::Plus,
                    Tok::Sym('-') => Sign::Minus,
                    other => {
                        return Err(CliError::parse(
                            s.pos,
                            format!("expected `+` or `-`, found {}", Self::describe(&other)),
                        ))
                    }
                };
                let mut idx = [0; 3];
                for x in &mut idx {
                    self.expect(',')?;
                    *x = self.uint()?;
                }
                self.expect(')')?;
                ExprKind::Phi { sign, m: idx[0], l: idx[1], k: idx[2] }
            }
            Tok::Ident(name) => {
                if self.eat('(') {
                    let mut args = Vec::new();
                    if !self.eat(')') {
                        loop {
                            args.push(self.binary(1)?);
                            if self.eat(')') {
                                break;
                            }
                            self.expect(',')?;
                        }
                    }
                    ExprKind::Call(name, args)
                } else {
                    ExprKind::Name(name)
                }
            }
            Tok::Sym('(') => {
                let x = self.binary(1)?;
                self.expect(')')?;
                return Ok(Expr { pos, ..x });
            }
            Tok::Sym('[') => {
                let a = self.binary(1)?;
                self.expect(',')?;
                let b = self.binary(1)?;
                self.expect(']')?;
                ExprKind::Bracket(Box::new(a), Box::new(b))
            }
            other => {
                return Err(CliError::parse(pos, format!("expected an expression, found {}", Self::describe(&other))))
            }
        };
        Ok(Expr { kind, pos })
    }
}

pub fn parse(src: &str) -> Result<Expr, CliError> {
    let mut p = Parser { toks: tokenize(src)?, at: 0 };
    let e = p.binary(1)?;
    let t = p.peek();
    if t.tok != Tok::End {
        return Err(CliError::parse(t.pos, format!("unexpected {}", Parser::describe(&t.tok))));
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn name(s: &str) -> Box<Expr> {
        Box::new(Expr::new(ExprKind::Name(s.into())))
    }

    #[test]
    fn spec_shapes() {
        let e = parse("c(kappa*, kappa)").unwrap();
        assert_eq!(e, Expr::new(ExprKind::Call("c".into(), vec![*name("kappa*"), *name("kappa")])));
        let e = parse("[d, mu . e_1]").unwrap();
        let inner = Expr::new(ExprKind::Bin(BinOp::Dot, name("mu"), name("e_1")));
        assert_eq!(e, Expr::new(ExprKind::Bracket(name("d"), Box::new(inner))));
    }

    #[test]
    fn empty_bracket_slot_is_reported_at_its_column() {
        let err = parse("[a, ]").unwrap_err();
        assert!(matches!(err, CliError::Parse { pos: Pos { line: 1, col: 5 }, .. }), "{err}");
    }

    #[test]
    fn precedence() {
        assert_eq!(parse("kappa . e_1 * f_1").unwrap().to_string(), "kappa . e_1*f_1");
        assert_eq!(parse("(kappa . e_1) * f_1").unwrap().to_string(), "(kappa . e_1)*f_1");
        assert_eq!(parse("-1/2*i").unwrap().to_string(), "-1/2*i");
        assert_eq!(parse("a - (b - c)").unwrap().to_string(), "a - (b - c)");
        assert_eq!(parse("(-x)^2").unwrap().to_string(), "(-x)^2");
        assert_eq!(parse("phi(-, 1, 0, 2)").unwrap().to_string(), "phi-(1,0,2)");
    }

    #[test]
    fn errors_point_at_the_offending_token() {
        for (src, col) in [("1 +", 4), ("f(a b)", 5), ("phi+(1,x,0)", 8), ("(a", 3), ("a)", 2), ("x^y", 3)] {
            match parse(src) {
                Err(CliError::Parse { pos, .. }) => assert_eq!(pos.col, col, "{src}"),
                other => panic!("{src}: {other:?}"),
            }
        }
    }
}
