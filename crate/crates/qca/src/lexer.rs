use crate::error::{CliError, Pos};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Tok {
    Int(String),
    /// Identifiers, including the starred names `kappa*`, `mu*` and the
    /// conjugate variables `z1~`, `z2~`.
    Ident(String),
    /// `phi+` or `phi-`, when immediately followed by `(`.
    Phi(char),
    Sym(char),
    End,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Token {
    pub tok: Tok,
    pub pos: Pos,
}

const SYMBOLS: &str = "+-*./^()[],";

/// Characters after which a `*` directly following `kappa` or `mu` reads
/// as the star rather than as multiplication.
const STAR_FOLLOW: &str = ",)].+-*/^";

pub fn tokenize(src: &str) -> Result<Vec<Token>, CliError> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let (mut line, mut col) = (1u32, 1u32);
    let mut i = 0;
    let next_non_space = |from: usize| chars[from..].iter().copied().find(|c| !c.is_whitespace());
    while i < chars.len() {
        let c = chars[i];
        let pos = Pos { line, col };
        let start = i;
        if c == '\n' {
            line += 1;
            col = 1;
            i += 1;
            continue;
        }
        if c.is_whitespace() {
            i += 1;
            col += 1;
            continue;
        }
        let tok = if c.is_ascii_digit() {
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            Tok::Int(chars[start..i].iter().collect())
        } else if c.is_alphabetic() || c == '_' {
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            let mut word: String = chars[start..i].iter().collect();
            let peek = chars.get(i).copied();
            if word == "phi" && matches!(peek, Some('+' | '-')) && chars.get(i + 1) == Some(&'(') {
                i += 1;
                Tok::Phi(peek.unwrap_or('+'))
            } else {
                if matches!(word.as_str(), "z1" | "z2") && peek == Some('~') {
                    word.push('~');
                    i += 1;
                } else if matches!(word.as_str(), "kappa" | "mu") && peek == Some('*') {
                    let after = next_non_space(i + 1);
                    if after.is_none_or(|a| STAR_FOLLOW.contains(a)) {
                        word.push('*');
                        i += 1;
                    }
                }
                Tok::Ident(word)
            }
        } else if SYMBOLS.contains(c) {
            i += 1;
            Tok::Sym(c)
        } else {
            return Err(CliError::parse(pos, format!("unexpected character `{c}`")));
        };
        col += (i - start) as u32;
        out.push(Token { tok, pos });
    }
    out.push(Token { tok: Tok::End, pos: Pos { line, col } });
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn toks(s: &str) -> Vec<Tok> {
        tokenize(s).unwrap().into_iter().map(|t| t.tok).collect()
    }

    #[test]
    fn stars_and_products() {
        let id = |s: &str| Tok::Ident(s.into());
        assert_eq!(toks("kappa*mu"), [id("kappa"), Tok::Sym('*'), id("mu"), Tok::End]);
        assert_eq!(toks("c(kappa*, kappa)")[2], id("kappa*"));
        assert_eq!(toks("mu* . e_1")[0], id("mu*"));
        assert_eq!(toks("kappa*")[0], id("kappa*"));
        assert_eq!(toks("kappa**mu")[..2], [id("kappa*"), Tok::Sym('*')]);
        assert_eq!(toks("kappa*^2")[..2], [id("kappa*"), Tok::Sym('^')]);
        assert_eq!(toks("mu*/2")[..2], [id("mu*"), Tok::Sym('/')]);
    }

    #[test]
    fn phi_and_conjugates() {
        assert_eq!(toks("phi+(1,0,1)")[0], Tok::Phi('+'));
        assert_eq!(toks("phi - (1)")[0], Tok::Ident("phi".into()));
        assert_eq!(toks("z2~*z1")[0], Tok::Ident("z2~".into()));
    }

    #[test]
    fn positions_count_columns_and_lines() {
        let t = tokenize("[a,\n  b]").unwrap();
        assert_eq!(t[3].pos, Pos { line: 2, col: 3 });
        assert!(matches!(tokenize("a # b"), Err(CliError::Parse { pos: Pos { line: 1, col: 3 }, .. })));
    }
}
