//! Parser for polynomial text like `x^2 + 3*x*y - 2*z`.
//!
//! Grammar (whitespace insensitive, products need an explicit `*`):
//! ```text
//! expr   := ['-'] term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := INT ('^' INT)? | VAR ('^' INT)? | '(' expr ')'
//! ```

use crate::error::{Error, Result};
use std::collections::BTreeMap;

/// A polynomial over the named variables: integer coefficient per exponent
/// vector. Exponents are indexed by the caller's variable list.
pub type RawPoly = Vec<(i64, Vec<u32>)>;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(i64),
    Var(usize),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

struct Lexer<'a> {
    src: &'a str,
    vars: &'a [String],
    toks: Vec<(Tok, usize)>,
}

impl<'a> Lexer<'a> {
    fn run(src: &'a str, vars: &'a [String]) -> Result<Vec<(Tok, usize)>> {
        let mut lx = Lexer { src, vars, toks: Vec::new() };
        lx.lex()?;
        Ok(lx.toks)
    }

    fn err(&self, col: usize, msg: impl Into<String>) -> Error {
        Error::Parse {
            line: 1,
            col: col + 1,
            msg: format!("{} in polynomial `{}`", msg.into(), self.src),
        }
    }

    fn lex(&mut self) -> Result<()> {
        let bytes = self.src.as_bytes();
        let mut i = 0;
        while i < bytes.len() {
            let c = bytes[i] as char;
            match c {
                ' ' | '\t' | '\r' | '\n' => i += 1,
                '+' => {
                    self.toks.push((Tok::Plus, i));
                    i += 1;
                }
                '-' => {
                    self.toks.push((Tok::Minus, i));
                    i += 1;
                }
                '*' => {
                    self.toks.push((Tok::Star, i));
                    i += 1;
                }
                '^' => {
                    self.toks.push((Tok::Caret, i));
                    i += 1;
                }
                '(' => {
                    self.toks.push((Tok::LParen, i));
                    i += 1;
                }
                ')' => {
                    self.toks.push((Tok::RParen, i));
                    i += 1;
                }
                '0'..='9' => {
                    let start = i;
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                    let n: i64 = self.src[start..i]
                        .parse()
                        .map_err(|_| self.err(start, "integer literal too large"))?;
                    self.toks.push((Tok::Int(n), start));
                }
                c if c.is_ascii_alphabetic() || c == '_' => {
                    let start = i;
                    while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                        i += 1;
                    }
                    let name = &self.src[start..i];
                    let idx = self
                        .vars
                        .iter()
                        .position(|v| v == name)
                        .ok_or_else(|| self.err(start, format!("unknown variable `{name}`")))?;
                    self.toks.push((Tok::Var(idx), start));
                }
                other => return Err(self.err(i, format!("unexpected character `{other}`"))),
            }
        }
        Ok(())
    }
}

struct Parser<'a> {
    src: &'a str,
    toks: Vec<(Tok, usize)>,
    pos: usize,
    nvars: usize,
}

type TermMap = BTreeMap<Vec<u32>, i64>;

impl<'a> Parser<'a> {
    fn err_at(&self, msg: impl Into<String>) -> Error {
        let col = self.toks.get(self.pos).map(|t| t.1 + 1).unwrap_or(self.src.len() + 1);
        Error::Parse {
            line: 1,
            col,
            msg: format!("{} in polynomial `{}`", msg.into(), self.src),
        }
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.0)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|t| t.0.clone());
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expr(&mut self) -> Result<TermMap> {
        let mut negate = false;
        if self.peek() == Some(&Tok::Minus) {
            self.bump();
            negate = true;
        }
        let mut acc = self.term()?;
        if negate {
            acc.values_mut().for_each(|c| *c = -*c);
        }
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    let t = self.term()?;
                    merge(&mut acc, t, 1);
                }
                Some(Tok::Minus) => {
                    self.bump();
                    let t = self.term()?;
                    merge(&mut acc, t, -1);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<TermMap> {
        let mut acc = self.factor()?;
        while self.peek() == Some(&Tok::Star) {
            self.bump();
            let f = self.factor()?;
            acc = mul_maps(&acc, &f);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<TermMap> {
        match self.bump() {
            Some(Tok::Int(n)) => {
                let e = self.optional_power()?;
                let v = n
                    .checked_pow(e)
                    .ok_or_else(|| self.err_at("integer power overflows"))?;
                Ok(constant(self.nvars, v))
            }
            Some(Tok::Var(idx)) => {
                let e = self.optional_power()?;
                let mut exps = vec![0u32; self.nvars];
                exps[idx] = e;
                let mut m = TermMap::new();
                m.insert(exps, 1);
                Ok(m)
            }
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                if self.bump() != Some(Tok::RParen) {
                    return Err(self.err_at("expected `)`"));
                }
                if self.peek() == Some(&Tok::Caret) {
                    self.bump();
                    let e = self.power_exponent()?;
                    let mut acc = constant(self.nvars, 1);
                    for _ in 0..e {
                        acc = mul_maps(&acc, &inner);
                    }
                    return Ok(acc);
                }
                Ok(inner)
            }
            _ => Err(self.err_at("expected a number, variable, or `(`")),
        }
    }

    fn optional_power(&mut self) -> Result<u32> {
        if self.peek() == Some(&Tok::Caret) {
            self.bump();
            self.power_exponent()
        } else {
            Ok(1)
        }
    }

    fn power_exponent(&mut self) -> Result<u32> {
        match self.bump() {
            Some(Tok::Int(n)) if n >= 0 && n <= u32::MAX as i64 => Ok(n as u32),
            _ => Err(self.err_at("expected a non-negative integer exponent after `^`")),
        }
    }
}

fn constant(nvars: usize, v: i64) -> TermMap {
    let mut m = TermMap::new();
    m.insert(vec![0; nvars], v);
    m
}

fn merge(acc: &mut TermMap, other: TermMap, sign: i64) {
    for (e, c) in other {
        *acc.entry(e).or_insert(0) += sign * c;
    }
}

fn mul_maps(a: &TermMap, b: &TermMap) -> TermMap {
    let mut out = TermMap::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            *out.entry(e).or_insert(0) += ca * cb;
        }
    }
    out
}

/// Parses `text` over the given variable names. Terms with zero coefficient
/// are dropped; the result is sorted by exponent vector for determinism.
pub fn parse_poly(text: &str, vars: &[String]) -> Result<RawPoly> {
    let toks = Lexer::run(text, vars)?;
    let mut parser = Parser {
        src: text,
        toks,
        pos: 0,
        nvars: vars.len(),
    };
    if parser.peek().is_none() {
        return Err(parser.err_at("empty polynomial"));
    }
    let m = parser.expr()?;
    if parser.peek().is_some() {
        return Err(parser.err_at("unexpected trailing input"));
    }
    Ok(m.into_iter().filter(|&(_, c)| c != 0).map(|(e, c)| (c, e)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vars(names: &[&str]) -> Vec<String> {
        names.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn basic_terms() {
        let v = vars(&["x", "y"]);
        let p = parse_poly("x^2 + 3*x*y", &v).unwrap();
        assert_eq!(p, vec![(3, vec![1, 1]), (1, vec![2, 0])]);
    }

    #[test]
    fn signs_and_parens() {
        let v = vars(&["x", "y"]);
        let p = parse_poly("-(x - y)^2 + x^2", &v).unwrap();
        // -(x^2 - 2xy + y^2) + x^2 = 2xy - y^2
        assert_eq!(p, vec![(-1, vec![0, 2]), (2, vec![1, 1])]);
    }

    #[test]
    fn cancellation_drops_terms() {
        let v = vars(&["x"]);
        assert!(parse_poly("x - x", &v).unwrap().is_empty());
    }

    #[test]
    fn rejects_unknown_variable_and_adjacency() {
        let v = vars(&["x"]);
        assert!(matches!(parse_poly("x + z", &v), Err(Error::Parse { .. })));
        // `3x` without `*` leaves trailing input
        assert!(matches!(parse_poly("3 x", &v), Err(Error::Parse { .. })));
    }

    #[test]
    fn whitespace_insensitive() {
        let v = vars(&["x", "y"]);
        assert_eq!(parse_poly(" x ^ 2+ y", &v).unwrap(), parse_poly("x^2+y", &v).unwrap());
    }
}
