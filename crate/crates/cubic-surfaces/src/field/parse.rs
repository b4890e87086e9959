//! Textual scalar syntax: integers, fractions p/q, the field generator, the
//! nine public variables, and `+ - * / ^ ( )`.

use num::BigInt;

use super::fraction::Fe;
use super::numfield::{Field, NfElem, Rat};
use super::poly::Var;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Sym(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn tokenize(s: &str) -> Result<Vec<Tok>> {
    let mut out = vec![];
    let mut chars = s.chars().peekable();
    while let Some(&ch) = chars.peek() {
        match ch {
            ' ' | '\t' | '\n' => {
                chars.next();
            }
            '0'..='9' => {
                let mut digits = String::new();
                while let Some(&c) = chars.peek() {
                    if c.is_ascii_digit() {
                        digits.push(c);
                        chars.next();
                    } else {
                        break;
                    }
                }
                out.push(Tok::Int(digits.parse().unwrap()));
            }
            'a'..='z' | 'A'..='Z' | '_' => {
                let mut name = String::new();
                while let Some(&c) = chars.peek() {
                    if c.is_ascii_alphanumeric() || c == '_' {
                        name.push(c);
                        chars.next();
                    } else {
                        break;
                    }
                }
                out.push(Tok::Sym(name));
            }
            '+' => {
                chars.next();
                out.push(Tok::Plus);
            }
            '-' => {
                chars.next();
                out.push(Tok::Minus);
            }
            '*' => {
                chars.next();
                out.push(Tok::Star);
            }
            '/' => {
                chars.next();
                out.push(Tok::Slash);
            }
            '^' => {
                chars.next();
                out.push(Tok::Caret);
            }
            '(' => {
                chars.next();
                out.push(Tok::LParen);
            }
            ')' => {
                chars.next();
                out.push(Tok::RParen);
            }
            other => return Err(Error::Parse(format!("unexpected character `{}`", other))),
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<Tok>,
    pos: usize,
    field: &'a Field,
    allow_vars: bool,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expr(&mut self) -> Result<Fe> {
        let mut acc = self.term()?;
        while let Some(tok) = self.peek() {
            match tok {
                Tok::Plus => {
                    self.pos += 1;
                    let rhs = self.term()?;
                    acc = &acc + &rhs;
                }
                Tok::Minus => {
                    self.pos += 1;
                    let rhs = self.term()?;
                    acc = &acc - &rhs;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Fe> {
        let mut acc = self.unary()?;
        while let Some(tok) = self.peek() {
            match tok {
                Tok::Star => {
                    self.pos += 1;
                    let rhs = self.unary()?;
                    acc = &acc * &rhs;
                }
                Tok::Slash => {
                    self.pos += 1;
                    let rhs = self.unary()?;
                    acc = acc.checked_div(&rhs)?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Fe> {
        if matches!(self.peek(), Some(Tok::Minus)) {
            self.pos += 1;
            let v = self.unary()?;
            return Ok(-&v);
        }
        self.power()
    }

    fn power(&mut self) -> Result<Fe> {
        let base = self.atom()?;
        if matches!(self.peek(), Some(Tok::Caret)) {
            self.pos += 1;
            match self.next() {
                Some(Tok::Int(n)) => {
                    let e: u32 = n
                        .try_into()
                        .map_err(|_| Error::Parse("exponent out of range".into()))?;
                    return base.pow(e as i32);
                }
                _ => return Err(Error::Parse("expected integer exponent after `^`".into())),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Fe> {
        match self.next() {
            Some(Tok::Int(n)) => Ok(Fe::from_nf(NfElem::from_rat(
                self.field,
                Rat::from_integer(n),
            ))),
            Some(Tok::Sym(name)) => {
                if name == self.field.generator_name() && self.field.degree() >= 2 {
                    return Ok(Fe::from_nf(NfElem::generator(self.field)?));
                }
                if self.allow_vars {
                    if let Some(v) = Var::from_name(&name) {
                        return Ok(Fe::var(self.field, v));
                    }
                }
                Err(Error::UnknownSymbol(name))
            }
            Some(Tok::LParen) => {
                let e = self.expr()?;
                match self.next() {
                    Some(Tok::RParen) => Ok(e),
                    _ => Err(Error::Parse("expected `)`".into())),
                }
            }
            other => Err(Error::Parse(format!("unexpected token {:?}", other))),
        }
    }
}

/// Parses a polynomial or rational-function expression in the nine public
/// variables over the given field.
pub fn parse_expr(field: &Field, src: &str) -> Result<Fe> {
    parse_with(field, src, true)
}

/// Parses a scalar (no variables allowed; the generator symbol is fine).
pub fn parse_scalar(field: &Field, src: &str) -> Result<Fe> {
    parse_with(field, src, false)
}

fn parse_with(field: &Field, src: &str, allow_vars: bool) -> Result<Fe> {
    let toks = tokenize(src)?;
    if toks.is_empty() {
        return Err(Error::Parse("empty expression".into()));
    }
    let mut p = Parser {
        toks,
        pos: 0,
        field,
        allow_vars,
    };
    let e = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(Error::Parse(format!(
            "trailing input at token {}",
            p.pos
        )));
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::super::numfield::{rat, NumberField};
    use super::*;

    #[test]
    fn parses_polynomials() {
        let f = NumberField::rationals();
        let p = parse_expr(&f, "2*x^2*y - x*y^2 + 1/2").unwrap();
        assert_eq!(p.to_string(), "2*x^2*y - x*y^2 + 1/2");
    }

    #[test]
    fn parse_print_parse_is_identity() {
        let f = NumberField::new("w", vec![rat(3), rat(0), rat(1)]).unwrap();
        for src in [
            "(1 - 2*w)*x^2 + w*y*z - 5",
            "c^2 + e*f",
            "(c^2 + e*f)/c",
            "-3/4",
            "w^2",
        ] {
            let p1 = parse_expr(&f, src).unwrap();
            let p2 = parse_expr(&f, &p1.to_string()).unwrap();
            assert_eq!(p1, p2, "round trip failed for {}", src);
        }
    }

    #[test]
    fn rejects_unknown_symbols() {
        let q = NumberField::rationals();
        assert!(matches!(
            parse_expr(&q, "q + 1").unwrap_err(),
            Error::UnknownSymbol(_)
        ));
        // the generator is not available over the plain rationals
        assert!(matches!(
            parse_scalar(&q, "w").unwrap_err(),
            Error::UnknownSymbol(_)
        ));
        let f = NumberField::new("w", vec![rat(3), rat(0), rat(1)]).unwrap();
        assert!(matches!(
            parse_scalar(&f, "x + 1").unwrap_err(),
            Error::UnknownSymbol(_)
        ));
    }
}
