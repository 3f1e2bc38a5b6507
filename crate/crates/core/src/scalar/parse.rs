//! Polynomial text syntax: integers, `p/q`, `i`, identifiers, `+ - * / ^`, parentheses.
//!
//! Division is only allowed by nonzero constants.

use std::sync::Arc;

use num_traits::Zero;

use super::gauss::GaussRational;
use super::poly::Scalar;
use super::ring::CoordinateRing;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(i128),
    Ident(String),
    Op(char),
}

fn lex(src: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let chars: Vec<char> = src.chars().collect();
    let mut k = 0;
    while k < chars.len() {
        let c = chars[k];
        if c.is_whitespace() {
            k += 1;
        } else if c.is_ascii_digit() {
            let start = k;
            while k < chars.len() && chars[k].is_ascii_digit() {
                k += 1;
            }
            let s: String = chars[start..k].iter().collect();
            let v = s
                .parse::<i128>()
                .map_err(|_| Error::Parse(format!("integer literal `{}` out of range", s)))?;
            out.push(Tok::Int(v));
        } else if c.is_alphabetic() || c == '_' {
            let start = k;
            while k < chars.len() && (chars[k].is_alphanumeric() || chars[k] == '_') {
                k += 1;
            }
            out.push(Tok::Ident(chars[start..k].iter().collect()));
        } else if "+-*/^()".contains(c) {
            out.push(Tok::Op(c));
            k += 1;
        } else {
            return Err(Error::Parse(format!(
                "unexpected character `{}` in `{}`",
                c, src
            )));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<Tok>,
    pos: usize,
    ring: &'a Arc<CoordinateRing>,
    src: &'a str,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn eat(&mut self, op: char) -> bool {
        if self.peek() == Some(&Tok::Op(op)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn err(&self, msg: &str) -> Error {
        Error::Parse(format!("{} in `{}`", msg, self.src))
    }

    fn expr(&mut self) -> Result<Scalar> {
        let mut acc = if self.eat('-') {
            -self.term()?
        } else {
            self.eat('+');
            self.term()?
        };
        loop {
            if self.eat('+') {
                acc = &acc + &self.term()?;
            } else if self.eat('-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Scalar> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc = &acc * &self.unary()?;
            } else if self.eat('/') {
                let d = self.unary()?;
                let c = d
                    .as_constant()
                    .ok_or_else(|| self.err("division by a non-constant"))?;
                if c.is_zero() {
                    return Err(self.err("division by zero"));
                }
                acc = acc.scale(&c.inv().expect("nonzero"));
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<Scalar> {
        if self.eat('-') {
            return Ok(-self.unary()?);
        }
        if self.eat('+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<Scalar> {
        let base = self.atom()?;
        if self.eat('^') {
            match self.peek().cloned() {
                Some(Tok::Int(e)) if e >= 0 && e <= u32::MAX as i128 => {
                    self.pos += 1;
                    Ok(base.pow(e as u32))
                }
                _ => Err(self.err("exponent must be a nonnegative integer")),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Scalar> {
        match self.peek().cloned() {
            Some(Tok::Int(v)) => {
                self.pos += 1;
                Ok(Scalar::constant(self.ring, GaussRational::from_int(v)))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                if name == "i" {
                    Ok(Scalar::i(self.ring))
                } else {
                    Scalar::var_named(self.ring, &name)
                }
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return Err(self.err("missing `)`"));
                }
                Ok(e)
            }
            Some(t) => Err(self.err(&format!("unexpected token {:?}", t))),
            None => Err(self.err("unexpected end of input")),
        }
    }
}

/// Parses `src` and reduces it into `ring`'s normal form.
pub fn parse_scalar(ring: &Arc<CoordinateRing>, src: &str) -> Result<Scalar> {
    let toks = lex(src)?;
    if toks.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    let mut p = Parser {
        toks,
        pos: 0,
        ring,
        src,
    };
    let v = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(p.err("trailing input"));
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_prints() {
        let ring = CoordinateRing::free(&["x", "y"]);
        let p = parse_scalar(&ring, "x + (1+2*i)*y").unwrap();
        assert_eq!(p.to_string(), "x + (1+2*i)*y");
        assert_eq!(p.conj().to_string(), "x + (1-2*i)*y");
        let q = parse_scalar(&ring, "-(x - 1/2)^2").unwrap();
        assert_eq!(q.to_string(), "-x^2 + x - 1/4");
        assert_eq!(parse_scalar(&ring, "6/4").unwrap().to_string(), "3/2");
    }

    #[test]
    fn rejects_bad_input() {
        let ring = CoordinateRing::free(&["x"]);
        assert!(matches!(
            parse_scalar(&ring, "z"),
            Err(Error::UnknownVariable(_))
        ));
        assert!(matches!(parse_scalar(&ring, "1/x"), Err(Error::Parse(_))));
        assert!(matches!(parse_scalar(&ring, "x +"), Err(Error::Parse(_))));
        assert!(matches!(parse_scalar(&ring, "(x"), Err(Error::Parse(_))));
    }

    #[test]
    fn round_trip_through_display() {
        let ring = CoordinateRing::sphere(&["x", "y", "z", "t"]);
        let p = parse_scalar(&ring, "t^3 - 1/3*i*x*y + (2-i)*z").unwrap();
        let q = parse_scalar(&ring, &p.to_string()).unwrap();
        assert_eq!(p, q);
    }
}
