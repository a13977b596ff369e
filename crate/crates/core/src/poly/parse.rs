//! Parser for the textual syntax `3*x1^2*t - x2`.
//!
//! Grammar: an optional leading sign, then terms joined by `+`/`-`. A term is
//! a `*`-separated product of factors; a factor is an integer, a fraction
//! `a/b`, or a variable with an optional `^k`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use super::{MultiPoly, PolyRing};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
}

fn lex(text: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            ' ' | '\t' | '\n' => i += 1,
            '+' => {
                out.push(Tok::Plus);
                i += 1
            }
            '-' => {
                out.push(Tok::Minus);
                i += 1
            }
            '*' => {
                out.push(Tok::Star);
                i += 1
            }
            '^' => {
                out.push(Tok::Caret);
                i += 1
            }
            '/' => {
                out.push(Tok::Slash);
                i += 1
            }
            '0'..='9' => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let s: String = chars[start..i].iter().collect();
                out.push(Tok::Num(s.parse().expect("digits")));
            }
            'a'..='z' => {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_lowercase() || chars[i].is_ascii_digit()) {
                    i += 1;
                }
                out.push(Tok::Ident(chars[start..i].iter().collect()));
            }
            other => return Err(Error::Parse(format!("unexpected character {other:?}"))),
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<Tok>,
    pos: usize,
    ring: &'a PolyRing,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn expect_num(&mut self) -> Result<BigInt> {
        match self.next() {
            Some(Tok::Num(n)) => Ok(n),
            other => Err(Error::Parse(format!("expected a number, found {other:?}"))),
        }
    }

    fn factor(&mut self) -> Result<MultiPoly> {
        match self.next() {
            Some(Tok::Num(n)) => {
                let c = if self.peek() == Some(&Tok::Slash) {
                    self.pos += 1;
                    let d = self.expect_num()?;
                    if d == BigInt::from(0) {
                        return Err(Error::Parse("zero denominator".into()));
                    }
                    BigRational::new(n, d)
                } else {
                    BigRational::from_integer(n)
                };
                self.ring.constant_rat(c)
            }
            Some(Tok::Ident(name)) => {
                let v = self.ring.var(&name)?;
                if self.peek() == Some(&Tok::Caret) {
                    self.pos += 1;
                    let k: u32 = self
                        .expect_num()?
                        .try_into()
                        .map_err(|_| Error::Parse("exponent too large".into()))?;
                    Ok(v.pow(k))
                } else {
                    Ok(v)
                }
            }
            other => Err(Error::Parse(format!("expected a factor, found {other:?}"))),
        }
    }

    fn term(&mut self) -> Result<MultiPoly> {
        let mut acc = self.factor()?;
        while self.peek() == Some(&Tok::Star) {
            self.pos += 1;
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn poly(&mut self) -> Result<MultiPoly> {
        let mut acc = self.ring.zero();
        let mut sign = match self.peek() {
            Some(Tok::Minus) => {
                self.pos += 1;
                -BigRational::one()
            }
            Some(Tok::Plus) => {
                self.pos += 1;
                BigRational::one()
            }
            _ => BigRational::one(),
        };
        loop {
            let t = self.term()?;
            acc = &acc + &t.scale(&sign);
            match self.next() {
                None => return Ok(acc),
                Some(Tok::Plus) => sign = BigRational::one(),
                Some(Tok::Minus) => sign = -BigRational::one(),
                Some(other) => return Err(Error::Parse(format!("unexpected token {other:?}"))),
            }
        }
    }
}

pub(super) fn parse(ring: &PolyRing, text: &str) -> Result<MultiPoly> {
    let toks = lex(text)?;
    if toks.is_empty() {
        return Err(Error::Parse("empty input".into()));
    }
    Parser { toks, pos: 0, ring }.poly()
}
