//! Text format for polynomials: a signed sum of terms like
//! `u1*u2 - h*u3 + 2/3*h^2`.  The printer in `mod.rs` emits exactly
//! this grammar, so parse/print round-trips.

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::One;

use super::{Coeff, Monomial, Polynomial, VarSet};
use crate::error::{Error, Result};

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    Int(BigInt),
    Ident(String),
    End,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Lexer<'a> {
        Lexer {
            src: src.as_bytes(),
            pos: 0,
        }
    }

    fn err(&self, msg: &str) -> Error {
        Error::Parse {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn next(&mut self) -> Result<Tok> {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
        if self.pos >= self.src.len() {
            return Ok(Tok::End);
        }
        let c = self.src[self.pos];
        self.pos += 1;
        match c {
            b'+' => Ok(Tok::Plus),
            b'-' => Ok(Tok::Minus),
            b'*' => Ok(Tok::Star),
            b'^' => Ok(Tok::Caret),
            b'/' => Ok(Tok::Slash),
            b'0'..=b'9' => {
                let start = self.pos - 1;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let s = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                Ok(Tok::Int(s.parse().unwrap()))
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos - 1;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let s = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                Ok(Tok::Ident(s.to_string()))
            }
            _ => Err(self.err(&format!("unexpected character `{}`", c as char))),
        }
    }

    fn peek(&mut self) -> Result<Tok> {
        let save = self.pos;
        let t = self.next()?;
        self.pos = save;
        Ok(t)
    }
}

/// Parse a polynomial in the given ring.
pub fn parse_polynomial(ring: &Arc<VarSet>, src: &str) -> Result<Polynomial> {
    let mut lx = Lexer::new(src);
    let mut acc = Polynomial::zero(ring);
    let mut sign = BigInt::one();
    match lx.peek()? {
        Tok::End => return Err(lx.err("empty input")),
        Tok::Minus => {
            lx.next()?;
            sign = -sign;
        }
        Tok::Plus => {
            lx.next()?;
        }
        _ => {}
    }
    loop {
        let term = parse_term(ring, &mut lx)?;
        acc = acc.add(&term.scale(&Coeff::from_integer(sign.clone())))?;
        match lx.next()? {
            Tok::Plus => sign = BigInt::one(),
            Tok::Minus => sign = -BigInt::one(),
            Tok::End => return Ok(acc),
            t => return Err(lx.err(&format!("expected `+`, `-`, or end, found {t:?}"))),
        }
    }
}

fn parse_term(ring: &Arc<VarSet>, lx: &mut Lexer<'_>) -> Result<Polynomial> {
    let mut coeff = Coeff::one();
    let mut pairs: Vec<(usize, u32)> = Vec::new();
    let mut have_factor = false;
    loop {
        match lx.peek()? {
            Tok::Int(_) => {
                let Tok::Int(n) = lx.next()? else { unreachable!() };
                let mut c = Coeff::from_integer(n);
                if lx.peek()? == Tok::Slash {
                    lx.next()?;
                    match lx.next()? {
                        Tok::Int(d) => c /= Coeff::from_integer(d),
                        _ => return Err(lx.err("expected denominator after `/`")),
                    }
                }
                coeff *= c;
                have_factor = true;
            }
            Tok::Ident(_) => {
                let Tok::Ident(name) = lx.next()? else { unreachable!() };
                let idx = ring
                    .index_of(&name)
                    .ok_or(Error::UnknownVariable(name))?;
                let mut exp: u32 = 1;
                if lx.peek()? == Tok::Caret {
                    lx.next()?;
                    match lx.next()? {
                        Tok::Int(n) => {
                            exp = n
                                .try_into()
                                .map_err(|_| lx.err("exponent out of range"))?
                        }
                        _ => return Err(lx.err("expected integer exponent after `^`")),
                    }
                }
                match pairs.iter_mut().find(|(i, _)| *i == idx) {
                    Some((_, e)) => *e += exp,
                    None => pairs.push((idx, exp)),
                }
                have_factor = true;
            }
            _ => break,
        }
        if lx.peek()? == Tok::Star {
            lx.next()?;
        }
    }
    if !have_factor {
        return Err(lx.err("expected a term"));
    }
    Ok(Polynomial::from_term(
        ring,
        Monomial::from_pairs(pairs),
        coeff,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_basic() {
        let r = VarSet::new(vec!["u1", "u2", "u3", "h"]);
        let p = parse_polynomial(&r, "u1*u2 - h*u3 + 2/3*h^2").unwrap();
        assert_eq!(p.num_terms(), 3);
        assert_eq!(p.to_string(), "u1*u2 - u3*h + 2/3*h^2");
        // reparse of canonical print is the same polynomial
        assert_eq!(parse_polynomial(&r, &p.to_string()).unwrap(), p);
    }

    #[test]
    fn parse_errors() {
        let r = VarSet::new(vec!["u1"]);
        assert!(matches!(
            parse_polynomial(&r, "w + 1"),
            Err(Error::UnknownVariable(_))
        ));
        assert!(matches!(parse_polynomial(&r, ""), Err(Error::Parse { .. })));
        assert!(matches!(
            parse_polynomial(&r, "u1 +"),
            Err(Error::Parse { .. })
        ));
    }

    #[test]
    fn leading_minus_and_constants() {
        let r = VarSet::new(vec!["u1"]);
        let p = parse_polynomial(&r, "-u1 + 5").unwrap();
        assert_eq!(p.to_string(), "-u1 + 5");
        let q = parse_polynomial(&r, "3/6").unwrap();
        assert_eq!(q.to_string(), "1/2");
    }
}
