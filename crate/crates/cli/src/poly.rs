//! Recursive-descent parser for monic polynomials in `t`, e.g. `t^2-3/2*t+1`.
//!
//! ```text
//! poly    := sign? term (('+' | '-') term)*
//! term    := number ('*' power)? | power
//! power   := 't' ('^' integer)?
//! number  := integer ('/' integer)?
//! ```

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use nilcone::{CasimirPolynomial, Rational};

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
#[error("bad polynomial {input:?} at byte {pos}: {msg}")]
pub struct ParseError {
    input: String,
    pos: usize,
    msg: String,
}

struct Parser<'a> {
    src: &'a str,
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Self { src, bytes: src.as_bytes(), pos: 0 }
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError { input: self.src.to_string(), pos: self.pos, msg: msg.into() })
    }

    fn skip_ws(&mut self) {
        while self.bytes.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn integer(&mut self) -> Result<BigInt, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.bytes.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected a number");
        }
        Ok(self.src[start..self.pos].parse().expect("ascii digits"))
    }

    fn number(&mut self) -> Result<Rational, ParseError> {
        let p = self.integer()?;
        if self.eat(b'/') {
            let q = self.integer()?;
            if q.is_zero() {
                return self.err("zero denominator");
            }
            Ok(Rational::new(p, q))
        } else {
            Ok(Rational::from_integer(p))
        }
    }

    fn power(&mut self) -> Result<usize, ParseError> {
        if !self.eat(b't') {
            return self.err("expected 't'");
        }
        if self.eat(b'^') {
            let e = self.integer()?;
            match usize::try_from(&e) {
                Ok(e) if e <= 64 => Ok(e),
                _ => self.err("exponent too large"),
            }
        } else {
            Ok(1)
        }
    }

    fn term(&mut self) -> Result<(Rational, usize), ParseError> {
        match self.peek() {
            Some(b't') => Ok((Rational::one(), self.power()?)),
            Some(c) if c.is_ascii_digit() => {
                let c = self.number()?;
                if self.eat(b'*') || self.peek() == Some(b't') {
                    Ok((c, self.power()?))
                } else {
                    Ok((c, 0))
                }
            }
            _ => self.err("expected a term"),
        }
    }

    fn poly(&mut self) -> Result<BTreeMap<usize, Rational>, ParseError> {
        let mut out: BTreeMap<usize, Rational> = BTreeMap::new();
        let mut negative = if self.eat(b'-') {
            true
        } else {
            self.eat(b'+');
            false
        };
        loop {
            let (c, e) = self.term()?;
            let c = if negative { -c } else { c };
            *out.entry(e).or_insert_with(Rational::zero) += c;
            match self.peek() {
                None => break,
                Some(b'+') => negative = false,
                Some(b'-') => negative = true,
                Some(_) => return self.err("expected '+' or '-'"),
            }
            self.pos += 1;
        }
        out.retain(|_, c| !c.is_zero());
        Ok(out)
    }
}

pub fn parse_monic(src: &str) -> Result<CasimirPolynomial, ParseError> {
    let mut parser = Parser::new(src);
    let coeffs = parser.poly()?;
    let Some((&degree, lead)) = coeffs.iter().next_back() else {
        return parser.err("polynomial is zero");
    };
    if degree == 0 {
        return parser.err("polynomial must have degree at least 1");
    }
    if !lead.is_one() {
        return parser.err("polynomial must be monic");
    }
    let lower = (0..degree)
        .map(|k| coeffs.get(&k).cloned().unwrap_or_else(Rational::zero))
        .collect();
    Ok(CasimirPolynomial::monic(lower).expect("degree ≥ 1"))
}
