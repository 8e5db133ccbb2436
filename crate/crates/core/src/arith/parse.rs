//! Text grammar for Laurent polynomials in `r`:
//!
//! ```text
//! expr := [sign] term (('+' | '-') term)*
//! term := rat | rat '*'? mono | mono
//! mono := 'r' ('^' int)?
//! rat  := int ('/' uint)?
//! ```
//!
//! `int` may carry a leading `-`; whitespace is ignored. Positions in errors
//! are byte offsets into the original text.

use super::{LaurentPoly, Rational, Ring};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at position {pos}: expected {expected}")]
    Syntax { pos: usize, expected: &'static str },
    #[error("zero denominator at position {pos}")]
    ZeroDenominator { pos: usize },
}

impl ParseError {
    pub fn position(&self) -> usize {
        match self {
            ParseError::Syntax { pos, .. } | ParseError::ZeroDenominator { pos } => *pos,
        }
    }
}

struct Cursor<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Self {
        Cursor { src: text.as_bytes(), pos: 0 }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn err(&mut self, expected: &'static str) -> ParseError {
        self.skip_ws();
        ParseError::Syntax { pos: self.pos, expected }
    }

    fn digits(&mut self) -> Option<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return None;
        }
        std::str::from_utf8(&self.src[start..self.pos]).ok()?.parse().ok()
    }

    fn int(&mut self) -> Result<BigInt, ParseError> {
        let neg = self.eat(b'-');
        match self.digits() {
            Some(d) if neg => Ok(-d),
            Some(d) => Ok(d),
            None => Err(self.err("integer")),
        }
    }

    fn rat(&mut self) -> Result<Rational, ParseError> {
        let n = self.int()?;
        if self.eat(b'/') {
            let at = {
                self.skip_ws();
                self.pos
            };
            let d = self.digits().ok_or_else(|| self.err("unsigned integer"))?;
            if d.is_zero() {
                return Err(ParseError::ZeroDenominator { pos: at });
            }
            Ok(Rational::new(n, d))
        } else {
            Ok(Rational::from_integer(n))
        }
    }

    fn exponent(&mut self) -> Result<i64, ParseError> {
        if self.eat(b'^') {
            let at = {
                self.skip_ws();
                self.pos
            };
            let e = self.int()?;
            i64::try_from(e).map_err(|_| ParseError::Syntax { pos: at, expected: "exponent fitting in 64 bits" })
        } else {
            Ok(1)
        }
    }

    fn starts_rat(&mut self) -> bool {
        matches!(self.peek(), Some(b'0'..=b'9') | Some(b'-'))
    }

    fn term(&mut self) -> Result<LaurentPoly, ParseError> {
        if self.starts_rat() {
            let c = self.rat()?;
            let starred = self.eat(b'*');
            if self.eat(b'r') {
                let e = self.exponent()?;
                Ok(LaurentPoly::monomial(c, e))
            } else if starred {
                Err(self.err("'r'"))
            } else {
                Ok(LaurentPoly::constant(c))
            }
        } else if self.eat(b'r') {
            let e = self.exponent()?;
            Ok(LaurentPoly::r_pow(e))
        } else {
            Err(self.err("number or 'r'"))
        }
    }
}

/// Parses a Laurent polynomial in `r`.
pub fn parse_laurent(text: &str) -> Result<LaurentPoly, ParseError> {
    let mut cur = Cursor::new(text);
    let mut sign = Rational::one();
    if cur.peek() == Some(b'-') {
        // a leading '-' in front of 'r' is a sign; in front of digits it
        // belongs to the integer literal
        let save = cur.pos;
        cur.pos += 1;
        if cur.peek() == Some(b'r') {
            sign = -sign;
        } else {
            cur.pos = save;
        }
    } else {
        cur.eat(b'+');
    }
    let mut acc = cur.term()?.scale(&sign);
    loop {
        match cur.peek() {
            None => return Ok(acc),
            Some(b'+') => {
                cur.pos += 1;
                acc = acc.add_ref(&cur.term()?);
            }
            Some(b'-') => {
                cur.pos += 1;
                acc = acc.sub_ref(&cur.term()?);
            }
            Some(_) => return Err(cur.err("'+', '-' or end of input")),
        }
    }
}

/// Parses a bare rational literal `int ('/' uint)?`.
pub fn parse_rational(text: &str) -> Result<Rational, ParseError> {
    let mut cur = Cursor::new(text);
    let q = cur.rat()?;
    if cur.peek().is_some() {
        return Err(cur.err("end of input"));
    }
    Ok(q)
}
