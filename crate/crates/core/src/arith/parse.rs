//! Recursive-descent parser for rational-function text.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := ('+' | '-') unary | power
//! power  := atom ('^' integer)?
//! atom   := integer | 'n' | '(' expr ')'
//! ```
//!
//! Whitespace is ignored. Juxtaposition is not multiplication.

use num_bigint::BigInt;

use super::{Polynomial, Rational, RationalFunction};
use crate::error::{Error, Result};

/// Parses text such as `-(3*n^2-1)/((n-1)*n*(n+1))` into canonical form.
pub fn parse_ratfunc(text: &str) -> Result<RationalFunction> {
    let mut parser = Parser {
        src: text.as_bytes(),
        pos: 0,
    };
    let value = parser.expr()?;
    parser.skip_ws();
    if parser.pos < parser.src.len() {
        return Err(parser.error("unexpected trailing input"));
    }
    Ok(value)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, message: &'static str) -> Error {
        Error::SyntaxError {
            position: self.pos,
            message,
        }
    }

    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<RationalFunction> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<RationalFunction> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = &acc * &self.unary()?;
                }
                Some(b'/') => {
                    self.pos += 1;
                    let rhs = self.unary()?;
                    if rhs.is_zero() {
                        return Err(Error::ZeroDenominator);
                    }
                    acc = acc.checked_div(&rhs)?;
                }
                Some(b'n' | b'(' | b'0'..=b'9') => {
                    return Err(self.error("implicit multiplication is not allowed"))
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<RationalFunction> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(-self.unary()?)
            }
            Some(b'+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<RationalFunction> {
        let base = self.atom()?;
        if self.peek() != Some(b'^') {
            return Ok(base);
        }
        self.pos += 1;
        if !self.peek().is_some_and(|c| c.is_ascii_digit()) {
            return Err(self.error("exponent must be a nonnegative integer"));
        }
        let start = self.pos;
        let digits = self.digits();
        let exp: u32 = digits
            .parse()
            .map_err(|_| Error::SyntaxError {
                position: start,
                message: "exponent too large",
            })?;
        if self.peek() == Some(b'^') {
            return Err(self.error("chained exponents need parentheses"));
        }
        Ok(base.pow(exp))
    }

    fn digits(&mut self) -> &str {
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        core::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits")
    }

    fn atom(&mut self) -> Result<RationalFunction> {
        match self.peek() {
            Some(b'n') => {
                self.pos += 1;
                Ok(RationalFunction::from_polynomial(Polynomial::symbol()))
            }
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.error("expected ')'"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(b'0'..=b'9') => {
                let value: BigInt = self.digits().parse().expect("ascii digits");
                Ok(RationalFunction::constant(Rational::from_integer(value)))
            }
            Some(_) => Err(self.error("expected a number, 'n' or '('")),
            None => Err(self.error("unexpected end of input")),
        }
    }
}
