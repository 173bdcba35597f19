use alloc::vec::Vec;
use core::fmt::{self, Write};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{Polynomial, Rational, RationalFunction};

/// Output notation for coefficient rendering.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Notation {
    /// Text accepted back by [`parse_ratfunc`](super::parse_ratfunc).
    Plain,
    Latex,
}

/// One polynomial factor: primitive, integer coefficients, positive leading
/// coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factor {
    pub poly: Polynomial,
    pub exponent: u32,
}

impl Factor {
    fn is_sum(&self) -> bool {
        self.poly.coeffs().iter().filter(|c| !c.is_zero()).count() > 1
    }
}

/// A rational function split for display as
/// `sign * numer_scale * prod(numer) / (denom_scale * prod(denom))`.
///
/// Integer-linear factors come first, ordered by descending root; whatever
/// does not split into integer-linear factors stays as one expanded residual
/// factor at the end.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactoredForm {
    pub negative: bool,
    pub numer_scale: BigInt,
    pub denom_scale: BigInt,
    pub numer: Vec<Factor>,
    pub denom: Vec<Factor>,
}

fn split(poly: &Polynomial) -> (Rational, Vec<Factor>) {
    let (linear, residual) = poly
        .split_linear_factors()
        .expect("only nonzero polynomials are factored");
    let mut factors: Vec<Factor> = linear
        .into_iter()
        .map(|(root, exponent)| Factor {
            poly: Polynomial::shifted_symbol(-root),
            exponent,
        })
        .collect();
    let (content, primitive) = residual.primitive_split();
    if primitive.len() > 1 {
        factors.push(Factor {
            poly: Polynomial::from_bigints(&primitive),
            exponent: 1,
        });
    }
    (content, factors)
}

impl FactoredForm {
    /// `None` for the zero function.
    pub fn of(f: &RationalFunction) -> Option<Self> {
        if f.is_zero() {
            return None;
        }
        let (num_content, numer) = split(f.numer());
        let (den_content, denom) = split(f.denom());
        let scale = num_content / den_content;
        Some(FactoredForm {
            negative: scale.is_negative(),
            numer_scale: scale.numer().abs(),
            denom_scale: scale.denom().clone(),
            numer,
            denom,
        })
    }

    pub fn has_denominator(&self) -> bool {
        !self.denom.is_empty() || !self.denom_scale.is_one()
    }

    /// True when the magnitude is exactly one.
    pub fn is_unit(&self) -> bool {
        self.numer.is_empty() && !self.has_denominator() && self.numer_scale.is_one()
    }

    /// True when the magnitude renders as a bare sum such as `n-1`, which
    /// needs parentheses before being multiplied by anything.
    pub fn is_bare_sum(&self) -> bool {
        !self.has_denominator()
            && self.numer_scale.is_one()
            && self.numer.len() == 1
            && self.numer[0].exponent == 1
            && self.numer[0].is_sum()
    }

    /// Writes the magnitude (no sign).
    pub fn write_magnitude(&self, out: &mut dyn Write, notation: Notation) -> fmt::Result {
        match notation {
            Notation::Plain => {
                let wrap_numer = self.has_denominator();
                write_product(out, &self.numer_scale, &self.numer, notation, wrap_numer)?;
                if self.has_denominator() {
                    out.write_char('/')?;
                    let items = self.denom.len() + usize::from(!self.denom_scale.is_one());
                    let wrap = items > 1;
                    if wrap {
                        out.write_char('(')?;
                    }
                    write_product(out, &self.denom_scale, &self.denom, notation, true)?;
                    if wrap {
                        out.write_char(')')?;
                    }
                }
                Ok(())
            }
            Notation::Latex => {
                if self.has_denominator() {
                    out.write_str("\\frac{")?;
                    write_product(out, &self.numer_scale, &self.numer, notation, false)?;
                    out.write_str("}{")?;
                    write_product(out, &self.denom_scale, &self.denom, notation, false)?;
                    out.write_char('}')
                } else {
                    write_product(out, &self.numer_scale, &self.numer, notation, false)
                }
            }
        }
    }

    pub fn write(&self, out: &mut dyn Write, notation: Notation) -> fmt::Result {
        if !self.negative {
            return self.write_magnitude(out, notation);
        }
        out.write_char('-')?;
        if self.is_bare_sum() {
            out.write_char('(')?;
            self.write_magnitude(out, notation)?;
            out.write_char(')')
        } else {
            self.write_magnitude(out, notation)
        }
    }
}

/// `force_parens` wraps a lone sum factor, as needed right after `/`.
fn write_product(
    out: &mut dyn Write,
    scale: &BigInt,
    factors: &[Factor],
    notation: Notation,
    force_parens: bool,
) -> fmt::Result {
    let show_scale = !scale.is_one() || factors.is_empty();
    let items = factors.len() + usize::from(show_scale);
    if show_scale {
        write!(out, "{scale}")?;
    }
    for (i, factor) in factors.iter().enumerate() {
        if notation == Notation::Plain && (show_scale || i > 0) {
            out.write_char('*')?;
        }
        let parens = factor.is_sum() && (items > 1 || factor.exponent > 1 || force_parens);
        if parens {
            out.write_char('(')?;
        }
        write_poly(out, &factor.poly, notation)?;
        if parens {
            out.write_char(')')?;
        }
        if factor.exponent > 1 {
            write!(out, "^{}", factor.exponent)?;
        }
    }
    Ok(())
}

/// Expanded form, highest degree first.
fn write_poly(out: &mut dyn Write, poly: &Polynomial, notation: Notation) -> fmt::Result {
    if poly.is_zero() {
        return out.write_char('0');
    }
    let mut first = true;
    for (deg, c) in poly.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        if c.is_negative() {
            out.write_char('-')?;
        } else if !first {
            out.write_char('+')?;
        }
        first = false;
        let mag = c.abs();
        if deg == 0 {
            write_rational(out, &mag, notation)?;
            continue;
        }
        if !mag.is_one() {
            write_rational(out, &mag, notation)?;
            if notation == Notation::Plain {
                out.write_char('*')?;
            }
        }
        out.write_char('n')?;
        if deg > 1 {
            write!(out, "^{deg}")?;
        }
    }
    Ok(())
}

fn write_rational(out: &mut dyn Write, r: &Rational, notation: Notation) -> fmt::Result {
    match notation {
        Notation::Latex if !r.is_integer() => {
            write!(out, "\\frac{{{}}}{{{}}}", r.numer(), r.denom())
        }
        _ => write!(out, "{r}"),
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_poly(f, self, Notation::Plain)
    }
}

/// Factored plain text, for example `-(3*n^2+7*n-2)/(2*(n+2)*(n+3))`.
impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match FactoredForm::of(self) {
            None => f.write_char('0'),
            Some(form) => form.write(f, Notation::Plain),
        }
    }
}

impl RationalFunction {
    /// Factored rendering in the requested notation.
    pub fn render(&self, notation: Notation) -> alloc::string::String {
        let mut s = alloc::string::String::new();
        match FactoredForm::of(self) {
            None => s.push('0'),
            Some(form) => form.write(&mut s, notation).expect("writing to a String"),
        }
        s
    }
}
