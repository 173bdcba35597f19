//! Plain-text, LaTeX and JSON presentation of closed forms.

use std::fmt::Write;

use harmsum_core::arith::FactoredForm;
use harmsum_core::{ClosedForm, HarmonicExpr, Monomial, Notation, Weight};

use crate::json;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Plain,
    Latex,
    Json,
}

/// Left and right side of an identity, rendered separately.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RenderedIdentity {
    pub lhs: String,
    pub rhs: String,
    pub format: Format,
}

impl RenderedIdentity {
    pub fn of(cf: &ClosedForm, format: Format) -> Self {
        RenderedIdentity {
            lhs: render_lhs(cf, format),
            rhs: render(cf, format),
            format,
        }
    }
}

impl std::fmt::Display for RenderedIdentity {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.format {
            Format::Json => f.write_str(&self.rhs),
            _ => write!(f, "{} = {}", self.lhs, self.rhs),
        }
    }
}

/// Right-hand side in the requested format; JSON yields the whole document.
pub fn render(cf: &ClosedForm, format: Format) -> String {
    match format {
        Format::Plain => render_expr(&cf.expr, Notation::Plain),
        Format::Latex => render_expr(&cf.expr, Notation::Latex),
        Format::Json => json::to_json(cf),
    }
}

fn basis_symbol(m: Monomial, notation: Notation) -> &'static str {
    let (h1, h2) = (m.h1_degree(), m.h2_degree());
    match notation {
        Notation::Plain => match (h1, h2) {
            (0, 0) => "",
            (1, 0) => "H(n+1)",
            (2, 0) => "H(n+1)^2",
            (0, 1) => "H2(n+1)",
            (1, 1) => "H(n+1)*H2(n+1)",
            _ => "H(n+1)^2*H2(n+1)",
        },
        Notation::Latex => match (h1, h2) {
            (0, 0) => "",
            (1, 0) => "H_{n+1}",
            (2, 0) => "H_{n+1}^2",
            (0, 1) => "H_{n+1}^{(2)}",
            (1, 1) => "H_{n+1}H_{n+1}^{(2)}",
            _ => "H_{n+1}^2H_{n+1}^{(2)}",
        },
    }
}

/// Terms ordered `H^2, H, H^(2), cross terms, constant`; `0` when empty.
pub fn render_expr(expr: &HarmonicExpr, notation: Notation) -> String {
    let mut out = String::new();
    for m in Monomial::ALL {
        let Some(coeff) = expr.coeff(m) else { continue };
        let form = FactoredForm::of(coeff).expect("stored coefficients are nonzero");
        let first = out.is_empty();
        match (notation, form.negative, first) {
            (_, true, true) => out.push('-'),
            (_, false, true) => {}
            (Notation::Plain, true, false) => out.push_str(" - "),
            (Notation::Plain, false, false) => out.push_str(" + "),
            (Notation::Latex, true, false) => out.push('-'),
            (Notation::Latex, false, false) => out.push('+'),
        }
        let symbol = basis_symbol(m, notation);
        if symbol.is_empty() {
            form.write_magnitude(&mut out, notation).unwrap();
            continue;
        }
        if !form.is_unit() {
            let wrap = form.is_bare_sum();
            if wrap {
                out.push('(');
            }
            form.write_magnitude(&mut out, notation).unwrap();
            if wrap {
                out.push(')');
            }
            if notation == Notation::Plain {
                out.push('*');
            }
        }
        out.push_str(symbol);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn shifted_k(p: i64) -> String {
    match p {
        0 => "k".to_owned(),
        p if p > 0 => format!("k+{p}"),
        p => format!("k-{}", -p),
    }
}

/// The summation being evaluated, e.g. `\sum_{k=0}^{n} \frac{1}{(k+1)(k+2)} H_k`.
pub fn render_lhs(cf: &ClosedForm, format: Format) -> String {
    let shifts = cf.source.shifts();
    let d = cf.lower_limit;
    let mut s = String::new();
    match format {
        Format::Latex => {
            let den = if shifts.len() == 1 {
                shifted_k(shifts[0])
            } else {
                shifts.iter().map(|&p| wrapped_k(p)).collect()
            };
            let weight = match cf.source.weight() {
                Weight::Hk => "H_k",
                Weight::HnMinusK => "H_{n-k}",
            };
            write!(s, "\\sum_{{k={d}}}^{{n}} \\frac{{1}}{{{den}}} {weight}").unwrap();
        }
        _ => {
            let wrapped: Vec<String> = shifts.iter().map(|&p| wrapped_k(p)).collect();
            let den = match wrapped.as_slice() {
                [single] => single.clone(),
                many => format!("({})", many.join("*")),
            };
            let weight = match cf.source.weight() {
                Weight::Hk => "H(k)",
                Weight::HnMinusK => "H(n-k)",
            };
            write!(s, "sum_{{k={d}}}^{{n}} {weight}/{den}").unwrap();
        }
    }
    s
}

fn wrapped_k(p: i64) -> String {
    if p == 0 {
        "k".to_owned()
    } else {
        format!("({})", shifted_k(p))
    }
}
