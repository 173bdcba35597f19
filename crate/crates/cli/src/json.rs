//! JSON form of a [`ClosedForm`].
//!
//! ```json
//! {"shifts":[1,2],"weight":"hk","d":0,"n_min":0,
//!  "coefficients":{"1":{"num":["1","1"],"den":["2","1"]},"H1":{"num":["-1"],"den":["2","1"]}}}
//! ```
//!
//! Coefficient lists are ascending in `n`; every rational is a decimal
//! string (`"-3"`, `"7/12"`). Absent monomials are zero.

use std::collections::BTreeMap;

use harmsum_core::{
    ClosedForm, HarmonicExpr, Monomial, Polynomial, Rational, RationalFunction, ShiftSet, Weight,
};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum WeightTag {
    #[serde(rename = "hk")]
    Hk,
    #[serde(rename = "hnmk")]
    HnMinusK,
}

impl From<Weight> for WeightTag {
    fn from(w: Weight) -> Self {
        match w {
            Weight::Hk => WeightTag::Hk,
            Weight::HnMinusK => WeightTag::HnMinusK,
        }
    }
}

impl From<WeightTag> for Weight {
    fn from(w: WeightTag) -> Self {
        match w {
            WeightTag::Hk => Weight::Hk,
            WeightTag::HnMinusK => Weight::HnMinusK,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RatFuncDoc {
    pub num: Vec<String>,
    pub den: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ClosedFormDoc {
    shifts: Vec<i64>,
    weight: WeightTag,
    d: u64,
    n_min: u64,
    coefficients: BTreeMap<String, RatFuncDoc>,
}

pub fn monomial_key(m: Monomial) -> &'static str {
    match (m.h1_degree(), m.h2_degree()) {
        (0, 0) => "1",
        (1, 0) => "H1",
        (2, 0) => "H1^2",
        (0, 1) => "H2",
        (1, 1) => "H1*H2",
        _ => "H1^2*H2",
    }
}

pub fn parse_monomial_key(key: &str) -> Option<Monomial> {
    Monomial::ALL.into_iter().find(|m| monomial_key(*m) == key)
}

fn encode_poly(p: &Polynomial) -> Vec<String> {
    p.coeffs().iter().map(ToString::to_string).collect()
}

fn decode_poly(coeffs: &[String]) -> Result<Polynomial> {
    coeffs
        .iter()
        .map(|c| {
            c.parse::<Rational>()
                .map_err(|_| Error::Json(format!("bad rational {c:?}")))
        })
        .collect::<Result<Vec<_>>>()
        .map(Polynomial::from_coeffs)
}

pub fn encode_ratfunc(f: &RationalFunction) -> RatFuncDoc {
    RatFuncDoc {
        num: encode_poly(f.numer()),
        den: encode_poly(f.denom()),
    }
}

pub fn decode_ratfunc(doc: &RatFuncDoc) -> Result<RationalFunction> {
    Ok(RationalFunction::new(decode_poly(&doc.num)?, decode_poly(&doc.den)?)?)
}

pub fn encode_coefficients(expr: &HarmonicExpr) -> BTreeMap<String, RatFuncDoc> {
    expr.terms()
        .map(|(m, c)| (monomial_key(m).to_owned(), encode_ratfunc(c)))
        .collect()
}

pub fn decode_coefficients(map: &BTreeMap<String, RatFuncDoc>) -> Result<HarmonicExpr> {
    let mut expr = HarmonicExpr::zero();
    for (key, doc) in map {
        let m = parse_monomial_key(key)
            .ok_or_else(|| Error::Json(format!("unknown monomial key {key:?}")))?;
        expr.add_term(m, decode_ratfunc(doc)?);
    }
    Ok(expr)
}

pub fn to_json(cf: &ClosedForm) -> String {
    let doc = ClosedFormDoc {
        shifts: cf.source.shifts().to_vec(),
        weight: cf.source.weight().into(),
        d: cf.lower_limit,
        n_min: cf.n_min,
        coefficients: encode_coefficients(&cf.expr),
    };
    serde_json::to_string(&doc).expect("closed forms always serialize")
}

pub fn from_json(text: &str) -> Result<ClosedForm> {
    let doc: ClosedFormDoc = serde_json::from_str(text).map_err(|e| Error::Json(e.to_string()))?;
    let source = ShiftSet::new(doc.shifts, doc.weight.into())?;
    if doc.d != source.lower_limit() {
        return Err(Error::Json(format!(
            "d = {} does not match the shifts (expected {})",
            doc.d,
            source.lower_limit()
        )));
    }
    if doc.n_min < doc.d {
        return Err(Error::Json("n_min is below d".into()));
    }
    Ok(ClosedForm {
        expr: decode_coefficients(&doc.coefficients)?,
        lower_limit: doc.d,
        n_min: doc.n_min,
        source,
    })
}
