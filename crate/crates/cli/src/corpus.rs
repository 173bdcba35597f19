//! Corpus of reference identities and the regression check against it.
//!
//! A corpus file is a JSON array of entries:
//!
//! ```json
//! {"id": "hk-08", "shifts": [1, 2], "weight": "hk",
//!  "expected": {"1": "(n+1)/(n+2)", "H1": "-1/(n+2)"},
//!  "source": "catalog", "converted": false}
//! ```
//!
//! Each expected coefficient is either rational-function text or a
//! `{"num": [...], "den": [...]}` object as in the closed-form JSON. Entries
//! originally stated in the `H_n` basis carry `"converted": true` and an
//! `hn_form` map over the keys `1`, `Hn`, `Hn^2`, `Hn2`; the check confirms
//! that converting it reproduces `expected`.

use std::collections::BTreeMap;

use harmsum_core::{
    closed_form, parse_ratfunc, shift_minus, HarmonicExpr, Monomial, RationalFunction, ShiftSet,
};
use serde::Deserialize;
use serde_json::value::RawValue;

use crate::error::{Error, Result};
use crate::json::{decode_ratfunc, parse_monomial_key, RatFuncDoc, WeightTag};

#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum CoeffValue {
    Text(String),
    Parts(RatFuncDoc),
}

impl CoeffValue {
    fn decode(&self) -> Result<RationalFunction> {
        match self {
            CoeffValue::Text(text) => Ok(parse_ratfunc(text)?),
            CoeffValue::Parts(doc) => decode_ratfunc(doc),
        }
    }
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct EntryDoc {
    id: String,
    shifts: Vec<i64>,
    weight: WeightTag,
    expected: BTreeMap<String, CoeffValue>,
    #[serde(default)]
    #[allow(dead_code)]
    source: String,
    #[serde(default)]
    converted: bool,
    #[serde(default)]
    hn_form: Option<BTreeMap<String, CoeffValue>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Identity {
    pub id: String,
    pub set: ShiftSet,
    /// Expected right-hand side in the `H_{n+1}` basis.
    pub expected: HarmonicExpr,
    /// The `H_n`-basis statement rewritten in the `H_{n+1}` basis.
    pub from_hn_basis: Option<HarmonicExpr>,
    /// 1-based line where the entry starts.
    pub line: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    Match,
    Mismatch,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub id: String,
    pub outcome: Outcome,
    pub detail: Option<String>,
}

fn line_of(text: &str, fragment: &str) -> usize {
    let offset = (fragment.as_ptr() as usize).saturating_sub(text.as_ptr() as usize);
    text[..offset.min(text.len())].matches('\n').count() + 1
}

fn decode_expected(map: &BTreeMap<String, CoeffValue>) -> Result<HarmonicExpr> {
    let mut expr = HarmonicExpr::zero();
    for (key, value) in map {
        let m = parse_monomial_key(key)
            .ok_or_else(|| Error::Json(format!("unknown monomial key {key:?}")))?;
        expr.add_term(m, value.decode()?);
    }
    Ok(expr)
}

/// Rewrites an `H_n`-basis expression using `H_n^(m) = H_{n+1}^(m) - 1/(n+1)^m`.
fn decode_hn_form(map: &BTreeMap<String, CoeffValue>) -> Result<HarmonicExpr> {
    let hn = shift_minus(1, 1)?;
    let hn2 = shift_minus(1, 2)?;
    let mut expr = HarmonicExpr::zero();
    for (key, value) in map {
        let basis = match key.as_str() {
            "1" => HarmonicExpr::constant(RationalFunction::one()),
            "Hn" => hn.clone(),
            "Hn^2" => hn.try_mul(&hn)?,
            "Hn2" => hn2.clone(),
            _ => return Err(Error::Json(format!("unknown H_n-basis key {key:?}"))),
        };
        expr = &expr + &basis.scale(&value.decode()?);
    }
    Ok(expr)
}

fn decode_entry(doc: EntryDoc, line: usize) -> Result<Identity> {
    let set = ShiftSet::new(doc.shifts, doc.weight.into())?;
    let expected = decode_expected(&doc.expected)?;
    let from_hn_basis = match (doc.converted, &doc.hn_form) {
        (true, Some(map)) => Some(decode_hn_form(map)?),
        (true, None) => return Err(Error::Json("converted entry lacks hn_form".into())),
        (false, Some(_)) => return Err(Error::Json("hn_form given on an unconverted entry".into())),
        (false, None) => None,
    };
    Ok(Identity {
        id: doc.id,
        set,
        expected,
        from_hn_basis,
        line,
    })
}

/// Parses a corpus file; errors carry the line of the offending entry.
pub fn load_corpus(text: &str) -> Result<Vec<Identity>> {
    let raw: Vec<&RawValue> = serde_json::from_str(text).map_err(|e| Error::CorpusParse {
        line: e.line(),
        message: e.to_string(),
    })?;
    raw.into_iter()
        .map(|entry| {
            let line = line_of(text, entry.get());
            let doc: EntryDoc = serde_json::from_str(entry.get()).map_err(|e| Error::CorpusParse {
                line: line + e.line() - 1,
                message: e.to_string(),
            })?;
            decode_entry(doc, line).map_err(|e| Error::CorpusParse {
                line,
                message: e.to_string(),
            })
        })
        .collect()
}

/// Recomputes every identity and compares it with the expected expression.
pub fn corpus_check(corpus: &[Identity]) -> Vec<CheckResult> {
    corpus
        .iter()
        .map(|identity| {
            let detail = match closed_form(&identity.set) {
                Err(e) => Some(format!("engine error: {e}")),
                Ok(cf) if cf.expr != identity.expected => Some(first_difference(&cf.expr, &identity.expected)),
                Ok(_) => match &identity.from_hn_basis {
                    Some(h) if *h != identity.expected => {
                        Some("H_n-basis form does not convert to the expected expression".into())
                    }
                    _ => None,
                },
            };
            CheckResult {
                id: identity.id.clone(),
                outcome: if detail.is_none() { Outcome::Match } else { Outcome::Mismatch },
                detail,
            }
        })
        .collect()
}

fn first_difference(got: &HarmonicExpr, want: &HarmonicExpr) -> String {
    for m in Monomial::ALL {
        let (g, w) = (got.coeff_or_zero(m), want.coeff_or_zero(m));
        if g != w {
            return format!("coefficient of {}: computed {g}, expected {w}", crate::json::monomial_key(m));
        }
    }
    unreachable!("expressions differ in some coefficient")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundled_entries_parse_with_lines() {
        let corpus = load_corpus(crate::BUNDLED_CORPUS).unwrap();
        assert_eq!(corpus.len(), 30);
        assert_eq!(corpus[0].line, 2);
        assert_eq!(corpus[29].line, 31);
        assert_eq!(corpus.iter().filter(|c| c.from_hn_basis.is_some()).count(), 2);
    }

    #[test]
    fn object_and_text_coefficients_agree() {
        let text = r#"[
  {"id": "a", "shifts": [1, 2], "weight": "hk", "expected": {"1": "(n+1)/(n+2)", "H1": {"num": ["-1"], "den": ["2", "1"]}}}
]"#;
        let corpus = load_corpus(text).unwrap();
        assert_eq!(corpus_check(&corpus)[0].outcome, Outcome::Match);
    }

    #[test]
    fn altered_coefficient_is_a_mismatch() {
        let text = r#"[
  {"id": "a", "shifts": [1, 2], "weight": "hk", "expected": {"1": "(n+1)/(n+3)", "H1": "-1/(n+2)"}}
]"#;
        let result = &corpus_check(&load_corpus(text).unwrap())[0];
        assert_eq!(result.outcome, Outcome::Mismatch);
        assert!(result.detail.as_ref().unwrap().starts_with("coefficient of 1"));
    }

    #[test]
    fn inconsistent_hn_form_is_a_mismatch() {
        let text = r#"[
  {"id": "a", "shifts": [0], "weight": "hk", "expected": {"H1^2": "1/2", "H2": "1/2", "H1": "-1/(n+1)"},
   "converted": true, "hn_form": {"Hn^2": "1/2", "Hn2": "-1/2"}}
]"#;
        assert_eq!(corpus_check(&load_corpus(text).unwrap())[0].outcome, Outcome::Mismatch);
    }

    #[test]
    fn parse_errors_report_the_entry_line() {
        let text = "[\n  {\"id\": \"a\", \"shifts\": [1], \"weight\": \"hk\", \"expected\": {}},\n  {\"id\": \"b\", \"shifts\": [1], \"weight\": \"hk\", \"expected\": {\"H1\": \"2n\"}}\n]";
        match load_corpus(text) {
            Err(Error::CorpusParse { line, .. }) => assert_eq!(line, 3),
            other => panic!("expected a parse error, got {other:?}"),
        }
        match load_corpus("[\n  {\"id\": 1}\n]") {
            Err(Error::CorpusParse { line, .. }) => assert_eq!(line, 2),
            other => panic!("expected a parse error, got {other:?}"),
        }
        assert!(matches!(load_corpus("[\n  {"), Err(Error::CorpusParse { line: 2, .. })));
        assert!(matches!(
            load_corpus(r#"[{"id": "a", "shifts": [1, 1], "weight": "hk", "expected": {}}]"#),
            Err(Error::CorpusParse { line: 1, .. })
        ));
    }
}
