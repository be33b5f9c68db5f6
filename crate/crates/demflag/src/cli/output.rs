use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::Serialize;
use serde_json::Value;

use crate::qpoly::{QPoly, XSeries};

/// One term of a structured result; which keys appear depends on the command.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Term {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub s: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub j: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub x_exp: Option<usize>,
    pub q_exp: i64,
    /// Decimal string, so that arbitrary precision survives JSON.
    pub coeff: String,
}

impl Term {
    pub fn q(q_exp: i64, coeff: &BigInt) -> Self {
        Term { s: None, n: None, j: None, x_exp: None, q_exp, coeff: coeff.to_string() }
    }

    pub fn at_x(self, x_exp: usize) -> Self {
        Term { x_exp: Some(x_exp), ..self }
    }
}

pub fn qpoly_terms(p: &QPoly) -> Vec<Term> {
    p.terms().map(|(e, c)| Term::q(e, c)).collect()
}

pub fn xseries_terms(s: &XSeries) -> Vec<Term> {
    s.coeffs().iter().enumerate().flat_map(|(k, c)| qpoly_terms(c).into_iter().map(move |t| t.at_x(k))).collect()
}

pub fn integer_series_terms(v: &[BigInt]) -> Vec<Term> {
    v.iter().enumerate().filter(|(_, c)| **c != BigInt::from(0)).map(|(k, c)| Term::q(0, c).at_x(k)).collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct ResultBody {
    pub display: String,
    pub terms: Vec<Term>,
    /// Command-specific fields such as a weighted shift or a match flag.
    #[serde(flatten)]
    pub extra: BTreeMap<String, Value>,
}

#[derive(Debug, Clone, Serialize)]
pub struct EngineMeta {
    pub engine: String,
    pub memo_hits: u64,
    pub memo_entries: usize,
    pub elapsed_ms: f64,
}

/// The structured output of every computing subcommand.
#[derive(Debug, Clone, Serialize)]
pub struct OutputRecord {
    pub query: BTreeMap<String, Value>,
    pub result: ResultBody,
    pub engine: EngineMeta,
}

impl OutputRecord {
    pub fn new(query: BTreeMap<String, Value>, display: String, terms: Vec<Term>) -> Self {
        OutputRecord {
            query,
            result: ResultBody { display, terms, extra: BTreeMap::new() },
            engine: EngineMeta { engine: "none".into(), memo_hits: 0, memo_entries: 0, elapsed_ms: 0.0 },
        }
    }

    pub fn with_extra(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.result.extra.insert(key.into(), value.into());
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("records always serialize")
    }
}

/// Turns a JSON object into the `query` echo of a record.
pub fn query(v: Value) -> BTreeMap<String, Value> {
    match v {
        Value::Object(map) => map.into_iter().collect(),
        other => BTreeMap::from([("value".to_string(), other)]),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn terms_are_decimal_strings() {
        let p: QPoly = "3*q^-1 + 123456789012345678901234567890*q^4".parse().unwrap();
        let t = qpoly_terms(&p);
        assert_eq!(t[1].coeff, "123456789012345678901234567890");
        let json = serde_json::to_value(&t[0]).unwrap();
        assert_eq!(json, serde_json::json!({"q_exp": -1, "coeff": "3"}));
    }

    #[test]
    fn record_shape() {
        let r = OutputRecord::new(query(serde_json::json!({"weight": 3})), "q^8".into(), qpoly_terms(&QPoly::q_pow(8)))
            .with_extra("shift", 8);
        let v: Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["query"]["weight"], 3);
        assert_eq!(v["result"]["display"], "q^8");
        assert_eq!(v["result"]["shift"], 8);
        assert_eq!(v["result"]["terms"][0]["coeff"], "1");
    }
}
