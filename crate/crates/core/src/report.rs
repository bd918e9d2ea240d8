//! Machine-readable outcome of a single check.

use std::fmt;

use num_bigint::BigInt;
use serde_json::{Map, Number, Value as Json};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
    Skipped,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Skipped => "skipped",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A computed value. Integers stay exact; reals are rendered with six
/// decimals.
#[derive(Clone, Debug, PartialEq)]
pub enum Value {
    Int(BigInt),
    Real(f64),
    Bool(bool),
    Text(String),
}

impl Value {
    pub fn as_int(&self) -> Option<&BigInt> {
        match self {
            Value::Int(i) => Some(i),
            _ => None,
        }
    }

    pub fn as_real(&self) -> Option<f64> {
        match self {
            Value::Real(x) => Some(*x),
            Value::Int(i) => i.to_string().parse().ok(),
            _ => None,
        }
    }

    pub fn as_bool(&self) -> Option<bool> {
        match self {
            Value::Bool(b) => Some(*b),
            _ => None,
        }
    }

    fn to_json(&self) -> Json {
        match self {
            Value::Int(i) => Json::Number(i.to_string().parse().expect("integer literal")),
            Value::Real(x) => real_json(*x),
            Value::Bool(b) => Json::Bool(*b),
            Value::Text(s) => Json::String(s.clone()),
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Int(i) => write!(f, "{i}"),
            Value::Real(x) => write!(f, "{x:.6}"),
            Value::Bool(b) => write!(f, "{b}"),
            Value::Text(s) => f.write_str(s),
        }
    }
}

fn real_json(x: f64) -> Json {
    if x.is_finite() {
        // Normalise -0.000000 so output stays byte-identical.
        let s = format!("{x:.6}");
        let s = if s == "-0.000000" { "0.000000".to_string() } else { s };
        Json::Number(s.parse::<Number>().expect("decimal literal"))
    } else if x.is_nan() {
        Json::Null
    } else if x > 0.0 {
        Json::String("inf".into())
    } else {
        Json::String("-inf".into())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct VerificationReport {
    pub id: String,
    pub subject: String,
    pub values: Vec<(String, Value)>,
    pub verdict: Verdict,
    pub margin: Option<f64>,
    /// Why a check was skipped, or what failed.
    pub reason: Option<String>,
    pub notes: Vec<String>,
}

impl VerificationReport {
    /// A passing report with no values yet.
    pub fn new(id: impl Into<String>, subject: impl Into<String>) -> Self {
        Self {
            id: id.into(),
            subject: subject.into(),
            values: Vec::new(),
            verdict: Verdict::Pass,
            margin: None,
            reason: None,
            notes: Vec::new(),
        }
    }

    pub fn skipped(id: impl Into<String>, subject: impl Into<String>, reason: impl Into<String>) -> Self {
        let mut r = Self::new(id, subject);
        r.verdict = Verdict::Skipped;
        r.reason = Some(reason.into());
        r
    }

    pub fn int(&mut self, name: &str, v: impl Into<BigInt>) -> &mut Self {
        self.values.push((name.to_string(), Value::Int(v.into())));
        self
    }

    pub fn real(&mut self, name: &str, v: f64) -> &mut Self {
        self.values.push((name.to_string(), Value::Real(v)));
        self
    }

    pub fn flag(&mut self, name: &str, v: bool) -> &mut Self {
        self.values.push((name.to_string(), Value::Bool(v)));
        self
    }

    pub fn text(&mut self, name: &str, v: impl Into<String>) -> &mut Self {
        self.values.push((name.to_string(), Value::Text(v.into())));
        self
    }

    pub fn note(&mut self, note: impl Into<String>) -> &mut Self {
        self.notes.push(note.into());
        self
    }

    pub fn get(&self, name: &str) -> Option<&Value> {
        self.values.iter().find(|(n, _)| n == name).map(|(_, v)| v)
    }

    /// Records an asserted condition; any false condition fails the report
    /// (the first failure's description becomes the reason).
    pub fn require(&mut self, ok: bool, what: impl Into<String>) -> &mut Self {
        if !ok {
            if self.verdict != Verdict::Fail {
                self.reason = Some(what.into());
            }
            self.verdict = Verdict::Fail;
        }
        self
    }

    /// Keeps the smallest margin seen.
    pub fn margin(&mut self, m: f64) -> &mut Self {
        self.margin = Some(match self.margin {
            Some(old) if old <= m => old,
            _ => m,
        });
        self
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn failed(&self) -> bool {
        self.verdict == Verdict::Fail
    }

    pub fn to_json(&self) -> Json {
        let mut values = Map::new();
        for (k, v) in &self.values {
            values.insert(k.clone(), v.to_json());
        }
        let mut obj = Map::new();
        obj.insert("id".into(), Json::String(self.id.clone()));
        obj.insert("subject".into(), Json::String(self.subject.clone()));
        obj.insert("values".into(), Json::Object(values));
        obj.insert("verdict".into(), Json::String(self.verdict.as_str().into()));
        obj.insert("margin".into(), self.margin.map_or(Json::Null, real_json));
        if let Some(reason) = &self.reason {
            obj.insert("reason".into(), Json::String(reason.clone()));
        }
        if !self.notes.is_empty() {
            obj.insert(
                "notes".into(),
                Json::Array(self.notes.iter().cloned().map(Json::String).collect()),
            );
        }
        Json::Object(obj)
    }
}

/// Serializes reports as a pretty-printed JSON array.
pub fn reports_to_json(reports: &[VerificationReport]) -> String {
    let arr = Json::Array(reports.iter().map(|r| r.to_json()).collect());
    serde_json::to_string_pretty(&arr).expect("serializable") + "\n"
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_keeps_exact_integers_and_six_decimals() {
        let mut r = VerificationReport::new("bertram", "M22");
        r.int("order", BigInt::from(10u64).pow(30))
            .real("log3_order", 11.83522)
            .flag("ceiling_equality", true)
            .margin(0.164);
        let json = reports_to_json(&[r]);
        assert!(json.contains("1000000000000000000000000000000"));
        assert!(json.contains("11.835220"));
        assert!(json.contains("\"margin\": 0.164000"));
        // Insertion order is kept.
        assert!(json.find("order").unwrap() < json.find("log3_order").unwrap());
    }

    #[test]
    fn require_records_first_failure() {
        let mut r = VerificationReport::new("x", "y");
        r.require(true, "a").require(false, "b").require(false, "c");
        assert!(r.failed());
        assert_eq!(r.reason.as_deref(), Some("b"));
    }

    #[test]
    fn margin_keeps_minimum() {
        let mut r = VerificationReport::new("x", "y");
        r.margin(2.0).margin(0.5).margin(1.0);
        assert_eq!(r.margin, Some(0.5));
    }
}
