//! Versioned experiment reports and their canonical JSON encoding.
//!
//! Canonical form: object keys sorted, no insignificant whitespace, every
//! non-integer number written with 17 significant digits in scientific
//! notation (`{:.16e}`), and non-finite reals written as the strings
//! `"Infinity"`, `"-Infinity"` and `"NaN"`. Parsing canonical output and
//! re-encoding it reproduces the same bytes.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize, Serializer};
use serde_json::Value;
use sha2::{Digest, Sha256};
use thiserror::Error;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SchemaViolation {
    #[error("unknown schema version {0}")]
    UnknownVersion(u64),
    #[error("malformed report: {0}")]
    Malformed(String),
}

/// Serializes a real, mapping non-finite values to their string names.
pub fn serialize_real<S: Serializer>(x: &f64, s: S) -> Result<S::Ok, S::Error> {
    if x.is_finite() {
        s.serialize_f64(*x)
    } else {
        s.serialize_str(non_finite_name(*x))
    }
}

pub fn serialize_real_map<S: Serializer>(m: &BTreeMap<String, f64>, s: S) -> Result<S::Ok, S::Error> {
    let values: BTreeMap<&str, Value> = m.iter().map(|(k, v)| (k.as_str(), real(*v))).collect();
    values.serialize(s)
}

pub fn serialize_real_vec<S: Serializer>(v: &[f64], s: S) -> Result<S::Ok, S::Error> {
    v.iter().map(|x| real(*x)).collect::<Vec<_>>().serialize(s)
}

fn non_finite_name(x: f64) -> &'static str {
    if x.is_nan() {
        "NaN"
    } else if x > 0.0 {
        "Infinity"
    } else {
        "-Infinity"
    }
}

/// A real as a JSON value, with non-finite values as strings.
pub fn real(x: f64) -> Value {
    if x.is_finite() {
        Value::from(x)
    } else {
        Value::from(non_finite_name(x))
    }
}

/// Reads a real written by [`real`].
pub fn parse_real(v: &Value) -> Option<f64> {
    match v {
        Value::Number(n) => n.as_f64(),
        Value::String(s) => match s.as_str() {
            "Infinity" => Some(f64::INFINITY),
            "-Infinity" => Some(f64::NEG_INFINITY),
            "NaN" => Some(f64::NAN),
            _ => None,
        },
        _ => None,
    }
}

/// Canonical encoding of a JSON value.
pub fn canonical_json(v: &Value) -> String {
    let mut out = String::new();
    write_value(v, &mut out);
    out
}

/// Canonical encoding of any serializable value.
pub fn to_canonical_json<T: Serialize>(t: &T) -> String {
    canonical_json(&serde_json::to_value(t).expect("value serializes to JSON"))
}

fn write_value(v: &Value, out: &mut String) {
    match v {
        Value::Null => out.push_str("null"),
        Value::Bool(b) => out.push_str(if *b { "true" } else { "false" }),
        Value::Number(n) => {
            if n.is_f64() {
                let x = n.as_f64().expect("f64 number");
                write!(out, "{x:.16e}").expect("write to string");
            } else {
                out.push_str(&n.to_string());
            }
        }
        Value::String(s) => out.push_str(&Value::String(s.clone()).to_string()),
        Value::Array(items) => {
            out.push('[');
            for (i, item) in items.iter().enumerate() {
                if i > 0 {
                    out.push(',');
                }
                write_value(item, out);
            }
            out.push(']');
        }
        Value::Object(map) => {
            let mut keys: Vec<&String> = map.keys().collect();
            keys.sort();
            out.push('{');
            for (i, k) in keys.into_iter().enumerate() {
                if i > 0 {
                    out.push(',');
                }
                out.push_str(&Value::String(k.clone()).to_string());
                out.push(':');
                write_value(&map[k], out);
            }
            out.push('}');
        }
    }
}

/// Which statement an experiment exercises and which of its constants were
/// free choices of the harness.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Provenance {
    pub statement: String,
    pub free_choices: Vec<String>,
}

/// The result of one experiment run.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentReport {
    pub schema_version: u32,
    pub experiment: String,
    pub artifact_version: String,
    pub provenance: Provenance,
    pub parameters: Value,
    /// Per-trial records sorted by trial index.
    pub trials: Vec<Value>,
    pub aggregate: Value,
    pub wall_clock_seconds: f64,
}

impl ExperimentReport {
    pub fn new(experiment: &str, provenance: Provenance, parameters: Value) -> Self {
        ExperimentReport {
            schema_version: SCHEMA_VERSION,
            experiment: experiment.to_string(),
            artifact_version: env!("CARGO_PKG_VERSION").to_string(),
            provenance,
            parameters,
            trials: Vec::new(),
            aggregate: Value::Object(Default::default()),
            wall_clock_seconds: 0.0,
        }
    }

    /// Records the time elapsed since `start` and returns the report.
    pub fn finish(mut self, start: std::time::Instant) -> Self {
        self.wall_clock_seconds = start.elapsed().as_secs_f64();
        self
    }

    pub fn to_json(&self) -> String {
        to_canonical_json(self)
    }

    /// Parses a report, rejecting unknown schema versions and malformed
    /// documents.
    pub fn from_json(text: &str) -> Result<Self, SchemaViolation> {
        let v: Value = serde_json::from_str(text).map_err(|e| SchemaViolation::Malformed(e.to_string()))?;
        match v.get("schema_version").and_then(Value::as_u64) {
            Some(v) if v == u64::from(SCHEMA_VERSION) => {}
            Some(other) => return Err(SchemaViolation::UnknownVersion(other)),
            None => return Err(SchemaViolation::Malformed("missing schema_version".into())),
        }
        serde_json::from_value(v).map_err(|e| SchemaViolation::Malformed(e.to_string()))
    }

    /// SHA-256 of the canonical encoding without the wall-clock field; equal
    /// for any two runs with the same parameter block.
    pub fn content_hash(&self) -> String {
        let mut v = serde_json::to_value(self).expect("report serializes");
        if let Value::Object(map) = &mut v {
            map.remove("wall_clock_seconds");
        }
        hex::encode(Sha256::digest(canonical_json(&v).as_bytes()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    fn sample() -> ExperimentReport {
        let mut r = ExperimentReport::new(
            "demo",
            Provenance {
                statement: "sample".into(),
                free_choices: vec!["trials".into()],
            },
            json!({"n": 10, "p": 0.1}),
        );
        r.trials.push(json!({"trial": 0, "value": 1.0 / 3.0, "bound": real(f64::INFINITY)}));
        r.aggregate = json!({"mean": 0.25});
        r.wall_clock_seconds = 1.5;
        r
    }

    #[test]
    fn canonical_form() {
        let text = canonical_json(&json!({"b": 1, "a": [0.5, "x", null, true], "c": -2}));
        assert_eq!(text, r#"{"a":[5.0000000000000000e-1,"x",null,true],"b":1,"c":-2}"#);
    }

    #[test]
    fn round_trip_is_identity() {
        let r = sample();
        let text = r.to_json();
        let back = ExperimentReport::from_json(&text).unwrap();
        assert_eq!(back.to_json(), text);
        assert_eq!(parse_real(&back.trials[0]["value"]), Some(1.0 / 3.0));
        assert_eq!(parse_real(&back.trials[0]["bound"]), Some(f64::INFINITY));
    }

    #[test]
    fn version_and_shape_checks() {
        let mut v: Value = serde_json::from_str(&sample().to_json()).unwrap();
        v["schema_version"] = json!(2);
        assert_eq!(ExperimentReport::from_json(&v.to_string()), Err(SchemaViolation::UnknownVersion(2)));
        assert!(matches!(ExperimentReport::from_json("{}"), Err(SchemaViolation::Malformed(_))));
        assert!(matches!(ExperimentReport::from_json("not json"), Err(SchemaViolation::Malformed(_))));
    }

    #[test]
    fn hash_ignores_wall_clock() {
        let a = sample();
        let mut b = sample();
        b.wall_clock_seconds = 99.0;
        assert_eq!(a.content_hash(), b.content_hash());
        b.aggregate = json!({"mean": 0.5});
        assert_ne!(a.content_hash(), b.content_hash());
        assert_eq!(a.content_hash().len(), 64);
    }
}
