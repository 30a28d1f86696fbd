use num_bigint::BigInt;
use secant_core::SegreParams;
use serde::Serialize;
use serde_json::{json, Map, Value};

pub const SCHEMA_VERSION: u32 = 1;

/// Envelope written for every subcommand.
#[derive(Debug, Serialize)]
pub struct RunReport {
    pub schema_version: u32,
    pub command: String,
    pub params: Value,
    pub results: Value,
    pub budget: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_seconds: Option<f64>,
    pub version: &'static str,
}

/// What a subcommand hands back to `main`.
pub struct Output {
    pub params: Value,
    pub results: Value,
    pub budget: Value,
    /// Plain-text rendering; falls back to `key: value` lines.
    pub text: Option<String>,
    pub csv: Option<String>,
    /// False when the computation finished but a claimed property failed.
    pub claim_holds: bool,
}

impl Output {
    pub fn new(params: Value, results: Value) -> Self {
        Output {
            params,
            results,
            budget: Value::Object(Map::new()),
            text: None,
            csv: None,
            claim_holds: true,
        }
    }

    pub fn budget(mut self, budget: Value) -> Self {
        self.budget = budget;
        self
    }

    pub fn text(mut self, text: String) -> Self {
        self.text = Some(text);
        self
    }

    pub fn claim(mut self, holds: bool) -> Self {
        self.claim_holds = holds;
        self
    }
}

/// Integers that fit in 64 bits become JSON numbers, larger ones strings.
pub fn big(n: &BigInt) -> Value {
    if let Ok(v) = i64::try_from(n) {
        json!(v)
    } else if let Ok(v) = u64::try_from(n) {
        json!(v)
    } else {
        json!(n.to_string())
    }
}

pub fn bigs(v: &[BigInt]) -> Value {
    Value::Array(v.iter().map(big).collect())
}

pub fn params_json(p: SegreParams) -> Value {
    json!({ "a": p.a(), "b": p.b(), "t": p.t() })
}

pub fn key_value_text(results: &Value) -> String {
    let mut out = String::new();
    if let Value::Object(map) = results {
        for (k, v) in map {
            let shown = match v {
                Value::String(s) => s.clone(),
                other => other.to_string(),
            };
            out.push_str(&format!("{k}: {shown}\n"));
        }
    } else {
        out.push_str(&format!("{results}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn big_switches_to_string_past_u64() {
        assert_eq!(big(&BigInt::from(-5)), json!(-5));
        assert_eq!(big(&BigInt::from(u64::MAX)), json!(u64::MAX));
        let huge = BigInt::from(u64::MAX) * 10;
        assert_eq!(big(&huge), json!("184467440737095516150"));
    }

    #[test]
    fn text_lists_fields() {
        let t = key_value_text(&json!({"degree": 57, "name": "x"}));
        assert_eq!(t, "degree: 57\nname: x\n");
    }
}
