//! Reports and their JSON and text renderings.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::Error;

use super::config::OutputFormat;

pub const TOOL: &str = "ivhs";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportError {
    pub kind: String,
    pub message: String,
    pub config: bool,
}

impl From<&Error> for ReportError {
    fn from(e: &Error) -> Self {
        ReportError {
            kind: e.kind().to_string(),
            message: e.to_string(),
            config: e.is_config(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub tool: String,
    pub version: String,
    pub command: String,
    pub field: String,
    /// SHA-256 of the canonical serialization of the run configuration.
    pub input_hash: String,
    pub seed: u64,
    pub assumptions: Vec<String>,
    pub results: Option<Value>,
    pub error: Option<ReportError>,
    pub cached: bool,
}

impl Report {
    /// The Torelli verdict, when the report carries one.
    pub fn verdict(&self) -> Option<&str> {
        self.results.as_ref()?.get("verdict")?.as_str()
    }

    /// A violation that survives the rational recheck, if one was run.
    pub fn is_violation(&self) -> bool {
        let recheck = self
            .results
            .as_ref()
            .and_then(|r| r.get("rational_recheck"))
            .and_then(Value::as_str);
        self.verdict() == Some("violated") && recheck != Some("injective-mod-trivial")
    }

    /// 0 ok, 1 config error, 2 computation error, 3 violated verdict.
    pub fn exit_code(&self) -> i32 {
        match &self.error {
            Some(e) if e.config => 1,
            Some(_) => 2,
            None if self.is_violation() => 3,
            None => 0,
        }
    }
}

/// Pretty JSON with lexicographically sorted keys at every level.
pub fn to_json(report: &Report) -> String {
    let value = serde_json::to_value(report).expect("reports serialize");
    let mut s = serde_json::to_string_pretty(&value).expect("values serialize");
    s.push('\n');
    s
}

pub fn from_json(text: &str) -> serde_json::Result<Report> {
    serde_json::from_str(text)
}

const KEY_WIDTH: usize = 44;

fn flatten(prefix: &str, v: &Value, out: &mut Vec<(String, String)>) {
    match v {
        Value::Object(map) => {
            if map.is_empty() {
                out.push((prefix.to_string(), "{}".into()));
            }
            for (k, x) in map {
                let key = if prefix.is_empty() {
                    k.clone()
                } else {
                    format!("{prefix}.{k}")
                };
                flatten(&key, x, out);
            }
        }
        Value::Array(xs) if xs.iter().all(|x| !x.is_object() && !x.is_array()) => {
            let items: Vec<String> = xs.iter().map(scalar).collect();
            out.push((prefix.to_string(), format!("[{}]", items.join(", "))));
        }
        Value::Array(xs) => {
            for (i, x) in xs.iter().enumerate() {
                flatten(&format!("{prefix}[{i}]"), x, out);
            }
        }
        other => out.push((prefix.to_string(), scalar(other))),
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        other => other.to_string(),
    }
}

/// Fixed-width two-column table. A `verdict: ...` line leads when the
/// report carries a verdict.
pub fn to_text(report: &Report) -> String {
    let mut out = String::new();
    if let Some(v) = report.verdict() {
        out.push_str(&format!("verdict: {v}\n"));
    }
    let value = serde_json::to_value(report).expect("reports serialize");
    let mut rows = Vec::new();
    flatten("", &value, &mut rows);
    for (k, v) in rows {
        out.push_str(&format!("{k:<KEY_WIDTH$} {v}\n"));
    }
    out
}

pub fn emit(report: &Report, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => to_json(report),
        OutputFormat::Text => to_text(report),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    fn sample(results: Value) -> Report {
        Report {
            tool: TOOL.into(),
            version: VERSION.into(),
            command: "torelli".into(),
            field: "rationals".into(),
            input_hash: "00".into(),
            seed: 7,
            assumptions: vec!["isolated rational singularities".into()],
            results: Some(results),
            error: None,
            cached: false,
        }
    }

    #[test]
    fn json_round_trip_and_sorted_keys() {
        let r = sample(json!({"zeta": 1, "alpha": [1, 2], "verdict": "violated"}));
        let text = to_json(&r);
        assert_eq!(from_json(&text).unwrap(), r);
        assert!(text.find("\"alpha\"").unwrap() < text.find("\"zeta\"").unwrap());
        assert!(text.find("\"assumptions\"").unwrap() < text.find("\"tool\"").unwrap());
    }

    #[test]
    fn text_has_verdict_line() {
        let r = sample(json!({"verdict": "injective-mod-trivial", "dims": {"kernel": 9}}));
        let t = to_text(&r);
        assert!(t.lines().any(|l| l == "verdict: injective-mod-trivial"));
        assert!(t.contains("results.dims.kernel"));
    }

    #[test]
    fn exit_codes() {
        assert_eq!(
            sample(json!({"verdict": "injective-mod-trivial"})).exit_code(),
            0
        );
        assert_eq!(sample(json!({"verdict": "violated"})).exit_code(), 3);
        let rechecked = sample(json!({
            "verdict": "violated",
            "rational_recheck": "injective-mod-trivial"
        }));
        assert_eq!(rechecked.exit_code(), 0);
        let mut r = sample(json!({}));
        r.results = None;
        r.error = Some((&Error::Config("x".into())).into());
        assert_eq!(r.exit_code(), 1);
        r.error = Some((&Error::NotSingular("(0:0:1)".into())).into());
        assert_eq!(r.exit_code(), 2);
    }
}
