//! Report documents: per-criterion check records, canonical JSON and golden diffs.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;

/// Top-level fields that vary between otherwise identical runs.
pub const VOLATILE_FIELDS: [&str; 2] = ["timings", "version"];

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub name: String,
    /// Acceptance criterion the check belongs to.
    pub criterion: u32,
    pub expected: Value,
    pub computed: Value,
    pub pass: bool,
}

/// A reference value that disagrees with the computation but is reported rather than failed.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Discrepancy {
    pub name: String,
    pub reference: Value,
    pub computed: Value,
    pub note: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Section {
    pub criterion: u32,
    pub title: String,
    pub checks: Vec<CheckRecord>,
    #[serde(default)]
    pub discrepancies: Vec<Discrepancy>,
    #[serde(default)]
    pub data: Value,
}

impl Section {
    pub fn new(criterion: u32, title: &str) -> Self {
        Section {
            criterion,
            title: title.to_string(),
            checks: Vec::new(),
            discrepancies: Vec::new(),
            data: Value::Null,
        }
    }

    pub fn check<E: Serialize, C: Serialize>(&mut self, name: &str, expected: E, computed: C) -> &mut Self {
        let expected = serde_json::to_value(expected).expect("serializable");
        let computed = serde_json::to_value(computed).expect("serializable");
        let pass = expected == computed;
        self.checks.push(CheckRecord { name: name.to_string(), criterion: self.criterion, expected, computed, pass });
        self
    }

    /// A boolean property that must hold.
    pub fn holds(&mut self, name: &str, value: bool) -> &mut Self {
        self.check(name, true, value)
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    /// Section name used as the timing key.
    pub fn key(&self) -> String {
        format!("{:02}-{}", self.criterion, self.title.replace(' ', "-"))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub version: String,
    pub command: String,
    pub seed: u64,
    pub samples: usize,
    pub sections: Vec<Section>,
    /// Wall-clock seconds per section.
    pub timings: BTreeMap<String, f64>,
}

impl ReportDocument {
    pub fn new(command: &str, seed: u64, samples: usize) -> Self {
        ReportDocument {
            version: env!("CARGO_PKG_VERSION").to_string(),
            command: command.to_string(),
            seed,
            samples,
            sections: Vec::new(),
            timings: BTreeMap::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.sections.iter().all(Section::passed)
    }

    pub fn failures(&self) -> Vec<&CheckRecord> {
        self.sections.iter().flat_map(|s| &s.checks).filter(|c| !c.pass).collect()
    }

    /// Pretty JSON with keys in sorted order.
    pub fn to_canonical_json(&self) -> String {
        canonical_json(&serde_json::to_value(self).expect("serializable"))
    }
}

/// Keys come out sorted because `serde_json::Map` is ordered by key.
pub fn canonical_json(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

pub fn strip_volatile(v: &Value) -> Value {
    let mut v = v.clone();
    if let Value::Object(m) = &mut v {
        for k in VOLATILE_FIELDS {
            m.remove(k);
        }
    }
    v
}

/// Structural differences between two reports, ignoring timings and version.
pub fn compare_golden(report: &Value, golden: &Value) -> Vec<String> {
    let mut out = Vec::new();
    diff(&strip_volatile(report), &strip_volatile(golden), "$", &mut out);
    out
}

fn diff(a: &Value, b: &Value, path: &str, out: &mut Vec<String>) {
    match (a, b) {
        (Value::Object(x), Value::Object(y)) => {
            let keys: std::collections::BTreeSet<&String> = x.keys().chain(y.keys()).collect();
            for k in keys {
                let p = format!("{path}.{k}");
                match (x.get(k), y.get(k)) {
                    (Some(u), Some(v)) => diff(u, v, &p, out),
                    (Some(_), None) => out.push(format!("{p}: missing from golden")),
                    (None, Some(_)) => out.push(format!("{p}: missing from report")),
                    (None, None) => unreachable!(),
                }
            }
        }
        (Value::Array(x), Value::Array(y)) if x.len() == y.len() => {
            for (i, (u, v)) in x.iter().zip(y).enumerate() {
                diff(u, v, &format!("{path}[{i}]"), out);
            }
        }
        _ if a == b => {}
        _ => out.push(format!("{path}: {} != {}", short(a), short(b))),
    }
}

fn short(v: &Value) -> String {
    let s = v.to_string();
    if s.len() > 80 {
        format!("{}...", &s[..77])
    } else {
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> ReportDocument {
        let mut d = ReportDocument::new("report all", 0, 100);
        let mut s = Section::new(11, "anticanonical");
        s.check("cube", 12, 12).holds("invariant", true);
        d.sections.push(s);
        d.timings.insert("11-anticanonical".into(), 0.25);
        d
    }

    #[test]
    fn self_comparison_is_empty() {
        let v = serde_json::to_value(sample()).unwrap();
        assert!(compare_golden(&v, &v).is_empty());
    }

    #[test]
    fn flipped_pass_bit_is_one_entry() {
        let a = serde_json::to_value(sample()).unwrap();
        let mut d = sample();
        d.sections[0].checks[1].pass = false;
        let b = serde_json::to_value(d).unwrap();
        let diffs = compare_golden(&a, &b);
        assert_eq!(diffs.len(), 1, "{diffs:?}");
        assert!(diffs[0].contains("checks[1].pass"));
    }

    #[test]
    fn timings_and_version_are_ignored() {
        let a = serde_json::to_value(sample()).unwrap();
        let mut d = sample();
        d.version = "9.9.9".into();
        d.timings.insert("11-anticanonical".into(), 99.0);
        assert!(compare_golden(&a, &serde_json::to_value(d).unwrap()).is_empty());
    }

    #[test]
    fn canonical_keys_are_sorted() {
        let s = sample().to_canonical_json();
        let pos = |k: &str| s.find(&format!("\"{k}\"")).unwrap();
        assert!(pos("command") < pos("samples") && pos("samples") < pos("sections") && pos("seed") < pos("timings"));
        let back: ReportDocument = serde_json::from_str(&s).unwrap();
        assert_eq!(back, sample());
    }

    #[test]
    fn mismatch_fails_check() {
        let mut s = Section::new(1, "x");
        s.check("n", 14, 13);
        assert!(!s.passed());
    }
}
