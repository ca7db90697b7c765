//! Structured verification output: named flags, counterexample payloads, and
//! suite-level proposition results, with stable text and JSON renderings.

use serde::Serialize;
use std::collections::BTreeMap;

/// Counterexample payload. `items` carries the offending objects rendered as
/// strings under stable names (set/net/point/...), `detail` a one-line story.
#[derive(Debug, Clone, Serialize, PartialEq, Eq, Default)]
pub struct Counterexample {
    pub items: BTreeMap<String, String>,
    pub detail: String,
}

impl Counterexample {
    pub fn new(detail: impl Into<String>) -> Self {
        Counterexample {
            items: BTreeMap::new(),
            detail: detail.into(),
        }
    }

    pub fn with(mut self, key: &str, value: impl ToString) -> Self {
        self.items.insert(key.to_string(), value.to_string());
        self
    }
}

/// Classification/verification report: a false flag is always accompanied by
/// a counterexample payload (enforced by `flag`).
#[derive(Debug, Clone, Serialize, Default)]
pub struct Report {
    pub flags: BTreeMap<String, bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub sets: BTreeMap<String, serde_json::Value>,
}

impl Report {
    pub fn new() -> Self {
        Report::default()
    }

    pub fn flag(&mut self, name: &str, value: bool, on_false: impl FnOnce() -> Counterexample) {
        self.flags.insert(name.to_string(), value);
        if !value && self.counterexample.is_none() {
            self.counterexample = Some(on_false());
        }
    }

    pub fn flag_true(&mut self, name: &str) {
        self.flags.insert(name.to_string(), true);
    }

    pub fn set(&mut self, name: &str, value: serde_json::Value) {
        self.sets.insert(name.to_string(), value);
    }

    pub fn all_true(&self) -> bool {
        self.flags.values().all(|&v| v)
    }

    pub fn get(&self, name: &str) -> Option<bool> {
        self.flags.get(name).copied()
    }
}

/// One proposition checked by a suite.
#[derive(Debug, Clone, Serialize)]
pub struct PropResult {
    pub id: String,
    pub pass: bool,
    pub cases: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
}

impl PropResult {
    pub fn pass(id: &str, cases: u64) -> Self {
        PropResult {
            id: id.to_string(),
            pass: true,
            cases,
            counterexample: None,
        }
    }

    pub fn fail(id: &str, cases: u64, cex: Counterexample) -> Self {
        PropResult {
            id: id.to_string(),
            pass: false,
            cases,
            counterexample: Some(cex),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub status: String,
    pub suite: String,
    pub bounds: BoundsEcho,
    pub results: Vec<PropResult>,
}

#[derive(Debug, Clone, Serialize)]
pub struct BoundsEcho {
    pub max_n: usize,
    pub max_index: usize,
    pub mode: String,
    pub seed: u64,
}

impl SuiteReport {
    pub fn new(suite: &str, bounds: BoundsEcho, results: Vec<PropResult>) -> Self {
        let status = if results.iter().all(|r| r.pass) {
            "pass"
        } else {
            "fail"
        };
        SuiteReport {
            status: status.to_string(),
            suite: suite.to_string(),
            bounds,
            results,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == "pass"
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

pub fn emit_report(report: &Report, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(report).expect("report serializes"),
        Format::Text => {
            let mut out = String::new();
            for (name, value) in &report.flags {
                out.push_str(&format!(
                    "{name}: {}\n",
                    if *value { "true" } else { "false" }
                ));
            }
            if let Some(cex) = &report.counterexample {
                out.push_str(&render_cex(cex));
            }
            for (name, value) in &report.sets {
                out.push_str(&format!("{name} = {value}\n"));
            }
            out
        }
    }
}

pub fn emit_suite_report(report: &SuiteReport, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(report).expect("report serializes"),
        Format::Text => {
            let mut out = format!(
                "suite {} ({}, max_n={}, max_index={}, seed={})\n",
                report.suite,
                report.bounds.mode,
                report.bounds.max_n,
                report.bounds.max_index,
                report.bounds.seed
            );
            for r in &report.results {
                out.push_str(&format!(
                    "{:<40} {}  ({} cases)\n",
                    r.id,
                    if r.pass { "pass" } else { "FAIL" },
                    r.cases
                ));
                if let Some(cex) = &r.counterexample {
                    out.push_str(&render_cex(cex));
                }
            }
            out.push_str(&format!("status: {}\n", report.status));
            out
        }
    }
}

fn render_cex(cex: &Counterexample) -> String {
    let mut out = format!("  counterexample: {}\n", cex.detail);
    for (k, v) in &cex.items {
        out.push_str(&format!("    {k} = {v}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn false_flag_carries_counterexample() {
        let mut r = Report::new();
        r.flag("good", true, || unreachable!());
        r.flag("bad", false, || {
            Counterexample::new("it broke").with("point", 3)
        });
        assert!(!r.all_true());
        assert!(r.counterexample.is_some());
        let json = emit_report(&r, Format::Json);
        assert!(json.contains("\"flags\""));
        assert!(json.contains("\"counterexample\""));
    }

    #[test]
    fn suite_report_status() {
        let bounds = BoundsEcho {
            max_n: 3,
            max_index: 2,
            mode: "exhaustive".into(),
            seed: 0,
        };
        let rep = SuiteReport::new(
            "collapse",
            bounds.clone(),
            vec![PropResult::pass("X", 10)],
        );
        assert!(rep.passed());
        let rep2 = SuiteReport::new(
            "collapse",
            bounds,
            vec![PropResult::fail("Y", 1, Counterexample::new("cex"))],
        );
        assert_eq!(rep2.status, "fail");
        let text = emit_suite_report(&rep2, Format::Text);
        assert!(text.contains("FAIL"));
    }
}
