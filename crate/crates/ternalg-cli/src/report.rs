//! Machine-readable check reports.

use serde::Serialize;
use sha2::{Digest, Sha256};
use ternalg::LawReport;

/// Violations listed per law; the count is always complete.
pub const MAX_LISTED: usize = 10;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ViolationRecord {
    pub indices: Vec<usize>,
    pub residual: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LawRecord {
    pub name: String,
    pub tag: String,
    pub passed: bool,
    pub violation_count: usize,
    pub violations: Vec<ViolationRecord>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReportDocument {
    pub tool: String,
    pub version: String,
    pub input_sha256: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub algebra_sha256: Option<String>,
    pub kind: String,
    pub law: String,
    pub mode: String,
    pub passed: bool,
    pub laws: Vec<LawRecord>,
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    format!("{:x}", Sha256::digest(bytes))
}

/// Laws keep checker order; violations are sorted by index tuple.
pub fn law_records(report: &LawReport) -> Vec<LawRecord> {
    let mut names: Vec<(String, String)> =
        report.checked.iter().map(|l| (l.name.clone(), l.tag.clone())).collect();
    for v in &report.violations {
        if !names.iter().any(|(n, _)| *n == v.law) {
            names.push((v.law.clone(), String::new()));
        }
    }
    names
        .into_iter()
        .map(|(name, tag)| {
            let mut vs: Vec<ViolationRecord> = report
                .violations_of(&name)
                .map(|v| ViolationRecord {
                    indices: v.indices.clone(),
                    residual: v.residual.to_string(),
                })
                .collect();
            vs.sort_by(|a, b| a.indices.cmp(&b.indices).then_with(|| a.residual.cmp(&b.residual)));
            let violation_count = vs.len();
            vs.truncate(MAX_LISTED);
            LawRecord {
                name,
                tag,
                passed: violation_count == 0,
                violation_count,
                violations: vs,
            }
        })
        .collect()
}

impl ReportDocument {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("plain data");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = format!(
            "{} check ({}, mode {}): {}\n",
            self.kind,
            self.law,
            self.mode,
            if self.passed { "PASS" } else { "FAIL" }
        );
        for l in &self.laws {
            let tag = if l.tag.is_empty() { String::new() } else { format!(" [{}]", l.tag) };
            if l.passed {
                out.push_str(&format!("  ok   {}{tag}\n", l.name));
                continue;
            }
            out.push_str(&format!("  FAIL {}{tag}: {} violation(s)\n", l.name, l.violation_count));
            for v in &l.violations {
                let idx: Vec<String> = v.indices.iter().map(ToString::to_string).collect();
                out.push_str(&format!("         at ({}): residual {}\n", idx.join(","), v.residual));
            }
            if l.violation_count > l.violations.len() {
                out.push_str(&format!("         ... {} more\n", l.violation_count - l.violations.len()));
            }
        }
        out
    }
}
