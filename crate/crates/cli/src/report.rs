//! Machine-readable check reports with a fixed field order.

use serde::Serialize;
use std::collections::BTreeMap;
use tlz_core::CheckReport;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityLine {
    pub identity: String,
    pub checked: u64,
    pub failed: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub identity: String,
    pub tuple: Vec<usize>,
    pub left: Vec<String>,
    pub right: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Section {
    pub label: String,
    pub report: ReportFile,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReportFile {
    pub check: String,
    pub verdict: String,
    pub identities: Vec<IdentityLine>,
    pub violations: Vec<Witness>,
    pub flags: BTreeMap<String, bool>,
    pub notes: Vec<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub sections: Vec<Section>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u128>,
}

impl ReportFile {
    pub fn passed(&self) -> bool {
        self.verdict == "pass"
    }

    /// A report whose verdict is an implication between sub-reports rather
    /// than the conjunction of their identities.
    pub fn implication(check: &str, holds: bool, flags: BTreeMap<String, bool>, sections: Vec<Section>) -> Self {
        ReportFile {
            check: check.to_string(),
            verdict: if holds { "pass" } else { "fail" }.to_string(),
            identities: Vec::new(),
            violations: Vec::new(),
            flags,
            notes: Vec::new(),
            sections,
            timing_ms: None,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

impl From<&CheckReport> for ReportFile {
    fn from(r: &CheckReport) -> Self {
        ReportFile {
            check: r.name.clone(),
            verdict: r.verdict().as_str().to_string(),
            identities: r
                .outcomes
                .iter()
                .map(|o| IdentityLine {
                    identity: o.identity.clone(),
                    checked: o.checked,
                    failed: o.failed,
                })
                .collect(),
            violations: r
                .violations
                .iter()
                .map(|v| Witness {
                    identity: v.identity.clone(),
                    tuple: v.tuple.clone(),
                    left: v.left.clone(),
                    right: v.right.clone(),
                })
                .collect(),
            flags: r.flags.clone(),
            notes: r.notes.clone(),
            sections: Vec::new(),
            timing_ms: None,
        }
    }
}

impl From<CheckReport> for ReportFile {
    fn from(r: CheckReport) -> Self {
        ReportFile::from(&r)
    }
}

pub fn section(label: &str, r: impl Into<ReportFile>) -> Section {
    Section {
        label: label.to_string(),
        report: r.into(),
    }
}
