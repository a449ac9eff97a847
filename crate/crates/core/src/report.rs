//! Check reports shared by every identity checker.

use crate::scalar::Ring;
use rayon::prelude::*;
use std::collections::BTreeMap;
use std::fmt::Display;

/// Stored witnesses per identity; the counters keep the full totals.
pub const MAX_STORED_PER_IDENTITY: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub identity: String,
    pub tuple: Vec<usize>,
    pub left: Vec<String>,
    pub right: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityOutcome {
    pub identity: String,
    pub checked: u64,
    pub failed: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CheckReport {
    pub name: String,
    pub outcomes: Vec<IdentityOutcome>,
    pub violations: Vec<Violation>,
    pub flags: BTreeMap<String, bool>,
    pub notes: Vec<String>,
}

impl CheckReport {
    pub fn new(name: impl Into<String>) -> Self {
        CheckReport {
            name: name.into(),
            ..Default::default()
        }
    }

    pub fn verdict(&self) -> Verdict {
        if self.outcomes.iter().any(|o| o.failed > 0) {
            Verdict::Fail
        } else {
            Verdict::Pass
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict() == Verdict::Pass
    }

    /// Names of identities with at least one failure, in report order.
    pub fn failed_identities(&self) -> Vec<&str> {
        self.outcomes
            .iter()
            .filter(|o| o.failed > 0)
            .map(|o| o.identity.as_str())
            .collect()
    }

    pub fn identity_passed(&self, identity: &str) -> Option<bool> {
        self.outcomes
            .iter()
            .find(|o| o.identity == identity)
            .map(|o| o.failed == 0)
    }

    pub fn first_violation(&self) -> Option<&Violation> {
        self.violations.first()
    }

    pub fn total_failures(&self) -> u64 {
        self.outcomes.iter().map(|o| o.failed).sum()
    }

    fn outcome_mut(&mut self, identity: &str) -> &mut IdentityOutcome {
        let pos = match self.outcomes.iter().position(|o| o.identity == identity) {
            Some(p) => p,
            None => {
                self.outcomes.push(IdentityOutcome {
                    identity: identity.to_string(),
                    checked: 0,
                    failed: 0,
                });
                self.outcomes.len() - 1
            }
        };
        &mut self.outcomes[pos]
    }

    /// Registers an identity so it shows up even when nothing is checked.
    pub fn declare(&mut self, identity: &str) {
        self.outcome_mut(identity);
    }

    /// Records one comparison of `left` against `right`.
    pub fn record<T: Ring + Display>(&mut self, identity: &str, tuple: &[usize], left: &[T], right: &[T]) {
        let ok = left == right;
        self.record_outcome(identity, tuple, ok, || {
            (
                left.iter().map(|v| v.to_string()).collect(),
                right.iter().map(|v| v.to_string()).collect(),
            )
        });
    }

    /// Records a boolean condition (e.g. a matrix identity) with optional
    /// rendered values for the witness.
    pub fn record_outcome(
        &mut self,
        identity: &str,
        tuple: &[usize],
        ok: bool,
        render: impl FnOnce() -> (Vec<String>, Vec<String>),
    ) {
        let outcome = self.outcome_mut(identity);
        outcome.checked += 1;
        if ok {
            return;
        }
        outcome.failed += 1;
        let failed = outcome.failed;
        if failed as usize <= MAX_STORED_PER_IDENTITY {
            let (left, right) = render();
            self.violations.push(Violation {
                identity: identity.to_string(),
                tuple: tuple.to_vec(),
                left,
                right,
            });
        }
    }

    pub fn set_flag(&mut self, flag: impl Into<String>, value: bool) {
        self.flags.insert(flag.into(), value);
    }

    pub fn flag(&self, flag: &str) -> Option<bool> {
        self.flags.get(flag).copied()
    }

    pub fn note(&mut self, text: impl Into<String>) {
        self.notes.push(text.into());
    }

    /// Merges another report's outcomes; identities with the same name are
    /// summed. Violations keep the per-identity cap and arrive in order.
    pub fn merge(&mut self, other: CheckReport) {
        let mut stored: BTreeMap<String, usize> = BTreeMap::new();
        for v in &self.violations {
            *stored.entry(v.identity.clone()).or_default() += 1;
        }
        for o in other.outcomes {
            let mine = self.outcome_mut(&o.identity);
            mine.checked += o.checked;
            mine.failed += o.failed;
        }
        for v in other.violations {
            let count = stored.entry(v.identity.clone()).or_default();
            if *count < MAX_STORED_PER_IDENTITY {
                *count += 1;
                self.violations.push(v);
            }
        }
        self.flags.extend(other.flags);
        self.notes.extend(other.notes);
    }

    /// Merges a sub-report with every identity and flag name prefixed.
    pub fn absorb(&mut self, prefix: &str, mut other: CheckReport) {
        let rename = |s: &mut String| *s = format!("{prefix}/{s}");
        other.outcomes.iter_mut().for_each(|o| rename(&mut o.identity));
        other.violations.iter_mut().for_each(|v| rename(&mut v.identity));
        other.flags = other
            .flags
            .into_iter()
            .map(|(k, v)| (format!("{prefix}/{k}"), v))
            .collect();
        self.merge(other);
    }
}

/// Runs `eval` on every tuple of the box `ranges[0] × … × ranges[k-1]`,
/// splitting the first coordinate across threads. Results are merged in
/// tuple order, so reports are deterministic.
pub(crate) fn sweep<F>(name: &str, identities: &[&str], ranges: &[usize], eval: F) -> CheckReport
where
    F: Fn(&[usize], &mut CheckReport) + Sync,
{
    let mut report = CheckReport::new(name);
    for id in identities {
        report.declare(id);
    }
    if ranges.contains(&0) {
        return report;
    }
    let Some((&first, rest)) = ranges.split_first() else {
        eval(&[], &mut report);
        return report;
    };
    let parts: Vec<CheckReport> = (0..first)
        .into_par_iter()
        .map(|i| {
            let mut part = CheckReport::new(name);
            let mut tuple = vec![0usize; ranges.len()];
            tuple[0] = i;
            let total: usize = rest.iter().product();
            for _ in 0..total {
                eval(&tuple, &mut part);
                for p in (1..tuple.len()).rev() {
                    tuple[p] += 1;
                    if tuple[p] < ranges[p] {
                        break;
                    }
                    tuple[p] = 0;
                }
            }
            part
        })
        .collect();
    for part in parts {
        report.merge(part);
    }
    report
}
