//! Verification reports shared by every sweep in the crate.

use serde::{Deserialize, Serialize};

use crate::braid::BraidWord;
use crate::garside::{normal_form, GarsideNormalForm};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

/// Both normal forms, recorded when a check fails.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub lhs: String,
    pub rhs: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportItem {
    pub id: String,
    pub kind: String,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl ReportItem {
    pub fn pass(id: impl Into<String>, kind: impl Into<String>) -> Self {
        Self {
            id: id.into(),
            kind: kind.into(),
            verdict: Verdict::Pass,
            witness: None,
        }
    }

    pub fn fail(id: impl Into<String>, kind: impl Into<String>, witness: Option<Witness>) -> Self {
        Self {
            id: id.into(),
            kind: kind.into(),
            verdict: Verdict::Fail,
            witness,
        }
    }

    /// Compares two braid words through their normal forms.
    pub fn from_equality(
        id: impl Into<String>,
        kind: impl Into<String>,
        lhs: &BraidWord,
        rhs: &BraidWord,
    ) -> Self {
        let l = normal_form(lhs);
        let r = normal_form(rhs);
        if l == r && lhs.strands() == rhs.strands() {
            Self::pass(id, kind)
        } else {
            Self::fail(id, kind, Some(witness(&l, &r)))
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}

fn witness(l: &GarsideNormalForm, r: &GarsideNormalForm) -> Witness {
    Witness {
        lhs: l.to_golden(),
        rhs: r.to_golden(),
    }
}

/// Aggregated verdicts; `passed + failed == total` always holds.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub command: String,
    pub ambient: usize,
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub items: Vec<ReportItem>,
}

impl VerificationReport {
    pub fn new(command: impl Into<String>, ambient: usize, items: Vec<ReportItem>) -> Self {
        let passed = items.iter().filter(|i| i.passed()).count();
        Self {
            command: command.into(),
            ambient,
            total: items.len(),
            passed,
            failed: items.len() - passed,
            items,
        }
    }

    pub fn empty(command: impl Into<String>, ambient: usize) -> Self {
        Self::new(command, ambient, Vec::new())
    }

    pub fn is_pass(&self) -> bool {
        self.failed == 0
    }

    /// Appends the items of `other`; counts stay consistent.
    pub fn merge(mut self, other: VerificationReport) -> Self {
        self.total += other.total;
        self.passed += other.passed;
        self.failed += other.failed;
        self.items.extend(other.items);
        self
    }

    /// Item counts per kind, in first-seen order.
    pub fn counts_by_kind(&self) -> Vec<(String, usize)> {
        let mut out: Vec<(String, usize)> = Vec::new();
        for item in &self.items {
            match out.iter_mut().find(|(k, _)| *k == item.kind) {
                Some((_, c)) => *c += 1,
                None => out.push((item.kind.clone(), 1)),
            }
        }
        out
    }

    pub fn failures(&self) -> impl Iterator<Item = &ReportItem> {
        self.items.iter().filter(|i| !i.passed())
    }
}
