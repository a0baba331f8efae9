//! Claim records and the aggregated verification report.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ClaimStatus {
    Pass,
    Fail,
    Informational,
    Skipped,
}

impl ClaimStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            ClaimStatus::Pass => "pass",
            ClaimStatus::Fail => "fail",
            ClaimStatus::Informational => "informational",
            ClaimStatus::Skipped => "skipped",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClaimRecord {
    pub claim_id: String,
    pub anchor: String,
    pub expected: String,
    pub computed: String,
    pub status: ClaimStatus,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub note: String,
}

impl ClaimRecord {
    pub fn new(
        claim_id: impl Into<String>,
        anchor: impl Into<String>,
        expected: impl Into<String>,
        computed: impl Into<String>,
        status: ClaimStatus,
    ) -> Self {
        ClaimRecord {
            claim_id: claim_id.into(),
            anchor: anchor.into(),
            expected: expected.into(),
            computed: computed.into(),
            status,
            note: String::new(),
        }
    }

    /// Pass iff `expected == computed`.
    pub fn compare(
        claim_id: impl Into<String>,
        anchor: impl Into<String>,
        expected: impl Into<String>,
        computed: impl Into<String>,
    ) -> Self {
        let (e, c) = (expected.into(), computed.into());
        let status = if e == c { ClaimStatus::Pass } else { ClaimStatus::Fail };
        Self::new(claim_id, anchor, e, c, status)
    }

    pub fn check(
        claim_id: impl Into<String>,
        anchor: impl Into<String>,
        expected: impl Into<String>,
        computed: impl Into<String>,
        ok: bool,
    ) -> Self {
        let status = if ok { ClaimStatus::Pass } else { ClaimStatus::Fail };
        Self::new(claim_id, anchor, expected, computed, status)
    }

    pub fn info(claim_id: impl Into<String>, anchor: impl Into<String>, computed: impl Into<String>) -> Self {
        Self::new(claim_id, anchor, "unstated", computed, ClaimStatus::Informational)
    }

    pub fn skipped(claim_id: impl Into<String>, anchor: impl Into<String>, reason: impl Into<String>) -> Self {
        let mut r = Self::new(claim_id, anchor, "", "", ClaimStatus::Skipped);
        r.note = reason.into();
        r
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = note.into();
        self
    }

    /// Section of the claim id, used to group records. Case ids such as
    /// `E8.o16.bound` belong to `nilorbits`.
    pub fn group(&self) -> &str {
        let head = self.claim_id.split('.').next().unwrap_or("");
        if head.starts_with(|c: char| c.is_ascii_uppercase()) {
            "nilorbits"
        } else {
            head
        }
    }
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct VerificationReport {
    pub records: Vec<ClaimRecord>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct StatusCounts {
    pub pass: usize,
    pub fail: usize,
    pub informational: usize,
    pub skipped: usize,
}

impl VerificationReport {
    pub fn push(&mut self, r: ClaimRecord) {
        self.records.push(r);
    }

    pub fn extend(&mut self, rs: impl IntoIterator<Item = ClaimRecord>) {
        self.records.extend(rs);
    }

    pub fn counts(&self) -> StatusCounts {
        let mut c = StatusCounts::default();
        for r in &self.records {
            match r.status {
                ClaimStatus::Pass => c.pass += 1,
                ClaimStatus::Fail => c.fail += 1,
                ClaimStatus::Informational => c.informational += 1,
                ClaimStatus::Skipped => c.skipped += 1,
            }
        }
        c
    }

    pub fn failures(&self) -> impl Iterator<Item = &ClaimRecord> {
        self.records.iter().filter(|r| r.status == ClaimStatus::Fail)
    }

    pub fn all_pass(&self) -> bool {
        self.failures().next().is_none()
    }

    pub fn get(&self, claim_id: &str) -> Option<&ClaimRecord> {
        self.records.iter().find(|r| r.claim_id == claim_id)
    }

    /// Claim ids that occur more than once.
    pub fn duplicate_ids(&self) -> Vec<String> {
        let mut seen: BTreeMap<&str, usize> = BTreeMap::new();
        for r in &self.records {
            *seen.entry(r.claim_id.as_str()).or_default() += 1;
        }
        seen.into_iter().filter(|(_, n)| *n > 1).map(|(k, _)| k.to_string()).collect()
    }

    pub fn to_json_lines(&self) -> String {
        let mut out = String::new();
        for r in &self.records {
            out.push_str(&serde_json::to_string(r).expect("records serialize"));
            out.push('\n');
        }
        out
    }

    pub fn to_text(&self) -> String {
        if self.records.is_empty() {
            return String::new();
        }
        let mut groups: Vec<(&str, Vec<&ClaimRecord>)> = Vec::new();
        for r in &self.records {
            match groups.iter_mut().find(|(g, _)| *g == r.group()) {
                Some((_, v)) => v.push(r),
                None => groups.push((r.group(), vec![r])),
            }
        }
        let width = self.records.iter().map(|r| r.claim_id.len()).max().unwrap_or(0);
        let mut out = String::new();
        for (g, recs) in groups {
            let _ = writeln!(out, "== {g} ==");
            for r in recs {
                let _ = write!(
                    out,
                    "{:<13} {:<width$}  expected: {}  computed: {}",
                    r.status.as_str(),
                    r.claim_id,
                    r.expected,
                    r.computed
                );
                if !r.note.is_empty() {
                    let _ = write!(out, "  ({})", r.note);
                }
                out.push('\n');
            }
        }
        let c = self.counts();
        let _ = writeln!(
            out,
            "-- {} pass, {} fail, {} informational, {} skipped",
            c.pass, c.fail, c.informational, c.skipped
        );
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_report_emits_nothing() {
        let r = VerificationReport::default();
        assert_eq!(r.to_json_lines(), "");
        assert_eq!(r.to_text(), "");
    }

    #[test]
    fn single_pass_line() {
        let mut r = VerificationReport::default();
        r.push(ClaimRecord::compare("E6.o7.bound", "E6 order 7 bound", "36", "36"));
        let j = r.to_json_lines();
        assert_eq!(j.lines().count(), 1);
        assert!(j.contains("\"claim_id\":\"E6.o7.bound\""));
        assert!(j.contains("\"status\":\"pass\""));
        assert!(j.find("claim_id").unwrap() < j.find("anchor").unwrap());
        assert!(r.all_pass());
    }

    #[test]
    fn counts_and_duplicates() {
        let mut r = VerificationReport::default();
        r.push(ClaimRecord::compare("a.x", "x", "1", "2"));
        r.push(ClaimRecord::info("a.y", "y", "3"));
        r.push(ClaimRecord::skipped("a.x", "x", "budget"));
        assert_eq!(r.counts().fail, 1);
        assert_eq!(r.duplicate_ids(), vec!["a.x".to_string()]);
        assert!(r.to_text().contains("== a =="));
    }
}
