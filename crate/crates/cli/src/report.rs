//! Report documents emitted by each subcommand, and their three renderings.

use std::fmt::Write as _;

use num_bigint::BigInt;
use pell_core::classifier::ClassificationReport;
use pell_core::identities::IdentityReport;
use pell_core::numtheory::{GcdConsecutiveRow, GcdRow, SidonReport};
use serde::{Deserialize, Serialize};

use crate::checks::CheckSummary;

/// A report that can be printed as text, JSON or CSV.
pub trait Report: Serialize {
    fn passed(&self) -> bool;
    fn human(&self) -> String;
    fn csv_header(&self) -> Vec<&'static str>;
    fn csv_rows(&self) -> Vec<Vec<String>>;
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeqRow {
    pub index: i64,
    #[serde(with = "pell_core::serde_int")]
    pub value: BigInt,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeqReport {
    pub sequence: String,
    pub lo: i64,
    pub hi: i64,
    pub rows: Vec<SeqRow>,
}

impl Report for SeqReport {
    fn passed(&self) -> bool {
        true
    }

    fn human(&self) -> String {
        let mut s = String::new();
        for row in &self.rows {
            let _ = writeln!(s, "{}({}) = {}", self.sequence, row.index, row.value);
        }
        s
    }

    fn csv_header(&self) -> Vec<&'static str> {
        vec!["index", "value"]
    }

    fn csv_rows(&self) -> Vec<Vec<String>> {
        self.rows.iter().map(|r| vec![r.index.to_string(), r.value.to_string()]).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub scope: String,
    pub n_max: i64,
    pub m_max: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub identities: Option<Vec<IdentityReport>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matrices: Option<Vec<CheckSummary>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub numtheory: Option<Vec<CheckSummary>>,
    pub checked: u64,
    pub failed: u64,
}

impl VerifyReport {
    pub fn new(
        scope: &str,
        n_max: i64,
        m_max: i64,
        identities: Option<Vec<IdentityReport>>,
        matrices: Option<Vec<CheckSummary>>,
        numtheory: Option<Vec<CheckSummary>>,
    ) -> Self {
        let mut checked = 0;
        let mut failed = 0;
        for r in identities.iter().flatten() {
            checked += r.checked;
            failed += r.failures.len() as u64;
        }
        for s in matrices.iter().flatten().chain(numtheory.iter().flatten()) {
            checked += s.checked;
            failed += s.failures.len() as u64;
        }
        Self { scope: scope.into(), n_max, m_max, identities, matrices, numtheory, checked, failed }
    }

    /// One flat line per check: `(group, name, lo, hi, checked, failures, first failure)`.
    fn lines(&self) -> Vec<[String; 7]> {
        let mut out = Vec::new();
        for r in self.identities.iter().flatten() {
            let hi = r.m_range.map_or(r.n_range.1, |m| m.1.max(r.n_range.1));
            let first = r.failures.first().map(|c| {
                format!("n={} m={:?} k={:?}: {} != {}", c.n, c.m, c.k, c.lhs, c.rhs)
            });
            out.push([
                "identities".into(),
                r.id.clone(),
                r.n_range.0.to_string(),
                hi.to_string(),
                r.checked.to_string(),
                r.failures.len().to_string(),
                first.unwrap_or_default(),
            ]);
        }
        for (group, list) in [("matrices", &self.matrices), ("numtheory", &self.numtheory)] {
            for s in list.iter().flatten() {
                out.push([
                    group.into(),
                    s.name.clone(),
                    s.range.0.to_string(),
                    s.range.1.to_string(),
                    s.checked.to_string(),
                    s.failures.len().to_string(),
                    s.failures.first().map(|f| f.detail.clone()).unwrap_or_default(),
                ]);
            }
        }
        out
    }
}

impl Report for VerifyReport {
    fn passed(&self) -> bool {
        self.failed == 0
    }

    fn human(&self) -> String {
        let mut s = String::new();
        for [group, name, lo, hi, checked, failures, first] in self.lines() {
            let mark = if failures == "0" { "ok  " } else { "FAIL" };
            let _ = write!(s, "{mark} {group:<10} {name:<26} [{lo}, {hi}] {checked} cases");
            if failures != "0" {
                let _ = write!(s, ", {failures} failed; first: {first}");
            }
            s.push('\n');
        }
        let _ = writeln!(s, "{} cases checked, {} failed", self.checked, self.failed);
        s
    }

    fn csv_header(&self) -> Vec<&'static str> {
        vec!["group", "check", "lo", "hi", "checked", "failures", "first_failure"]
    }

    fn csv_rows(&self) -> Vec<Vec<String>> {
        self.lines().into_iter().map(Vec::from).collect()
    }
}

/// `classify` output: the census plus any structural violations.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifyReport {
    #[serde(flatten)]
    pub census: ClassificationReport,
    pub violations: Vec<String>,
}

impl Report for ClassifyReport {
    fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    fn human(&self) -> String {
        let c = &self.census;
        let mut s = String::new();
        let _ = writeln!(s, "binary 3x3 matrices: {}", c.total);
        let _ = writeln!(s, "Pell-generating: {}", c.pell_count);
        let _ = writeln!(s, "characteristic polynomial buckets: {}", c.buckets.len());
        for b in &c.buckets {
            let _ = writeln!(
                s,
                "  {:<24} trace {:>2}  det {:>2}  {} matrices  {} orbits  {:?}",
                b.factored,
                b.trace,
                b.det,
                b.members.len(),
                b.orbits.len(),
                b.orbits
            );
        }
        for r in &c.representatives {
            let _ = writeln!(s, "{} (index {}) in {}", r.name, r.index, r.bucket);
        }
        for v in &self.violations {
            let _ = writeln!(s, "violation: {v}");
        }
        s
    }

    fn csv_header(&self) -> Vec<&'static str> {
        vec!["bucket", "poly", "trace", "det", "orbit", "index"]
    }

    fn csv_rows(&self) -> Vec<Vec<String>> {
        let mut rows = Vec::new();
        for b in &self.census.buckets {
            for (o, orbit) in b.orbits.iter().enumerate() {
                for &i in orbit {
                    rows.push(vec![
                        b.factored.clone(),
                        b.poly.clone(),
                        b.trace.to_string(),
                        b.det.to_string(),
                        o.to_string(),
                        i.to_string(),
                    ]);
                }
            }
        }
        rows
    }
}

impl Report for SidonReport {
    fn passed(&self) -> bool {
        self.distinct
    }

    fn human(&self) -> String {
        match self.first_collision {
            None => format!("r(1..={}): all pairwise sums distinct\n", self.n_max),
            Some((i, j, k, l)) => {
                format!("r(1..={}): r({i}) + r({j}) = r({k}) + r({l})\n", self.n_max)
            }
        }
    }

    fn csv_header(&self) -> Vec<&'static str> {
        vec!["n_max", "distinct", "collision"]
    }

    fn csv_rows(&self) -> Vec<Vec<String>> {
        let collision = self
            .first_collision
            .map(|(i, j, k, l)| format!("{i} {j} {k} {l}"))
            .unwrap_or_default();
        vec![vec![self.n_max.to_string(), self.distinct.to_string(), collision]]
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GcdReport {
    pub n_max: i64,
    pub rows: Vec<GcdConsecutiveRow>,
    pub reduction_checked: u64,
    pub reduction_mismatches: Vec<GcdRow>,
}

impl Report for GcdReport {
    fn passed(&self) -> bool {
        self.rows.iter().all(|r| r.pass) && self.reduction_mismatches.is_empty()
    }

    fn human(&self) -> String {
        let mut s = String::new();
        for r in &self.rows {
            let mark = if r.pass { "" } else { "  MISMATCH" };
            let _ = writeln!(s, "gcd(r({}), r({})) = {}  expected {}{mark}", r.n, r.n - 1, r.gcd, r.expected);
        }
        let _ = writeln!(
            s,
            "reduction rows: {} checked, {} mismatched",
            self.reduction_checked,
            self.reduction_mismatches.len()
        );
        s
    }

    fn csv_header(&self) -> Vec<&'static str> {
        vec!["n", "gcd", "expected", "pass"]
    }

    fn csv_rows(&self) -> Vec<Vec<String>> {
        self.rows
            .iter()
            .map(|r| vec![r.n.to_string(), r.gcd.to_string(), r.expected.to_string(), r.pass.to_string()])
            .collect()
    }
}
