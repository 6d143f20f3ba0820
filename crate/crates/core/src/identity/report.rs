use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use crate::linalg::Scalar;

/// Witnesses kept per axiom; the full count is always recorded.
pub const WITNESS_CAP: usize = 100;

/// A basis tuple on which an axiom fails, with the nonzero residual
/// `lhs - rhs`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub axiom: String,
    pub variables: Vec<String>,
    /// Zero-based basis indices, one per variable.
    pub witness: Vec<usize>,
    pub residual: Vec<Scalar>,
}

impl Violation {
    /// `(x=e1, y=e1, z=e2)`
    pub fn witness_label(&self) -> String {
        let parts: Vec<String> =
            self.variables.iter().zip(&self.witness).map(|(v, i)| format!("{v}=e{}", i + 1)).collect();
        format!("({})", parts.join(", "))
    }
}

/// Outcome of a check. Violations are ordered by axiom name, then by
/// witness tuple.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CheckReport {
    pub checked: BTreeSet<String>,
    pub violations: Vec<Violation>,
    /// Number of failing tuples per failing axiom.
    pub counts: BTreeMap<String, usize>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.counts.is_empty()
    }

    pub fn verdict(&self) -> &'static str {
        if self.passed() { "pass" } else { "fail" }
    }

    pub fn total_violations(&self) -> usize {
        self.counts.values().sum()
    }

    pub fn failing_axioms(&self) -> impl Iterator<Item = &str> {
        self.counts.keys().map(String::as_str)
    }

    pub fn fails(&self, axiom: &str) -> bool {
        self.counts.contains_key(axiom)
    }

    /// Record the results of one axiom; `found` must be in witness order.
    pub fn record(&mut self, axiom: &str, found: impl Iterator<Item = Violation>) {
        self.checked.insert(axiom.to_string());
        let mut n = 0;
        let mut kept = Vec::new();
        for v in found {
            n += 1;
            if kept.len() < WITNESS_CAP {
                kept.push(v);
            }
        }
        if n > 0 {
            *self.counts.entry(axiom.to_string()).or_default() += n;
            self.violations.extend(kept);
            self.normalise();
        }
    }

    /// A single synthetic violation, for conditions checked outside the
    /// identity evaluator.
    pub fn record_one(&mut self, axiom: &str, variables: &[&str], witness: Vec<usize>, residual: Vec<Scalar>) {
        let v = Violation {
            axiom: axiom.to_string(),
            variables: variables.iter().map(|s| s.to_string()).collect(),
            witness,
            residual,
        };
        self.record(axiom, std::iter::once(v));
    }

    pub fn mark_checked(&mut self, axiom: &str) {
        self.checked.insert(axiom.to_string());
    }

    pub fn merge(&mut self, other: CheckReport) {
        self.checked.extend(other.checked);
        for (k, n) in other.counts {
            *self.counts.entry(k).or_default() += n;
        }
        self.violations.extend(other.violations);
        self.normalise();
    }

    /// Prefix every axiom name with `prefix.`.
    pub fn prefixed(self, prefix: &str) -> CheckReport {
        let p = |s: &str| format!("{prefix}.{s}");
        CheckReport {
            checked: self.checked.iter().map(|s| p(s)).collect(),
            counts: self.counts.iter().map(|(k, n)| (p(k), *n)).collect(),
            violations: self
                .violations
                .into_iter()
                .map(|mut v| {
                    v.axiom = p(&v.axiom);
                    v
                })
                .collect(),
        }
    }

    fn normalise(&mut self) {
        self.violations.sort_by(|a, b| (&a.axiom, &a.witness).cmp(&(&b.axiom, &b.witness)));
        self.violations.dedup_by(|a, b| a.axiom == b.axiom && a.witness == b.witness);
        let mut per: BTreeMap<String, usize> = BTreeMap::new();
        self.violations.retain(|v| {
            let n = per.entry(v.axiom.clone()).or_default();
            *n += 1;
            *n <= WITNESS_CAP
        });
    }

    /// Plain-text rendering with at most `limit` witnesses.
    pub fn render(&self, limit: usize) -> String {
        let mut out = String::new();
        if self.passed() {
            let _ = writeln!(out, "pass ({} axioms checked)", self.checked.len());
            return out;
        }
        let _ = writeln!(
            out,
            "fail: {} violations of {} axioms ({} checked)",
            self.total_violations(),
            self.counts.len(),
            self.checked.len()
        );
        for (axiom, n) in &self.counts {
            let _ = writeln!(out, "  {axiom}: {n}");
        }
        for v in self.violations.iter().take(limit) {
            let residual: Vec<String> = v.residual.iter().map(Scalar::to_string).collect();
            let _ = writeln!(out, "  {} at {}: residual [{}]", v.axiom, v.witness_label(), residual.join(", "));
        }
        if self.violations.len() > limit {
            let _ = writeln!(out, "  ... {} more witnesses", self.total_violations() - limit);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn viol(axiom: &str, w: Vec<usize>) -> Violation {
        Violation { axiom: axiom.into(), variables: vec!["x".into()], witness: w, residual: vec![Scalar::one()] }
    }

    #[test]
    fn witnesses_are_capped_but_counted() {
        let mut r = CheckReport::default();
        r.record("a", (0..150).map(|i| viol("a", vec![i])));
        assert_eq!(r.violations.len(), WITNESS_CAP);
        assert_eq!(r.counts["a"], 150);
        assert!(!r.passed());
    }

    #[test]
    fn merged_reports_stay_sorted() {
        let mut r = CheckReport::default();
        r.record("b", std::iter::once(viol("b", vec![0])));
        let mut s = CheckReport::default();
        s.record("a", std::iter::once(viol("a", vec![1])));
        r.merge(s);
        let names: Vec<&str> = r.violations.iter().map(|v| v.axiom.as_str()).collect();
        assert_eq!(names, ["a", "b"]);
    }
}
