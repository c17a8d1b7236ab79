//! Verdicts of identity checks.

use std::fmt;

use crate::vector::Vector;

/// Number of violations kept in a report.
pub const MAX_VIOLATIONS: usize = 32;

/// One failed identity instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub id: String,
    /// 0-based basis indices of the witness.
    pub indices: Vec<usize>,
    pub lhs: Vector,
    pub rhs: Vector,
}

impl Violation {
    fn key(&self) -> (&str, &[usize]) {
        (&self.id, &self.indices)
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let idx: Vec<String> = self.indices.iter().map(|i| (i + 1).to_string()).collect();
        write!(
            f,
            "{} at ({}): lhs = {}, rhs = {}",
            self.id,
            idx.join(","),
            self.lhs,
            self.rhs
        )
    }
}

/// Result of a checker.
///
/// `violations` holds at most [`MAX_VIOLATIONS`] entries, the smallest under
/// `(id, indices)`; `total` counts all of them.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CheckReport {
    pub passed: bool,
    pub violations: Vec<Violation>,
    pub total: usize,
}

impl CheckReport {
    pub fn pass() -> Self {
        CheckReport {
            passed: true,
            violations: Vec::new(),
            total: 0,
        }
    }

    /// A report with a single violation carrying no vectors, for conditions
    /// such as symmetry or nondegeneracy.
    pub fn fail(id: &str, indices: Vec<usize>) -> Self {
        let mut b = ReportBuilder::new();
        b.violation(Violation {
            id: id.into(),
            indices,
            lhs: Vector::default(),
            rhs: Vector::default(),
        });
        b.finish()
    }

    /// Combines several reports into one.
    pub fn all(reports: impl IntoIterator<Item = CheckReport>) -> Self {
        let mut b = ReportBuilder::new();
        for r in reports {
            b.absorb(r);
        }
        b.finish()
    }

    /// Prefixes every identity id, e.g. `coalgebra/` for a sub-check.
    pub fn prefixed(mut self, prefix: &str) -> Self {
        for v in &mut self.violations {
            v.id = format!("{prefix}{}", v.id);
        }
        self
    }

    /// Ids of all stored violations, deduplicated in order.
    pub fn failed_ids(&self) -> Vec<&str> {
        let mut ids: Vec<&str> = self.violations.iter().map(|v| v.id.as_str()).collect();
        ids.dedup();
        ids
    }

    pub fn first(&self) -> Option<&Violation> {
        self.violations.first()
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed {
            return write!(f, "PASS");
        }
        writeln!(f, "FAIL ({} violation{})", self.total, if self.total == 1 { "" } else { "s" })?;
        for v in &self.violations {
            writeln!(f, "  {v}")?;
        }
        if self.total > self.violations.len() {
            writeln!(f, "  ... {} more", self.total - self.violations.len())?;
        }
        Ok(())
    }
}

/// Accumulates violations and produces a deterministic [`CheckReport`].
#[derive(Debug, Default)]
pub struct ReportBuilder {
    kept: Vec<Violation>,
    total: usize,
}

impl ReportBuilder {
    pub fn new() -> Self {
        ReportBuilder::default()
    }

    /// Records a violation unless `lhs == rhs`.
    pub fn eq(&mut self, id: &str, indices: &[usize], lhs: Vector, rhs: Vector) {
        if lhs != rhs {
            self.violation(Violation {
                id: id.into(),
                indices: indices.to_vec(),
                lhs,
                rhs,
            });
        }
    }

    /// Records a violation unless `v` vanishes.
    pub fn zero(&mut self, id: &str, indices: &[usize], v: Vector) {
        if !v.is_zero() {
            let n = v.len();
            self.eq(id, indices, v, Vector::zeros(n));
        }
    }

    pub fn violation(&mut self, v: Violation) {
        self.total += 1;
        self.kept.push(v);
        if self.kept.len() >= 8 * MAX_VIOLATIONS {
            self.compact();
        }
    }

    pub fn absorb(&mut self, r: CheckReport) {
        let extra = r.total - r.violations.len();
        for v in r.violations {
            self.violation(v);
        }
        self.total += extra;
    }

    fn compact(&mut self) {
        self.kept.sort_by(|a, b| a.key().cmp(&b.key()));
        self.kept.truncate(MAX_VIOLATIONS);
    }

    pub fn finish(mut self) -> CheckReport {
        self.compact();
        CheckReport {
            passed: self.total == 0,
            violations: self.kept,
            total: self.total,
        }
    }
}
