//! Structured pass/fail records for identity checks.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::half::HalfInteger;
use crate::matrix::ExactMatrix;
use crate::scalar::ComplexScalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// Hard checks decide the exit status; soft checks are informational.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Severity {
    Hard,
    Soft,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Deviation {
    Exact(ComplexScalar),
    Float(f64),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub severity: Severity,
    pub deviation: Deviation,
    pub detail: String,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub lambda: Option<HalfInteger>,
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub fn new(lambda: Option<HalfInteger>) -> Self {
        VerificationReport { lambda, checks: Vec::new() }
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    /// Hard exact check: passes iff `deviation` is zero.
    pub fn exact(&mut self, name: impl Into<String>, deviation: ComplexScalar, detail: impl Into<String>) {
        self.exact_with(name, deviation, Severity::Hard, detail);
    }

    pub fn exact_with(
        &mut self,
        name: impl Into<String>,
        deviation: ComplexScalar,
        severity: Severity,
        detail: impl Into<String>,
    ) {
        let status = if deviation.is_zero() { Status::Pass } else { Status::Fail };
        self.push(Check { name: name.into(), status, severity, deviation: Deviation::Exact(deviation), detail: detail.into() });
    }

    /// Hard exact check that a matrix difference vanishes; the reported
    /// deviation is its largest entry.
    pub fn matrix_zero(&mut self, name: impl Into<String>, difference: &ExactMatrix, detail: impl Into<String>) {
        self.exact(name, difference.max_entry(), detail);
    }

    /// Hard boolean check.
    pub fn condition(&mut self, name: impl Into<String>, ok: bool, detail: impl Into<String>) {
        let deviation = if ok { ComplexScalar::zero() } else { ComplexScalar::one() };
        self.exact(name, deviation, detail);
    }

    /// Floating-point check: passes iff `value ≤ tolerance` (and is finite).
    pub fn float(&mut self, name: impl Into<String>, value: f64, tolerance: f64, detail: impl Into<String>) {
        let status = if value.is_finite() && value <= tolerance { Status::Pass } else { Status::Fail };
        self.push(Check {
            name: name.into(),
            status,
            severity: Severity::Hard,
            deviation: Deviation::Float(value),
            detail: detail.into(),
        });
    }

    pub fn extend(&mut self, other: VerificationReport) {
        self.checks.extend(other.checks);
    }

    pub fn all_hard_pass(&self) -> bool {
        self.checks.iter().all(|c| c.severity == Severity::Soft || c.passed())
    }

    pub fn hard_failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.severity == Severity::Hard && !c.passed())
    }

    pub fn soft_deviations(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.severity == Severity::Soft && !c.passed())
    }

    pub fn find(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// Plain-text table, one row per check.
    pub fn summary_table(&self) -> String {
        let mut out = String::new();
        if let Some(l) = self.lambda {
            let _ = writeln!(out, "lambda = {l}");
        }
        let width = self.checks.iter().map(|c| c.name.chars().count()).max().unwrap_or(4).max(4);
        let _ = writeln!(out, "{:<width$}  {:<6}  {:<4}  {:<24}  detail", "name", "status", "kind", "deviation");
        for c in &self.checks {
            let status = match c.status {
                Status::Pass => "pass",
                Status::Fail => "FAIL",
            };
            let kind = match c.severity {
                Severity::Hard => "hard",
                Severity::Soft => "soft",
            };
            let dev = match &c.deviation {
                Deviation::Exact(v) => v.to_string(),
                Deviation::Float(x) => format!("{x:.3e}"),
            };
            let _ = writeln!(out, "{:<width$}  {:<6}  {:<4}  {:<24}  {}", c.name, status, kind, dev, c.detail);
        }
        let hard_fail = self.hard_failures().count();
        let soft_fail = self.soft_deviations().count();
        let _ = writeln!(
            out,
            "{} checks, {} hard failures, {} soft deviations",
            self.checks.len(),
            hard_fail,
            soft_fail
        );
        out
    }
}
