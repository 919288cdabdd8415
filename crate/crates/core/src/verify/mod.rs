//! Machine checks of the inequalities, fixed-point and iteration results and
//! classification criteria for `D_C K`, with seeded corpora and suites.

mod classify;
pub mod corpus;
mod demo;
mod fixed;
mod inequalities;
mod suite;

use serde::Serialize;

pub use classify::{classify_m1, classify_m2, Classification, Flags, KernelProbe};
pub use corpus::{complex_corpus, planar_classification_corpus, planar_corpus, CertifiedBody};
pub use demo::{dimension_table, nonsurjectivity_demo, DimensionRow, NonSurjectivity};
pub use fixed::{
    fixed_point_check_m1, fixed_point_check_m2, iterate_check, iteration_condition, steiner_point_cm,
};
pub use inequalities::{
    brunn_minkowski_check, containment_after_translation, containment_check, mixed_volume_check_m1,
    quermass_check_m1, volume_check_m2, width_diameter_check_m1, width_diameter_check_m2,
};
pub use suite::{run_suite, Suite, SuiteReport};

/// One compared quantity. `contract == false` marks a reported-only check
/// that does not affect [`Report::passed`].
#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub lhs: f64,
    pub rhs: f64,
    pub tol: f64,
    pub pass: bool,
    pub contract: bool,
}

impl Check {
    /// `lhs ≥ rhs − tol · max(1, |rhs|)`.
    pub fn at_least(name: impl Into<String>, lhs: f64, rhs: f64, tol: f64) -> Self {
        let pass = lhs >= rhs - tol * rhs.abs().max(1.0);
        Self { name: name.into(), lhs, rhs, tol, pass, contract: true }
    }

    /// `lhs ≤ rhs + tol · max(1, |rhs|)`.
    pub fn at_most(name: impl Into<String>, lhs: f64, rhs: f64, tol: f64) -> Self {
        let pass = lhs <= rhs + tol * rhs.abs().max(1.0);
        Self { name: name.into(), lhs, rhs, tol, pass, contract: true }
    }

    /// `|lhs − rhs| ≤ tol · max(1, |rhs|)`.
    pub fn equal(name: impl Into<String>, lhs: f64, rhs: f64, tol: f64) -> Self {
        let pass = (lhs - rhs).abs() <= tol * rhs.abs().max(1.0);
        Self { name: name.into(), lhs, rhs, tol, pass, contract: true }
    }

    /// A boolean outcome, recorded as `lhs = 1` for true against `rhs = 1`.
    pub fn holds(name: impl Into<String>, ok: bool) -> Self {
        Self { name: name.into(), lhs: ok as u8 as f64, rhs: 1.0, tol: 0.0, pass: ok, contract: true }
    }

    pub fn reported_only(mut self) -> Self {
        self.contract = false;
        self
    }
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct Report {
    pub title: String,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(title: impl Into<String>) -> Self {
        Self { title: title.into(), checks: Vec::new() }
    }

    pub fn push(&mut self, c: Check) {
        self.checks.push(c);
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass || !c.contract)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.contract && !c.pass)
    }
}
