//! Named pass/fail records shared by the demo reports.

use serde::Serialize;

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    pub fn new(name: &str, passed: bool, detail: impl Into<String>) -> Self {
        Check { name: name.to_string(), passed, detail: detail.into() }
    }

    /// `value < bound`.
    pub fn below(name: &str, value: f64, bound: f64) -> Self {
        Check::new(name, value < bound, format!("{value:.3e} < {bound:e}"))
    }
}

/// All checks passed.
pub fn all_passed(checks: &[Check]) -> bool {
    checks.iter().all(|c| c.passed)
}
