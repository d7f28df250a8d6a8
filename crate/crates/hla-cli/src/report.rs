//! Validation report: per-check records plus summary, renderable as aligned
//! text or JSON.

use serde::Serialize;

#[derive(Debug, Clone, Serialize)]
pub struct CheckRecord {
    pub name: String,
    pub passed: bool,
    pub residual: f64,
    pub tolerance: f64,
    pub runtime_ms: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct ValidationReport {
    pub level: String,
    pub checks: Vec<CheckRecord>,
    pub passed_count: usize,
    pub failed_count: usize,
    pub total_runtime_ms: f64,
    pub overall_pass: bool,
}

impl ValidationReport {
    /// Aggregates records: sorted by name (the runs may be parallel and
    /// unordered), counted, and stamped with the overall verdict.
    pub fn from_checks(level: &str, mut checks: Vec<CheckRecord>) -> Self {
        checks.sort_by(|a, b| a.name.cmp(&b.name));
        let passed_count = checks.iter().filter(|c| c.passed).count();
        let failed_count = checks.len() - passed_count;
        let total_runtime_ms = checks.iter().map(|c| c.runtime_ms).sum();
        Self {
            level: level.to_string(),
            passed_count,
            failed_count,
            total_runtime_ms,
            overall_pass: failed_count == 0,
            checks,
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let name_width = self
            .checks
            .iter()
            .map(|c| c.name.len())
            .max()
            .unwrap_or(8)
            .max(8);
        out.push_str(&format!(
            "{:<name_width$}  {:<6}  {:>12}  {:>10}  {:>9}\n",
            "check", "status", "residual", "tolerance", "ms"
        ));
        for c in &self.checks {
            out.push_str(&format!(
                "{:<name_width$}  {:<6}  {:>12.3e}  {:>10.1e}  {:>9.2}\n",
                c.name,
                if c.passed { "pass" } else { "FAIL" },
                c.residual,
                c.tolerance,
                c.runtime_ms
            ));
        }
        out.push_str(&format!(
            "summary: {} passed, {} failed of {} checks ({} level) in {:.1} ms — {}\n",
            self.passed_count,
            self.failed_count,
            self.checks.len(),
            self.level,
            self.total_runtime_ms,
            if self.overall_pass { "PASS" } else { "FAIL" }
        ));
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Process exit code: 0 on full pass, 1 on any failing check.
    pub fn exit_code(&self) -> i32 {
        if self.overall_pass {
            0
        } else {
            1
        }
    }
}
