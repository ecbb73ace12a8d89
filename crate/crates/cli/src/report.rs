use serde::Serialize;
use serde_json::{Map, Value};

/// Cell parameters, e.g. `{"check": "tnb_det", "n": 5, "b": 2}`. Keys
/// serialize in sorted order.
pub type Params = Map<String, Value>;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Failure {
    pub params: Params,
    pub expected: String,
    pub actual: String,
    pub location: String,
}

/// Outcome of one suite run. `passed + failed` is the grid size and
/// `failures` is empty exactly when `failed` is zero.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub grid: Vec<Params>,
    pub passed: usize,
    pub failed: usize,
    pub failures: Vec<Failure>,
    pub wall_time_ms: u64,
}

impl VerificationReport {
    pub fn is_success(&self) -> bool {
        self.failed == 0
    }

    pub fn to_json(&self) -> serde_json::Result<String> {
        let mut s = serde_json::to_string_pretty(self)?;
        s.push('\n');
        Ok(s)
    }
}
