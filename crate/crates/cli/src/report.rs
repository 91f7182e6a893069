//! The JSON report. Field order is fixed by declaration order, so equal
//! results serialize to identical bytes.

use serde::{Deserialize, Serialize};

/// Bumped whenever the JSON layout changes incompatibly.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub schema: u32,
    pub engine: Engine,
    pub job: String,
    /// RFC 3339; the only field expected to differ between identical runs.
    pub timestamp: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ring: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub field: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub field_override: Option<FieldOverride>,
    pub warnings: Vec<String>,
    /// A job-level input error (parse or definition); no tasks run.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<ErrorInfo>,
    pub tasks: Vec<TaskReport>,
    pub summary: Summary,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Engine {
    pub name: String,
    pub version: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldOverride {
    pub declared: String,
    pub used: String,
    pub banner: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErrorInfo {
    pub kind: String,
    pub message: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub line: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TaskStatus {
    Ok,
    Error,
    InvariantViolation,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TaskReport {
    pub index: usize,
    pub line: usize,
    pub statement: String,
    pub status: TaskStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<ErrorInfo>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub result: Option<TaskResult>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum TaskResult {
    Check {
        ideal: String,
        certificate: Certificate,
    },
    Roundtrip {
        ideal: String,
        map: String,
        m: u32,
        r: u32,
        agree: bool,
        pushforward_was_saturated: bool,
        source: Certificate,
        pushforward: Certificate,
    },
    Scan {
        ideal: String,
        smax: u32,
        tmax: u32,
        /// Exact rational, e.g. `"3/2"`.
        lower_bound: String,
        failures: Vec<ScanFailure>,
        skipped_by_theory: Vec<[u32; 2]>,
    },
    Invariants {
        ideal: String,
        checks: Vec<InvariantCheck>,
    },
    Lemma3 {
        ideal: String,
        map: String,
        m: u32,
        holds: bool,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub m: u32,
    pub r: u32,
    /// `"contained"` or `"not_contained"`.
    pub verdict: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    pub symbolic_basis_size: usize,
    pub symbolic_basis_max_degree: u32,
    pub power_basis_size: usize,
    pub power_basis_max_degree: u32,
    /// Present with `--verify-certificates`: `"verified"` or `"failed: ..."`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verification: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanFailure {
    pub s: u32,
    pub t: u32,
    pub witness: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantCheck {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub ok: usize,
    pub errors: usize,
    pub invariant_violations: usize,
    pub skipped: usize,
    pub exit_code: i32,
}

impl Report {
    /// Pretty JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// JSON with the timestamp blanked, for determinism comparisons.
    pub fn to_json_without_timestamp(&self) -> String {
        let mut copy = self.clone();
        copy.timestamp.clear();
        copy.to_json()
    }
}
