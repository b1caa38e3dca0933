//! Machine-readable run reports.

use std::collections::BTreeMap;
use std::time::Instant;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// The check could not be decided with the given parameters.
    Indeterminate,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Step {
    pub name: String,
    pub status: Status,
    pub data: serde_json::Value,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub command: String,
    /// SHA-256 of the input file, or of the canonical argument string for
    /// commands without input files.
    pub input_digest: String,
    pub steps: Vec<Step>,
    pub status: Status,
    /// Milliseconds per step and in total. The only non-deterministic field.
    pub timing: BTreeMap<String, f64>,
}

pub fn digest(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

/// Accumulates steps and their timings.
pub struct ReportBuilder {
    report: RunReport,
    started: Instant,
    last: Instant,
}

impl ReportBuilder {
    pub fn new(command: &str, input: &[u8]) -> Self {
        let now = Instant::now();
        ReportBuilder {
            report: RunReport {
                command: command.to_string(),
                input_digest: digest(input),
                steps: Vec::new(),
                status: Status::Pass,
                timing: BTreeMap::new(),
            },
            started: now,
            last: now,
        }
    }

    pub fn step(&mut self, name: &str, status: Status, data: impl Serialize) -> &mut Self {
        let now = Instant::now();
        self.report
            .timing
            .insert(name.to_string(), (now - self.last).as_secs_f64() * 1e3);
        self.last = now;
        self.report.steps.push(Step {
            name: name.to_string(),
            status,
            data: serde_json::to_value(data).unwrap_or(serde_json::Value::Null),
        });
        self
    }

    /// Overall status: fail if any step failed, else indeterminate if any
    /// step was, else pass.
    pub fn finish(mut self) -> RunReport {
        let statuses: Vec<Status> = self.report.steps.iter().map(|s| s.status).collect();
        self.report.status = if statuses.contains(&Status::Fail) {
            Status::Fail
        } else if statuses.contains(&Status::Indeterminate) {
            Status::Indeterminate
        } else {
            Status::Pass
        };
        self.report
            .timing
            .insert("total".into(), self.started.elapsed().as_secs_f64() * 1e3);
        self.report
    }
}

impl RunReport {
    /// `0` unless some step failed.
    pub fn exit_code(&self) -> i32 {
        match self.status {
            Status::Fail => 1,
            _ => 0,
        }
    }

    pub fn step(&self, name: &str) -> Option<&Step> {
        self.steps.iter().find(|s| s.name == name)
    }

    /// The report with timings cleared, for byte-level comparisons.
    pub fn without_timing(&self) -> RunReport {
        RunReport {
            timing: BTreeMap::new(),
            ..self.clone()
        }
    }

    pub fn summary(&self) -> String {
        let mut out = format!("{} [{:?}]\n", self.command, self.status);
        for s in &self.steps {
            out.push_str(&format!("  {:<22} {:?}\n", s.name, s.status));
        }
        out
    }
}

pub fn status_of(ok: bool) -> Status {
    if ok {
        Status::Pass
    } else {
        Status::Fail
    }
}
