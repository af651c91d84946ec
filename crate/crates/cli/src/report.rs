use std::collections::BTreeMap;
use std::fmt::Write;

use serde::{Deserialize, Serialize};

#[derive(Serialize, Deserialize, Clone, Copy, Debug, PartialEq, Eq)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// A failure that does not affect the exit code.
    Warn,
    Skip,
}

impl Status {
    pub fn label(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Warn => "WARN",
            Status::Skip => "SKIP",
        }
    }
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub paper_ref: String,
    pub status: Status,
    pub details: String,
}

impl Check {
    pub fn new(name: impl Into<String>, anchor: &str, ok: bool, details: impl Into<String>) -> Check {
        Check {
            name: name.into(),
            paper_ref: anchor.to_string(),
            status: if ok { Status::Pass } else { Status::Fail },
            details: details.into(),
        }
    }

    pub fn skip(name: impl Into<String>, anchor: &str, details: impl Into<String>) -> Check {
        Check { name: name.into(), paper_ref: anchor.to_string(), status: Status::Skip, details: details.into() }
    }

    /// Downgrades a failure to a warning.
    pub fn non_fatal(mut self) -> Check {
        if self.status == Status::Fail {
            self.status = Status::Warn;
        }
        self
    }

    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub command: String,
    pub params: BTreeMap<String, String>,
    pub checks: Vec<Check>,
    pub elapsed_ms: u64,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn exit_code(&self) -> u8 {
        if self.passed() {
            0
        } else {
            1
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let params: Vec<String> = self.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        let _ = writeln!(s, "shv {} ({})", self.command, params.join(" "));
        for c in &self.checks {
            let _ = writeln!(s, "[{}] {}  [{}]", c.status.label(), c.name, c.paper_ref);
            for line in c.details.lines() {
                let _ = writeln!(s, "    {line}");
            }
        }
        let failed = self.checks.iter().filter(|c| !c.passed()).count();
        let verdict = if failed == 0 { "PASS".to_string() } else { format!("FAIL ({failed} failing)") };
        let _ = writeln!(s, "result: {verdict}, {} checks, {} ms", self.checks.len(), self.elapsed_ms);
        s
    }
}
