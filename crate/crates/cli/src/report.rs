use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

/// Outcome of one checked claim.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub claim: String,
    pub passed: bool,
    /// Exploratory checks are reported but never fail a run.
    #[serde(default)]
    pub exploratory: bool,
    pub detail: String,
}

impl Verdict {
    pub fn status(&self) -> &'static str {
        match (self.exploratory, self.passed) {
            (true, true) => "HELD",
            (true, false) => "NOT HELD",
            (false, true) => "PASS",
            (false, false) => "FAIL",
        }
    }

    pub fn counts_as_failure(&self) -> bool {
        !self.exploratory && !self.passed
    }
}

/// Machine-readable record of a command run.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub command: String,
    pub params: BTreeMap<String, String>,
    pub results: Vec<serde_json::Value>,
    pub verdicts: Vec<Verdict>,
}

impl RunReport {
    pub fn new(command: &str) -> Self {
        RunReport {
            command: command.to_string(),
            ..Default::default()
        }
    }

    pub fn param(mut self, key: &str, value: impl ToString) -> Self {
        self.params.insert(key.to_string(), value.to_string());
        self
    }

    pub fn all_passed(&self) -> bool {
        !self.verdicts.iter().any(Verdict::counts_as_failure)
    }
}
