use std::time::Instant;

use serde_json::{json, Value};
use supercapelli_core::Result;

#[derive(Clone, Debug)]
pub struct CaseRecord {
    pub key: String,
    pub pass: bool,
    pub witness: Value,
    pub millis: u128,
}

/// Outcome of one verification suite. A suite passes iff every case passes.
#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub suite: String,
    pub cases: Vec<CaseRecord>,
}

impl VerificationReport {
    pub fn new(suite: &str) -> Self {
        VerificationReport { suite: suite.to_string(), cases: Vec::new() }
    }

    /// Runs one case; an error counts as a failure and is kept as witness.
    pub fn case(&mut self, key: impl Into<String>, f: impl FnOnce() -> Result<(bool, Value)>) {
        let start = Instant::now();
        let (pass, witness) = match f() {
            Ok(r) => r,
            Err(e) => (false, json!({ "error": e.to_string() })),
        };
        self.cases.push(CaseRecord { key: key.into(), pass, witness, millis: start.elapsed().as_millis() });
    }

    pub fn pass(&self) -> bool {
        self.cases.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> usize {
        self.cases.iter().filter(|c| !c.pass).count()
    }

    pub fn total_millis(&self) -> u128 {
        self.cases.iter().map(|c| c.millis).sum()
    }

    fn sorted(&self) -> Vec<&CaseRecord> {
        let mut v: Vec<&CaseRecord> = self.cases.iter().collect();
        v.sort_by(|a, b| a.key.cmp(&b.key));
        v
    }

    /// Timings are left out so that the output is reproducible.
    pub fn to_json(&self) -> Value {
        let cases: Vec<Value> = self
            .sorted()
            .into_iter()
            .map(|c| {
                if c.pass {
                    json!({ "case": c.key, "pass": true })
                } else {
                    json!({ "case": c.key, "pass": false, "witness": c.witness })
                }
            })
            .collect();
        json!({ "suite": self.suite, "pass": self.pass(), "cases": cases })
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for c in self.sorted() {
            let status = if c.pass { "ok  " } else { "FAIL" };
            s.push_str(&format!("{status} {} [{} ms]\n", c.key, c.millis));
            if !c.pass {
                s.push_str(&format!("     {}\n", c.witness));
            }
        }
        s.push_str(&format!(
            "suite {}: {} ({} cases, {} failed, {} ms)\n",
            self.suite,
            if self.pass() { "PASS" } else { "FAIL" },
            self.cases.len(),
            self.failures(),
            self.total_millis()
        ));
        s
    }
}
