//! Verification reports: a flat list of named checks.

use std::fmt;

use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub relation: String,
    pub lhs: String,
    pub rhs: String,
    pub pass: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new() -> Self {
        Report::default()
    }

    pub fn push(&mut self, relation: impl Into<String>, lhs: impl Into<String>, rhs: impl Into<String>, pass: bool) {
        self.checks.push(Check { relation: relation.into(), lhs: lhs.into(), rhs: rhs.into(), pass });
    }

    /// Record `lhs == rhs`.
    pub fn expect_eq<T: PartialEq + fmt::Display>(&mut self, relation: impl Into<String>, lhs: &T, rhs: &T) -> bool {
        let pass = lhs == rhs;
        self.push(relation, lhs.to_string(), rhs.to_string(), pass);
        pass
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }

    pub fn len(&self) -> usize {
        self.checks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.checks.is_empty()
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("report serializes")
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.pass { "PASS" } else { "FAIL" };
        write!(f, "[{tag}] {}: {} = {}", self.relation, self.lhs, self.rhs)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{c}")?;
        }
        Ok(())
    }
}
