use std::fmt;

use serde::Serialize;

/// Outcome of one named check, with a witness when it fails.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl Verdict {
    pub fn pass(name: impl Into<String>) -> Self {
        Verdict {
            name: name.into(),
            passed: true,
            witness: None,
        }
    }

    pub fn fail(name: impl Into<String>, witness: impl Into<String>) -> Self {
        Verdict {
            name: name.into(),
            passed: false,
            witness: Some(witness.into()),
        }
    }

    pub fn from_bool(name: impl Into<String>, ok: bool, witness: impl FnOnce() -> String) -> Self {
        if ok {
            Verdict::pass(name)
        } else {
            Verdict::fail(name, witness())
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mark = if self.passed { "ok  " } else { "FAIL" };
        match &self.witness {
            Some(w) => write!(f, "[{mark}] {}: {w}", self.name),
            None => write!(f, "[{mark}] {}", self.name),
        }
    }
}

/// An ordered list of verdicts.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Suite {
    pub checks: Vec<Verdict>,
}

impl Suite {
    pub fn new() -> Self {
        Suite::default()
    }

    pub fn push(&mut self, v: Verdict) {
        self.checks.push(v);
    }

    pub fn extend(&mut self, other: Suite) {
        self.checks.extend(other.checks);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Verdict> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn first_failure(&self) -> Option<&Verdict> {
        self.failures().next()
    }

    pub fn get(&self, name: &str) -> Option<&Verdict> {
        self.checks.iter().find(|c| c.name == name)
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{c}")?;
        }
        Ok(())
    }
}
