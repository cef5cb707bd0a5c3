//! Pass/fail reports shared by the verifiers.

use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    /// Carries the first counterexample found.
    Fail(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub name: String,
    pub outcome: Outcome,
}

impl CheckResult {
    pub fn pass(name: impl Into<String>) -> Self {
        CheckResult { name: name.into(), outcome: Outcome::Pass }
    }

    pub fn fail(name: impl Into<String>, counterexample: impl Into<String>) -> Self {
        CheckResult { name: name.into(), outcome: Outcome::Fail(counterexample.into()) }
    }

    /// `Pass` when `first_failure` is `None`.
    pub fn from_first_failure(name: impl Into<String>, first_failure: Option<String>) -> Self {
        match first_failure {
            None => Self::pass(name),
            Some(c) => Self::fail(name, c),
        }
    }

    pub fn passed(&self) -> bool {
        self.outcome == Outcome::Pass
    }
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.outcome {
            Outcome::Pass => write!(f, "PASS {}", self.name),
            Outcome::Fail(c) => write!(f, "FAIL {}: {}", self.name, c),
        }
    }
}

/// Whether the hypothesis a verifier needs was met by its input.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Hypothesis {
    Holds,
    Violated(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub subject: String,
    pub hypothesis: Hypothesis,
    pub checks: Vec<CheckResult>,
}

impl Report {
    pub fn new(subject: impl Into<String>) -> Self {
        Report { subject: subject.into(), hypothesis: Hypothesis::Holds, checks: Vec::new() }
    }

    pub fn hypothesis_violated(subject: impl Into<String>, reason: impl Into<String>) -> Self {
        Report {
            subject: subject.into(),
            hypothesis: Hypothesis::Violated(reason.into()),
            checks: Vec::new(),
        }
    }

    pub fn push(&mut self, check: CheckResult) {
        self.checks.push(check);
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
        if let Hypothesis::Violated(r) = other.hypothesis {
            self.hypothesis = Hypothesis::Violated(r);
        }
    }

    pub fn hypothesis_holds(&self) -> bool {
        self.hypothesis == Hypothesis::Holds
    }

    /// True iff the hypothesis holds and every check passed.
    pub fn passed(&self) -> bool {
        self.hypothesis_holds() && self.checks.iter().all(CheckResult::passed)
    }

    pub fn first_failure(&self) -> Option<&CheckResult> {
        self.checks.iter().find(|c| !c.passed())
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Hypothesis::Violated(r) = &self.hypothesis {
            return writeln!(f, "SKIPPED-HYPOTHESIS {}: {}", self.subject, r);
        }
        for c in &self.checks {
            writeln!(f, "{c}")?;
        }
        Ok(())
    }
}
