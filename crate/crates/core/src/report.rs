//! Check verdicts and run reports.

use std::fmt;
use std::time::Duration;

/// Outcome of one named check under a stated bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub name: String,
    pub bound: String,
    pub cases: u64,
    pub counterexample: Option<String>,
}

impl CheckReport {
    pub fn pass(name: impl Into<String>, bound: impl Into<String>, cases: u64) -> Self {
        CheckReport {
            name: name.into(),
            bound: bound.into(),
            cases,
            counterexample: None,
        }
    }

    pub fn fail(
        name: impl Into<String>,
        bound: impl Into<String>,
        cases: u64,
        counterexample: impl Into<String>,
    ) -> Self {
        CheckReport {
            name: name.into(),
            bound: bound.into(),
            cases,
            counterexample: Some(counterexample.into()),
        }
    }

    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }

    /// One `CHECK <name> PASS|FAIL <detail>` line.
    pub fn machine_line(&self) -> String {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        let mut line = format!("CHECK {} {} bound={} cases={}", self.name, status, self.bound, self.cases);
        if let Some(cx) = &self.counterexample {
            line.push_str(" counterexample=");
            line.push_str(&cx.replace('\n', " "));
        }
        line
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "pass" } else { "FAIL" };
        write!(f, "{status:>4}  {} [{}; {} cases]", self.name, self.bound, self.cases)?;
        if let Some(cx) = &self.counterexample {
            write!(f, "\n      counterexample: {cx}")?;
        }
        Ok(())
    }
}

/// Everything one CLI invocation established.
#[derive(Debug, Clone, Default)]
pub struct RunReport {
    pub command: String,
    pub inputs: Vec<(String, String)>,
    /// Computed values, e.g. an ordering or a membership answer.
    pub results: Vec<(String, String)>,
    pub verdicts: Vec<CheckReport>,
    /// Free-form result lines (tables, values) shown in the human format.
    pub notes: Vec<String>,
    pub duration: Duration,
}

impl RunReport {
    pub fn new(command: impl Into<String>) -> Self {
        RunReport {
            command: command.into(),
            ..Default::default()
        }
    }

    pub fn input(&mut self, key: impl Into<String>, value: impl Into<String>) -> &mut Self {
        self.inputs.push((key.into(), value.into()));
        self
    }

    pub fn result(&mut self, key: impl Into<String>, value: impl Into<String>) -> &mut Self {
        self.results.push((key.into(), value.into()));
        self
    }

    pub fn push(&mut self, verdict: CheckReport) {
        self.verdicts.push(verdict);
    }

    pub fn extend<I: IntoIterator<Item = CheckReport>>(&mut self, verdicts: I) {
        self.verdicts.extend(verdicts);
    }

    pub fn note(&mut self, line: impl Into<String>) {
        self.notes.push(line.into());
    }

    pub fn passed(&self) -> bool {
        self.verdicts.iter().all(CheckReport::passed)
    }

    pub fn verdict(&self, name: &str) -> Option<&CheckReport> {
        self.verdicts.iter().find(|v| v.name == name)
    }

    /// Line-oriented format: one `RESULT key=value` line per result, then one
    /// `CHECK` line per verdict. Contains no timing, so it is a pure function
    /// of the inputs.
    pub fn machine(&self) -> String {
        let mut out = String::new();
        for (k, v) in &self.results {
            out.push_str(&format!("RESULT {k}={v}\n"));
        }
        for v in &self.verdicts {
            out.push_str(&v.machine_line());
            out.push('\n');
        }
        out
    }

    pub fn human(&self) -> String {
        let mut out = format!("== {} ==\n", self.command);
        for (k, v) in &self.inputs {
            out.push_str(&format!("  {k}: {v}\n"));
        }
        for (k, v) in &self.results {
            out.push_str(&format!("{k}: {v}\n"));
        }
        for n in &self.notes {
            out.push_str(n);
            out.push('\n');
        }
        for v in &self.verdicts {
            out.push_str(&v.to_string());
            out.push('\n');
        }
        let failed = self.verdicts.iter().filter(|v| !v.passed()).count();
        if self.verdicts.is_empty() {
            out.push_str(&format!("done in {:.2?}\n", self.duration));
        } else {
            out.push_str(&format!(
                "{} checks, {} failed, {:.2?}\n",
                self.verdicts.len(),
                failed,
                self.duration
            ));
        }
        out
    }
}
