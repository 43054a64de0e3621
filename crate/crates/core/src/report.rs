//! Pass/fail bookkeeping for verification suites.

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new() -> Self {
        Report::default()
    }

    pub fn check(&mut self, name: impl Into<String>, ok: bool) -> &mut Self {
        let status = if ok { Status::Pass } else { Status::Fail };
        self.checks.push(Check { name: name.into(), status, detail: String::new() });
        self
    }

    pub fn check_with(&mut self, name: impl Into<String>, ok: bool, detail: impl Into<String>) -> &mut Self {
        let status = if ok { Status::Pass } else { Status::Fail };
        self.checks.push(Check { name: name.into(), status, detail: detail.into() });
        self
    }

    /// Records `Err` as a failure carrying the error text.
    pub fn check_result<T, E: std::fmt::Display>(&mut self, name: impl Into<String>, r: &Result<T, E>) -> &mut Self {
        match r {
            Ok(_) => self.check(name, true),
            Err(e) => self.check_with(name, false, e.to_string()),
        }
    }

    pub fn skip(&mut self, name: impl Into<String>, why: impl Into<String>) -> &mut Self {
        self.checks.push(Check { name: name.into(), status: Status::Skip, detail: why.into() });
        self
    }

    /// Appends another report with its check names prefixed.
    pub fn absorb(&mut self, prefix: &str, other: Report) -> &mut Self {
        for mut c in other.checks {
            c.name = format!("{prefix}{}", c.name);
            self.checks.push(c);
        }
        self
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn status_of(&self, name: &str) -> Option<Status> {
        self.checks.iter().find(|c| c.name == name).map(|c| c.status)
    }
}
