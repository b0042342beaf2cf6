//! Check results shared by every verification routine.

use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    /// Known discrepancy in a published statement that the computation
    /// resolves; not a failure of the identity under test.
    Warn,
    Fail,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Warn => "WARN",
            Status::Fail => "FAIL",
        })
    }
}

/// One verified statement.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    /// The statement being reproduced, in words or as a formula.
    pub anchor: String,
    pub status: Status,
    pub detail: String,
}

impl Check {
    pub fn new(name: impl Into<String>, anchor: impl Into<String>, status: Status, detail: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            anchor: anchor.into(),
            status,
            detail: detail.into(),
        }
    }

    pub fn pass(name: impl Into<String>, anchor: impl Into<String>, detail: impl Into<String>) -> Self {
        Self::new(name, anchor, Status::Pass, detail)
    }

    pub fn fail(name: impl Into<String>, anchor: impl Into<String>, detail: impl Into<String>) -> Self {
        Self::new(name, anchor, Status::Fail, detail)
    }

    pub fn warn(name: impl Into<String>, anchor: impl Into<String>, detail: impl Into<String>) -> Self {
        Self::new(name, anchor, Status::Warn, detail)
    }

    /// `Pass` if `ok`, else `Fail`, with the same detail text.
    pub fn expect(ok: bool, name: impl Into<String>, anchor: impl Into<String>, detail: impl Into<String>) -> Self {
        Self::new(name, anchor, if ok { Status::Pass } else { Status::Fail }, detail)
    }

    pub fn is_pass(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    pub fn count(&self, status: Status) -> usize {
        self.checks.iter().filter(|c| c.status == status).count()
    }

    /// No check failed (warnings allowed).
    pub fn ok(&self) -> bool {
        self.count(Status::Fail) == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn summary(&self) -> String {
        format!(
            "{} checks: {} passed, {} warnings, {} failed",
            self.checks.len(),
            self.count(Status::Pass),
            self.count(Status::Warn),
            self.count(Status::Fail)
        )
    }

    pub fn to_table(&self) -> String {
        let w = self.checks.iter().map(|c| c.name.len()).max().unwrap_or(4).max(4);
        let mut out = String::new();
        for c in &self.checks {
            out.push_str(&format!("{:<4}  {:<w$}  {}\n", c.status, c.name, c.anchor));
            if !c.detail.is_empty() {
                out.push_str(&format!("      {:<w$}  {}\n", "", c.detail));
            }
        }
        out.push_str(&self.summary());
        out.push('\n');
        out
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("status,name,anchor,detail\n");
        for c in &self.checks {
            out.push_str(&format!(
                "{},{},{},{}\n",
                c.status,
                csv_field(&c.name),
                csv_field(&c.anchor),
                csv_field(&c.detail)
            ));
        }
        out
    }

    pub fn to_latex(&self) -> String {
        let mut out = String::from("\\begin{tabular}{lll}\n\\hline\nstatus & check & detail \\\\\n\\hline\n");
        for c in &self.checks {
            out.push_str(&format!(
                "{} & {} & {} \\\\\n",
                c.status,
                latex_escape(&c.name),
                latex_escape(&c.detail)
            ));
        }
        out.push_str("\\hline\n\\end{tabular}\n");
        out
    }
}

pub(crate) fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

pub(crate) fn latex_escape(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    for ch in s.chars() {
        match ch {
            '_' | '&' | '%' | '#' | '$' | '{' | '}' => {
                out.push('\\');
                out.push(ch);
            }
            '^' => out.push_str("\\^{}"),
            _ => out.push(ch),
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_and_formats() {
        let mut r = Report::new();
        r.push(Check::pass("a", "x = x", ""));
        r.push(Check::warn("b", "printed term", "c1*c2/24, not c1*c3/24"));
        assert!(r.ok());
        r.push(Check::fail("c", "1 = 2", "lhs 1, rhs 2"));
        assert!(!r.ok());
        assert_eq!(r.summary(), "3 checks: 1 passed, 1 warnings, 1 failed");
        assert!(r.to_csv().contains("WARN,b,printed term,\"c1*c2/24, not c1*c3/24\""));
        assert!(r.to_latex().contains("c1*c2/24, not c1*c3/24"));
        let json = serde_json::to_string(&r).unwrap();
        assert!(json.contains("\"status\":\"FAIL\""));
        assert_eq!(serde_json::from_str::<Report>(&json).unwrap(), r);
    }
}
