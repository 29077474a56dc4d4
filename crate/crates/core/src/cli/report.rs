use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::check::Check;
use crate::error::{Error, Result};

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub params: BTreeMap<String, String>,
    pub results: BTreeMap<String, String>,
    pub checks: Vec<Check>,
    pub timing_ms: f64,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Report {
            command: command.to_string(),
            ..Default::default()
        }
    }

    pub fn param(&mut self, name: &str, value: impl ToString) -> &mut Self {
        self.params.insert(name.to_string(), value.to_string());
        self
    }

    pub fn result(&mut self, name: &str, value: impl ToString) -> &mut Self {
        self.results.insert(name.to_string(), value.to_string());
        self
    }

    pub fn check(&mut self, c: Check) -> &mut Self {
        self.checks.push(c);
        self
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> usize {
        self.checks.iter().filter(|c| !c.pass).count()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    /// Plain-text form; every value appears verbatim, one per line, and
    /// check fields are tab separated.
    pub fn to_human(&self) -> String {
        let mut out = String::new();
        writeln!(out, "command: {}", self.command).unwrap();
        if !self.params.is_empty() {
            writeln!(out, "params:").unwrap();
            for (k, v) in &self.params {
                writeln!(out, "  {k} = {v}").unwrap();
            }
        }
        if !self.results.is_empty() {
            writeln!(out, "results:").unwrap();
            for (k, v) in &self.results {
                writeln!(out, "  {k} = {v}").unwrap();
            }
        }
        if !self.checks.is_empty() {
            writeln!(out, "checks:").unwrap();
            for c in &self.checks {
                let status = if c.pass { "PASS" } else { "FAIL" };
                writeln!(out, "  {status}\t{}\t{}\t{}", c.name, c.lhs, c.rhs).unwrap();
            }
            writeln!(
                out,
                "summary: {} passed, {} failed",
                self.checks.len() - self.failures(),
                self.failures()
            )
            .unwrap();
        }
        writeln!(out, "timing_ms: {}", self.timing_ms).unwrap();
        out
    }

    pub fn from_human(text: &str) -> Result<Self> {
        let bad = |line: &str| Error::Parse(format!("unexpected report line {line:?}"));
        let mut report = Report::default();
        let mut section = "";
        for line in text.lines() {
            if let Some(rest) = line.strip_prefix("command: ") {
                report.command = rest.to_string();
            } else if let Some(rest) = line.strip_prefix("timing_ms: ") {
                report.timing_ms = rest.parse().map_err(|_| bad(line))?;
            } else if line.starts_with("summary: ") {
                continue;
            } else if let Some(name) = line.strip_suffix(':').filter(|s| !s.starts_with(' ')) {
                section = match name {
                    "params" => "params",
                    "results" => "results",
                    "checks" => "checks",
                    _ => return Err(bad(line)),
                };
            } else if let Some(body) = line.strip_prefix("  ") {
                match section {
                    "params" | "results" => {
                        let (k, v) = body.split_once(" = ").ok_or_else(|| bad(line))?;
                        let map = if section == "params" {
                            &mut report.params
                        } else {
                            &mut report.results
                        };
                        map.insert(k.to_string(), v.to_string());
                    }
                    "checks" => {
                        let fields: Vec<&str> = body.splitn(4, '\t').collect();
                        let [status, name, lhs, rhs] = fields[..] else {
                            return Err(bad(line));
                        };
                        report.checks.push(Check::flag(name, status == "PASS", lhs, rhs));
                    }
                    _ => return Err(bad(line)),
                }
            } else {
                return Err(bad(line));
            }
        }
        Ok(report)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn renderings_agree() {
        let mut r = Report::new("selberg");
        r.param("a", "1/2").param("n", 3);
        r.result("closed_form", "1/30").result("poly", "y^2 - 1/2*y + 1/12");
        r.check(Check::flag("det", true, "1/30", "1/30"));
        r.check(Check::flag("numeric a=1 b=2", false, "6.6e-2", "1/15"));
        r.timing_ms = 12.5;
        assert_eq!(Report::from_human(&r.to_human()).unwrap(), r);
        assert_eq!(Report::from_json(&r.to_json()).unwrap(), r);
    }
}
