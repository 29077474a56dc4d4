use std::fmt::Display;

use serde::{Deserialize, Serialize};

/// One exact comparison, kept with both sides as strings for reporting.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub lhs: String,
    pub rhs: String,
}

impl Check {
    pub fn compare<T: PartialEq + Display>(name: impl Into<String>, lhs: &T, rhs: &T) -> Self {
        Check {
            name: name.into(),
            pass: lhs == rhs,
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        }
    }

    pub fn flag(name: impl Into<String>, pass: bool, lhs: impl Into<String>, rhs: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            pass,
            lhs: lhs.into(),
            rhs: rhs.into(),
        }
    }
}

pub fn all_pass(checks: &[Check]) -> bool {
    checks.iter().all(|c| c.pass)
}
