//! Exact-equality check records shared by the verification suites.

use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    pub name: String,
    /// Parameter point, e.g. `n=5 d=2 k=3`.
    pub at: String,
    pub lhs: String,
    pub rhs: String,
    pub holds: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub checks: Vec<IdentityCheck>,
}

impl VerificationReport {
    pub fn new() -> Self {
        Self::default()
    }

    /// Records `lhs == rhs` using the values' `Display` forms for the report.
    pub fn check<T: PartialEq + std::fmt::Display>(&mut self, name: &str, at: impl Into<String>, lhs: &T, rhs: &T) -> bool {
        let holds = lhs == rhs;
        self.checks.push(IdentityCheck {
            name: name.to_string(),
            at: at.into(),
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
            holds,
        });
        holds
    }

    pub fn check_bool(&mut self, name: &str, at: impl Into<String>, detail: impl Into<String>, holds: bool) -> bool {
        self.checks.push(IdentityCheck {
            name: name.to_string(),
            at: at.into(),
            lhs: detail.into(),
            rhs: "true".to_string(),
            holds,
        });
        holds
    }

    pub fn extend(&mut self, other: VerificationReport) {
        self.checks.extend(other.checks);
    }

    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }

    pub fn failures(&self) -> impl Iterator<Item = &IdentityCheck> {
        self.checks.iter().filter(|c| !c.holds)
    }

    pub fn len(&self) -> usize {
        self.checks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.checks.is_empty()
    }
}
