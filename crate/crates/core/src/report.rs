use std::fmt;

use serde::Serialize;

use crate::error::Vertex;

/// One violated identity, located on the grid.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Finding {
    pub check: String,
    pub at: Vertex,
}

/// Outcome of a verification pass. Verification never fails; it lists what
/// did not hold.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub checked: usize,
    pub failures: Vec<Finding>,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn is_clean(&self) -> bool {
        self.failures.is_empty()
    }

    /// Records one check and its result.
    pub fn check(&mut self, ok: bool, name: &str, at: Vertex) {
        self.checked += 1;
        if !ok {
            self.fail(name, at);
        }
    }

    pub fn fail(&mut self, name: &str, at: Vertex) {
        self.failures.push(Finding { check: name.to_string(), at });
    }

    pub fn merge(&mut self, other: Report) {
        self.checked += other.checked;
        self.failures.extend(other.failures);
    }

    pub fn first_failure(&self) -> Option<&Finding> {
        self.failures.first()
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_clean() {
            return write!(f, "ok: {} checks passed", self.checked);
        }
        writeln!(f, "FAILED: {} of {} checks", self.failures.len(), self.checked)?;
        for x in &self.failures {
            writeln!(f, "  {} at ({}, {})", x.check, x.at.0, x.at.1)?;
        }
        Ok(())
    }
}
