//! Structured accept/reject results with concrete violations.

use crate::geom::Point;
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    /// Machine-readable kind, e.g. "monochromatic_crossing".
    pub kind: String,
    /// Offending object ids (edge instances, segments, vertices), rendered as strings.
    pub ids: Vec<String>,
    /// A witness point when the violation has a location.
    pub witness: Option<Point>,
}

impl Violation {
    pub fn new(kind: &str, ids: Vec<String>, witness: Option<Point>) -> Self {
        Violation { kind: kind.to_string(), ids, witness }
    }
}

/// accepted <=> violations is empty. Warnings never affect acceptance.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub accepted: bool,
    pub violations: Vec<Violation>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub warnings: Vec<Violation>,
}

impl Verdict {
    pub fn accept() -> Self {
        Verdict { accepted: true, violations: Vec::new(), warnings: Vec::new() }
    }

    pub fn from_violations(violations: Vec<Violation>) -> Self {
        Verdict { accepted: violations.is_empty(), violations, warnings: Vec::new() }
    }

    pub fn with_warnings(mut self, warnings: Vec<Violation>) -> Self {
        self.warnings = warnings;
        self
    }

    pub fn push(&mut self, v: Violation) {
        self.violations.push(v);
        self.accepted = false;
    }
}
