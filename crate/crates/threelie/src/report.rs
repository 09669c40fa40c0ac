//! Violation reports returned by identity checkers.

use crate::linalg::{format_rational, Rational};

/// One failing basis tuple together with its nonzero defect, flattened to a
/// coordinate vector (row major for matrix-valued defects).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub tuple: Vec<usize>,
    pub defect: Vec<Rational>,
}

/// Outcome of checking one identity over all relevant basis tuples. Empty
/// means the identity holds exactly.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Report {
    violations: Vec<Violation>,
}

impl Report {
    pub fn new() -> Self {
        Report::default()
    }

    pub fn push(&mut self, tuple: Vec<usize>, defect: Vec<Rational>) {
        self.violations.push(Violation { tuple, defect });
    }

    /// Records the tuple only when the defect is nonzero.
    pub fn record(&mut self, tuple: Vec<usize>, defect: Vec<Rational>) {
        if !defect.iter().all(num::traits::Zero::is_zero) {
            self.push(tuple, defect);
        }
    }

    pub fn is_empty(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn len(&self) -> usize {
        self.violations.len()
    }

    pub fn violations(&self) -> &[Violation] {
        &self.violations
    }

    /// Render of one violation as `tuple -> defect`, with exact rationals.
    pub fn describe(&self) -> Vec<String> {
        self.violations
            .iter()
            .map(|v| {
                let defect: Vec<String> = v.defect.iter().map(format_rational).collect();
                format!("{:?} -> [{}]", v.tuple, defect.join(", "))
            })
            .collect()
    }
}
