//! Mamdani fuzzy-logic attitude stabilizer.
//!
//! Pitch and roll errors are fuzzified over seven linguistic labels, matched
//! against a 49-row rule table, and each rotor's speed correction is
//! recovered by centroid defuzzification of the clipped output sets.
//!
//! The pipeline is split into:
//! * [`label`] — the seven linguistic labels and their sign symmetry,
//! * [`membership`] — trapezoidal membership functions and their validation,
//! * [`rules`] — the rule-table grammar, parser, and structural checks,
//! * [`defuzz`] — exact centroid integration of piecewise-linear envelopes,
//! * [`engine`] — the end-to-end inference entry point.

pub mod defuzz;
pub mod engine;
pub mod label;
pub mod membership;
pub mod rules;

pub use engine::{
    ErrorInput, FuzzyEngine, RotorDeltaOutput, DEFAULT_MEMBERSHIPS, DEFAULT_RULES,
    TUNED_MEMBERSHIPS,
};
pub use label::FuzzyLabel;
pub use membership::{MembershipFunction, MembershipSet};
pub use rules::{RuleRow, RuleTable};

use thiserror::Error;

/// Errors raised while loading or validating fuzzy configuration.
#[derive(Debug, Error)]
pub enum FuzzyError {
    /// A membership file could not be parsed.
    #[error("membership definition error: {0}")]
    Membership(String),
    /// One or more problems were found in a rule table. Every problem is
    /// listed; parsing does not stop at the first.
    #[error("rule table has {} problem(s):\n{}", .0.len(), format_rule_errors(.0))]
    Rules(Vec<rules::RuleError>),
}

fn format_rule_errors(errors: &[rules::RuleError]) -> String {
    errors
        .iter()
        .map(|e| format!("  - {e}"))
        .collect::<Vec<_>>()
        .join("\n")
}
