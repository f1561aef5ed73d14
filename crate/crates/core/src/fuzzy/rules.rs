//! The 49-row rule table: grammar, parser, and structural validation.
//!
//! File format, one rule per line:
//!
//! ```text
//! # comment
//! NL NL -> PL Z Z NL NL Z Z PL
//! ```
//!
//! The two antecedent labels are the pitch-error and roll-error sets; the
//! eight consequents are the speed-change labels for rotors
//! `1R 1L 2R 2L 3R 3L 4R 4L` in that order. A valid table covers every
//! antecedent pair exactly once, and in every row diametrically opposite
//! rotors carry sign-negated labels (so each rule commands pure torque with
//! no net thrust change).

use std::fmt;
use std::str::FromStr;

use super::label::{FuzzyLabel, LABELS, LABEL_COUNT};
use super::FuzzyError;
use crate::rotor::{RotorChannel, CHANNELS, CHANNEL_COUNT};

/// One parsed rule.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RuleRow {
    /// Pitch-error antecedent label.
    pub theta: FuzzyLabel,
    /// Roll-error antecedent label.
    pub phi: FuzzyLabel,
    /// Consequent labels in canonical rotor order.
    pub out: [FuzzyLabel; CHANNEL_COUNT],
}

impl RuleRow {
    /// Channels whose label is not the negation of the diametrically
    /// opposite channel's label, with the label found and the label the
    /// structure demands.
    pub fn antisymmetry_violations(&self) -> Vec<(RotorChannel, FuzzyLabel, FuzzyLabel)> {
        let mut v = Vec::new();
        // Checking the first four channels covers all four opposite pairs.
        for c in &CHANNELS[..CHANNEL_COUNT / 2] {
            let opp = c.opposite();
            let expected = self.out[c.index()].negated();
            let found = self.out[opp.index()];
            if found != expected {
                v.push((opp, found, expected));
            }
        }
        v
    }
}

/// A problem found while parsing or validating a rule table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RuleError {
    /// Malformed line; `column` is 1-based and points at the offending
    /// token.
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    /// The same antecedent pair appears twice.
    Duplicate {
        line: usize,
        theta: FuzzyLabel,
        phi: FuzzyLabel,
        first_line: usize,
    },
    /// An antecedent pair never appears.
    Missing { theta: FuzzyLabel, phi: FuzzyLabel },
    /// A row breaks the opposite-rotor structure.
    Antisymmetry {
        line: usize,
        theta: FuzzyLabel,
        phi: FuzzyLabel,
        channel: RotorChannel,
        found: FuzzyLabel,
        expected: FuzzyLabel,
    },
}

impl fmt::Display for RuleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RuleError::Syntax {
                line,
                column,
                message,
            } => write!(f, "line {line}, column {column}: {message}"),
            RuleError::Duplicate {
                line,
                theta,
                phi,
                first_line,
            } => write!(
                f,
                "line {line}: rule ({theta}, {phi}) already defined on line {first_line}"
            ),
            RuleError::Missing { theta, phi } => {
                write!(f, "no rule for antecedent pair ({theta}, {phi})")
            }
            RuleError::Antisymmetry {
                line,
                theta,
                phi,
                channel,
                found,
                expected,
            } => write!(
                f,
                "line {line}: rule ({theta}, {phi}) gives rotor {channel} label {found}, \
                 but the opposite rotor's label requires {expected}"
            ),
        }
    }
}

impl std::error::Error for RuleError {}

/// The complete validated rule base.
#[derive(Debug, Clone)]
pub struct RuleTable {
    rows: Vec<RuleRow>,
    index: [[usize; LABEL_COUNT]; LABEL_COUNT],
}

impl RuleTable {
    /// Parses and validates rule text. All problems are collected and
    /// returned together rather than stopping at the first.
    pub fn parse(text: &str) -> Result<RuleTable, FuzzyError> {
        let mut errors = Vec::new();
        let mut rows: Vec<(usize, RuleRow)> = Vec::new();

        for (idx, raw) in text.lines().enumerate() {
            let lineno = idx + 1;
            let line = raw.split('#').next().unwrap_or("");
            if line.trim().is_empty() {
                continue;
            }
            match parse_line(line, lineno) {
                Ok(row) => rows.push((lineno, row)),
                Err(mut errs) => errors.append(&mut errs),
            }
        }

        let mut index = [[usize::MAX; LABEL_COUNT]; LABEL_COUNT];
        let mut first_line = [[0usize; LABEL_COUNT]; LABEL_COUNT];
        let mut kept: Vec<RuleRow> = Vec::new();
        for (lineno, row) in &rows {
            let (ti, pi) = (row.theta.index(), row.phi.index());
            if index[ti][pi] != usize::MAX {
                errors.push(RuleError::Duplicate {
                    line: *lineno,
                    theta: row.theta,
                    phi: row.phi,
                    first_line: first_line[ti][pi],
                });
                continue;
            }
            index[ti][pi] = kept.len();
            first_line[ti][pi] = *lineno;
            kept.push(*row);
        }
        for t in LABELS {
            for p in LABELS {
                if index[t.index()][p.index()] == usize::MAX {
                    errors.push(RuleError::Missing { theta: t, phi: p });
                }
            }
        }
        for (lineno, row) in &rows {
            for (channel, found, expected) in row.antisymmetry_violations() {
                errors.push(RuleError::Antisymmetry {
                    line: *lineno,
                    theta: row.theta,
                    phi: row.phi,
                    channel,
                    found,
                    expected,
                });
            }
        }

        if errors.is_empty() {
            Ok(RuleTable { rows: kept, index })
        } else {
            Err(FuzzyError::Rules(errors))
        }
    }

    /// All rows in file order.
    pub fn rows(&self) -> &[RuleRow] {
        &self.rows
    }

    /// The rule for one antecedent pair.
    pub fn row(&self, theta: FuzzyLabel, phi: FuzzyLabel) -> &RuleRow {
        &self.rows[self.index[theta.index()][phi.index()]]
    }
}

/// Splits a line into (1-based column, token) pairs.
fn tokens_with_columns(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start: Option<usize> = None;
    for (i, ch) in line.char_indices() {
        if ch.is_whitespace() {
            if let Some(s) = start.take() {
                out.push((s + 1, &line[s..i]));
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        out.push((s + 1, &line[s..]));
    }
    out
}

fn parse_line(line: &str, lineno: usize) -> Result<RuleRow, Vec<RuleError>> {
    let tokens = tokens_with_columns(line);
    let syntax = |column: usize, message: String| RuleError::Syntax {
        line: lineno,
        column,
        message,
    };
    let end_col = line.trim_end().chars().count() + 1;

    if tokens.len() != 3 + CHANNEL_COUNT {
        return Err(vec![syntax(
            tokens.get(3 + CHANNEL_COUNT).map_or(end_col, |t| t.0),
            format!(
                "expected `<label> <label> -> <label>{{{CHANNEL_COUNT}}}` ({} tokens), found {} tokens",
                3 + CHANNEL_COUNT,
                tokens.len()
            ),
        )]);
    }

    let mut errors = Vec::new();
    let mut label_at = |i: usize| -> Option<FuzzyLabel> {
        let (col, tok) = tokens[i];
        match FuzzyLabel::from_str(tok) {
            Ok(l) => Some(l),
            Err(e) => {
                errors.push(syntax(col, e));
                None
            }
        }
    };

    let theta = label_at(0);
    let phi = label_at(1);
    let mut out = [FuzzyLabel::Z; CHANNEL_COUNT];
    let mut out_ok = true;
    for (i, slot) in out.iter_mut().enumerate() {
        match label_at(3 + i) {
            Some(l) => *slot = l,
            None => out_ok = false,
        }
    }
    {
        let (col, tok) = tokens[2];
        if tok != "->" {
            errors.push(syntax(col, format!("expected `->`, found `{tok}`")));
        }
    }

    match (theta, phi, out_ok, errors.is_empty()) {
        (Some(theta), Some(phi), true, true) => Ok(RuleRow { theta, phi, out }),
        _ => Err(errors),
    }
}
