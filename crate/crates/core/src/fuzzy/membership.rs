//! Trapezoidal membership functions and the seven-label families used for
//! the error inputs and rotor-speed outputs.
//!
//! A family is loaded from a small text format:
//!
//! ```text
//! # comment
//! [inputs]
//! universe -30 30
//! NL -30 -30 -25 -20     # four numbers: trapezoid feet and plateau
//! NM -25 -15 -5          # three numbers: triangle foot, peak, foot
//! ...
//! [outputs]
//! universe -1050 1050
//! ...
//! ```
//!
//! Values at the universe edge with a coincident foot and peak act as
//! shoulders (grade 1 at the edge).

use std::str::FromStr;

use super::label::{FuzzyLabel, LABELS, LABEL_COUNT};
use super::FuzzyError;
use crate::real::Real;

/// A single trapezoidal (or triangular) membership function.
///
/// The grade is 0 outside `[left_foot, right_foot]`, 1 on
/// `[peak_left, peak_right]`, and linear on the two edges. A triangle has
/// `peak_left == peak_right`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MembershipFunction<R: Real> {
    pub label: FuzzyLabel,
    pub left_foot: R,
    pub peak_left: R,
    pub peak_right: R,
    pub right_foot: R,
}

impl<R: Real> MembershipFunction<R> {
    /// Membership grade of `x`, in `[0, 1]`.
    pub fn grade(&self, x: R) -> R {
        if x < self.left_foot || x > self.right_foot {
            R::zero()
        } else if x >= self.peak_left && x <= self.peak_right {
            R::one()
        } else if x < self.peak_left {
            (x - self.left_foot) / (self.peak_left - self.left_foot)
        } else {
            (self.right_foot - x) / (self.right_foot - self.peak_right)
        }
    }

    /// Abscissa where the rising edge reaches grade `alpha`. For a shoulder
    /// (coincident foot and peak) this is the shared abscissa.
    pub fn rising_at(&self, alpha: R) -> R {
        if self.peak_left == self.left_foot {
            self.left_foot
        } else {
            self.left_foot + alpha * (self.peak_left - self.left_foot)
        }
    }

    /// Abscissa where the falling edge drops to grade `alpha`.
    pub fn falling_at(&self, alpha: R) -> R {
        if self.right_foot == self.peak_right {
            self.right_foot
        } else {
            self.right_foot - alpha * (self.right_foot - self.peak_right)
        }
    }

    fn center(&self) -> R {
        (self.peak_left + self.peak_right) / (R::one() + R::one())
    }
}

/// A complete seven-label family over one universe of discourse.
#[derive(Debug, Clone, PartialEq)]
pub struct MembershipSet<R: Real> {
    universe: (R, R),
    functions: [MembershipFunction<R>; LABEL_COUNT],
}

impl<R: Real> MembershipSet<R> {
    /// Builds and validates a family. `functions` may be in any order; they
    /// are stored sorted by label.
    pub fn new(
        universe: (R, R),
        functions: Vec<MembershipFunction<R>>,
    ) -> Result<Self, FuzzyError> {
        let mut slots: [Option<MembershipFunction<R>>; LABEL_COUNT] = [None; LABEL_COUNT];
        let mut problems = Vec::new();
        for f in functions {
            let i = f.label.index();
            if slots[i].is_some() {
                problems.push(format!("label {} defined more than once", f.label));
            } else {
                slots[i] = Some(f);
            }
        }
        for l in LABELS {
            if slots[l.index()].is_none() {
                problems.push(format!("label {l} is missing"));
            }
        }
        if !problems.is_empty() {
            return Err(FuzzyError::Membership(problems.join("; ")));
        }
        let set = MembershipSet {
            universe,
            functions: slots.map(|s| s.unwrap()),
        };
        set.validate().map(|_| set)
    }

    fn validate(&self) -> Result<(), FuzzyError> {
        let mut problems = Vec::new();
        let (lo, hi) = self.universe;
        if lo >= hi || lo.is_nan() || hi.is_nan() {
            problems.push(format!("universe [{lo}, {hi}] is empty or reversed"));
        }
        let tol = crate::real::real::<R>(1e-9);
        if (lo + hi).abs() > tol {
            problems.push(format!("universe [{lo}, {hi}] is not symmetric about zero"));
        }
        for f in &self.functions {
            if !(f.left_foot <= f.peak_left
                && f.peak_left <= f.peak_right
                && f.peak_right <= f.right_foot)
            {
                problems.push(format!("label {}: breakpoints are not ascending", f.label));
            }
            if f.left_foot < lo || f.right_foot > hi {
                problems.push(format!("label {}: support leaves the universe", f.label));
            }
            if f.left_foot == f.right_foot {
                problems.push(format!("label {}: support is a single point", f.label));
            }
        }
        for w in self.functions.windows(2) {
            if w[0].center() >= w[1].center() {
                problems.push(format!(
                    "labels {} and {} are out of order on the axis",
                    w[0].label, w[1].label
                ));
            }
            // Neighboring supports must genuinely overlap so that every
            // value in the universe carries at least one positive grade.
            if w[1].left_foot >= w[0].right_foot {
                problems.push(format!(
                    "gap between labels {} and {}: no label covers part of the universe",
                    w[0].label, w[1].label
                ));
            }
        }
        if self.functions[0].grade(lo) <= R::zero() {
            problems.push("no label covers the lower edge of the universe".to_string());
        }
        if self.functions[LABEL_COUNT - 1].grade(hi) <= R::zero() {
            problems.push("no label covers the upper edge of the universe".to_string());
        }
        // The family must be a mirror image of itself: each label's shape is
        // the reflection of its sign-negated partner.
        for l in LABELS {
            let f = self.function(l);
            let g = self.function(l.negated());
            let pairs = [
                (f.left_foot, -g.right_foot),
                (f.peak_left, -g.peak_right),
                (f.peak_right, -g.peak_left),
                (f.right_foot, -g.left_foot),
            ];
            if pairs.iter().any(|&(a, b)| (a - b).abs() > tol) {
                problems.push(format!(
                    "labels {} and {} are not mirror images",
                    f.label, g.label
                ));
            }
        }
        if problems.is_empty() {
            Ok(())
        } else {
            Err(FuzzyError::Membership(problems.join("; ")))
        }
    }

    /// Universe of discourse `(lo, hi)`.
    pub fn universe(&self) -> (R, R) {
        self.universe
    }

    /// The function for one label.
    pub fn function(&self, label: FuzzyLabel) -> &MembershipFunction<R> {
        &self.functions[label.index()]
    }

    /// All functions in ascending label order.
    pub fn functions(&self) -> &[MembershipFunction<R>; LABEL_COUNT] {
        &self.functions
    }

    /// Grades of all seven labels at `x`, indexed by label.
    pub fn fuzzify(&self, x: R) -> [R; LABEL_COUNT] {
        let mut out = [R::zero(); LABEL_COUNT];
        for (o, f) in out.iter_mut().zip(self.functions.iter()) {
            *o = f.grade(x);
        }
        out
    }
}

/// Parses a membership file containing `[inputs]` and `[outputs]` sections.
pub fn parse_families<R: Real>(
    text: &str,
) -> Result<(MembershipSet<R>, MembershipSet<R>), FuzzyError> {
    struct Section<R: Real> {
        universe: Option<(R, R)>,
        functions: Vec<MembershipFunction<R>>,
    }
    impl<R: Real> Default for Section<R> {
        fn default() -> Self {
            Section {
                universe: None,
                functions: Vec::new(),
            }
        }
    }
    impl<R: Real> Section<R> {
        fn build(self, name: &str) -> Result<MembershipSet<R>, FuzzyError> {
            let universe = self.universe.ok_or_else(|| {
                FuzzyError::Membership(format!("section [{name}] has no universe line"))
            })?;
            MembershipSet::new(universe, self.functions)
                .map_err(|e| FuzzyError::Membership(format!("section [{name}]: {e}")))
        }
    }

    let mut inputs: Section<R> = Section::default();
    let mut outputs: Section<R> = Section::default();
    let mut current: Option<bool> = None; // true = inputs, false = outputs

    for (idx, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let lineno = idx + 1;
        if line == "[inputs]" {
            current = Some(true);
            continue;
        }
        if line == "[outputs]" {
            current = Some(false);
            continue;
        }
        let section = match current {
            Some(true) => &mut inputs,
            Some(false) => &mut outputs,
            None => {
                return Err(FuzzyError::Membership(format!(
                    "line {lineno}: `{line}` appears before any [inputs]/[outputs] header"
                )))
            }
        };
        let mut tokens = line.split_whitespace();
        let head = tokens.next().unwrap();
        let nums: Result<Vec<R>, _> = tokens
            .map(|t| {
                t.parse::<f64>()
                    .map(crate::real::real::<R>)
                    .map_err(|_| format!("line {lineno}: `{t}` is not a number"))
            })
            .collect();
        let nums = nums.map_err(FuzzyError::Membership)?;
        if head == "universe" {
            if nums.len() != 2 {
                return Err(FuzzyError::Membership(format!(
                    "line {lineno}: universe takes exactly two numbers"
                )));
            }
            section.universe = Some((nums[0], nums[1]));
            continue;
        }
        let label = FuzzyLabel::from_str(head)
            .map_err(|e| FuzzyError::Membership(format!("line {lineno}: {e}")))?;
        let f = match nums.len() {
            3 => MembershipFunction {
                label,
                left_foot: nums[0],
                peak_left: nums[1],
                peak_right: nums[1],
                right_foot: nums[2],
            },
            4 => MembershipFunction {
                label,
                left_foot: nums[0],
                peak_left: nums[1],
                peak_right: nums[2],
                right_foot: nums[3],
            },
            n => {
                return Err(FuzzyError::Membership(format!(
                    "line {lineno}: label {label} has {n} numbers; expected 3 (triangle) or 4 (trapezoid)"
                )))
            }
        };
        section.functions.push(f);
    }

    Ok((inputs.build("inputs")?, outputs.build("outputs")?))
}

#[cfg(test)]
mod tests {
    use super::*;

    const SAMPLE: &str = "
# sample family
[inputs]
universe -30 30
NL -30 -30 -25 -20
NM -25 -15 -5
NS -10 -5 0
Z -5 0 5
PS 0 5 10
PM 5 15 25
PL 20 25 30 30

[outputs]
universe -1050 1050
NL -1050 -1050 -875 -700
NM -875 -525 -175
NS -350 -175 0
Z -175 0 175
PS 0 175 350
PM 175 525 875
PL 700 875 1050 1050
";

    fn sample() -> (MembershipSet<f64>, MembershipSet<f64>) {
        parse_families(SAMPLE).expect("sample parses")
    }

    #[test]
    fn triangle_grades() {
        let (inp, _) = sample();
        let z = inp.function(FuzzyLabel::Z);
        assert_eq!(z.grade(0.0), 1.0);
        assert_eq!(z.grade(-5.0), 0.0);
        assert_eq!(z.grade(5.0), 0.0);
        assert!((z.grade(2.5) - 0.5).abs() < 1e-15);
        assert_eq!(z.grade(100.0), 0.0);
    }

    #[test]
    fn shoulder_grades() {
        let (inp, _) = sample();
        let nl = inp.function(FuzzyLabel::NL);
        assert_eq!(nl.grade(-30.0), 1.0);
        assert_eq!(nl.grade(-25.0), 1.0);
        assert!((nl.grade(-22.5) - 0.5).abs() < 1e-15);
        assert_eq!(nl.grade(-20.0), 0.0);
    }

    #[test]
    fn fuzzify_orders_by_label() {
        let (inp, _) = sample();
        let g = inp.fuzzify(-2.5);
        assert!((g[FuzzyLabel::NS.index()] - 0.5).abs() < 1e-15);
        assert!((g[FuzzyLabel::Z.index()] - 0.5).abs() < 1e-15);
        assert_eq!(g[FuzzyLabel::PL.index()], 0.0);
    }

    #[test]
    fn edge_abscissas() {
        let (inp, _) = sample();
        let z = inp.function(FuzzyLabel::Z);
        assert_eq!(z.rising_at(0.5), -2.5);
        assert_eq!(z.falling_at(0.5), 2.5);
        let nl = inp.function(FuzzyLabel::NL);
        assert_eq!(nl.rising_at(0.25), -30.0);
    }

    #[test]
    fn rejects_missing_label() {
        let text = SAMPLE.replace("PM 5 15 25\n", "");
        let err = parse_families::<f64>(&text).unwrap_err();
        assert!(err.to_string().contains("PM is missing"));
    }

    #[test]
    fn rejects_coverage_gap() {
        let text = SAMPLE
            .replace("NS -10 -5 0", "NS -10 -5 -1")
            .replace("Z -5 0 5", "Z -0.5 0 0.5")
            .replace("PS 0 5 10", "PS 1 5 10");
        let err = parse_families::<f64>(&text).unwrap_err();
        assert!(err.to_string().contains("gap between"));
    }

    #[test]
    fn rejects_asymmetric_family() {
        let text = SAMPLE.replace("PS 0 5 10", "PS 0 6 10");
        let err = parse_families::<f64>(&text).unwrap_err();
        assert!(err.to_string().contains("mirror"));
    }

    #[test]
    fn rejects_unlabeled_prefix_and_bad_counts() {
        assert!(parse_families::<f64>("universe -1 1").is_err());
        let text = SAMPLE.replace("Z -5 0 5", "Z -5 0");
        assert!(parse_families::<f64>(&text).is_err());
    }
}
