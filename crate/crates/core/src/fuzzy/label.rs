//! The seven linguistic labels used for both error inputs and rotor-speed
//! outputs: negative large through positive large.

use std::fmt;
use std::str::FromStr;

/// Linguistic label of a fuzzy set, ordered from most negative to most
/// positive.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FuzzyLabel {
    /// Negative large.
    NL,
    /// Negative medium.
    NM,
    /// Negative small.
    NS,
    /// Zero.
    Z,
    /// Positive small.
    PS,
    /// Positive medium.
    PM,
    /// Positive large.
    PL,
}

pub const LABEL_COUNT: usize = 7;

/// All labels in ascending order.
pub const LABELS: [FuzzyLabel; LABEL_COUNT] = [
    FuzzyLabel::NL,
    FuzzyLabel::NM,
    FuzzyLabel::NS,
    FuzzyLabel::Z,
    FuzzyLabel::PS,
    FuzzyLabel::PM,
    FuzzyLabel::PL,
];

impl FuzzyLabel {
    /// Index in ascending order: NL is 0, PL is 6.
    #[inline]
    pub fn index(self) -> usize {
        self as usize
    }

    /// The label of opposite sign: NL maps to PL, NS to PS, Z to itself.
    pub fn negated(self) -> FuzzyLabel {
        LABELS[LABEL_COUNT - 1 - self.index()]
    }

    pub fn name(self) -> &'static str {
        use FuzzyLabel::*;
        match self {
            NL => "NL",
            NM => "NM",
            NS => "NS",
            Z => "Z",
            PS => "PS",
            PM => "PM",
            PL => "PL",
        }
    }
}

impl fmt::Display for FuzzyLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FuzzyLabel {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        LABELS
            .iter()
            .copied()
            .find(|l| l.name() == s)
            .ok_or_else(|| format!("unknown label `{s}`"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ordering_is_ascending() {
        for pair in LABELS.windows(2) {
            assert!(pair[0] < pair[1]);
        }
    }

    #[test]
    fn negation_is_an_involution_fixing_zero() {
        for l in LABELS {
            assert_eq!(l.negated().negated(), l);
        }
        assert_eq!(FuzzyLabel::Z.negated(), FuzzyLabel::Z);
        assert_eq!(FuzzyLabel::NL.negated(), FuzzyLabel::PL);
        assert_eq!(FuzzyLabel::NM.negated(), FuzzyLabel::PM);
        assert_eq!(FuzzyLabel::NS.negated(), FuzzyLabel::PS);
    }

    #[test]
    fn parse_round_trips() {
        for l in LABELS {
            assert_eq!(l.name().parse::<FuzzyLabel>().unwrap(), l);
        }
        assert!("XL".parse::<FuzzyLabel>().is_err());
    }
}
