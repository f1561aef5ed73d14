//! Rotor channel naming for the eight-rotor airframe.
//!
//! Rotors sit on four arms; each arm carries a right-hand (`R`) and a
//! left-hand (`L`) unit. Channels are listed in the fixed order
//! `1R, 1L, 2R, 2L, 3R, 3L, 4R, 4L` everywhere an 8-element array appears.

use std::fmt;
use std::str::FromStr;

/// One of the eight rotor channels, in canonical array order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RotorChannel {
    W1R,
    W1L,
    W2R,
    W2L,
    W3R,
    W3L,
    W4R,
    W4L,
}

pub const CHANNEL_COUNT: usize = 8;

/// All channels in canonical order.
pub const CHANNELS: [RotorChannel; CHANNEL_COUNT] = [
    RotorChannel::W1R,
    RotorChannel::W1L,
    RotorChannel::W2R,
    RotorChannel::W2L,
    RotorChannel::W3R,
    RotorChannel::W3L,
    RotorChannel::W4R,
    RotorChannel::W4L,
];

impl RotorChannel {
    /// Index of this channel in canonical array order.
    #[inline]
    pub fn index(self) -> usize {
        self as usize
    }

    /// The rotor mounted on the diametrically opposite arm with the same
    /// handedness: arm 1 faces arm 3 and arm 2 faces arm 4.
    pub fn opposite(self) -> RotorChannel {
        use RotorChannel::*;
        match self {
            W1R => W3R,
            W1L => W3L,
            W2R => W4R,
            W2L => W4L,
            W3R => W1R,
            W3L => W1L,
            W4R => W2R,
            W4L => W2L,
        }
    }

    /// The rotor on the same arm with the other handedness: 1R maps to 1L
    /// and so on. This is the channel swap under a left-right reflection of
    /// the airframe.
    pub fn mirrored(self) -> RotorChannel {
        use RotorChannel::*;
        match self {
            W1R => W1L,
            W1L => W1R,
            W2R => W2L,
            W2L => W2R,
            W3R => W3L,
            W3L => W3R,
            W4R => W4L,
            W4L => W4R,
        }
    }

    /// The channel this rotor lands on under a reflection across the
    /// forward axis (y → −y): azimuths negate, so 1R↔1L and 3R↔3L swap in
    /// place while arm 2 trades places with arm 4 (2R↔4L, 2L↔4R). The
    /// airframe is geometrically symmetric under this reflection, which
    /// makes it the channel permutation that accompanies a roll-sign flip.
    pub fn reflected(self) -> RotorChannel {
        use RotorChannel::*;
        match self {
            W1R => W1L,
            W1L => W1R,
            W2R => W4L,
            W2L => W4R,
            W3R => W3L,
            W3L => W3R,
            W4R => W2L,
            W4L => W2R,
        }
    }

    /// Short channel name, e.g. `"1R"`.
    pub fn name(self) -> &'static str {
        use RotorChannel::*;
        match self {
            W1R => "1R",
            W1L => "1L",
            W2R => "2R",
            W2L => "2L",
            W3R => "3R",
            W3L => "3L",
            W4R => "4R",
            W4L => "4L",
        }
    }
}

impl fmt::Display for RotorChannel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for RotorChannel {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        CHANNELS
            .iter()
            .copied()
            .find(|c| c.name() == s)
            .ok_or_else(|| format!("unknown rotor channel `{s}`"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn indices_follow_declaration_order() {
        for (i, c) in CHANNELS.iter().enumerate() {
            assert_eq!(c.index(), i);
        }
    }

    #[test]
    fn opposite_is_an_involution() {
        for c in CHANNELS {
            assert_ne!(c.opposite(), c);
            assert_eq!(c.opposite().opposite(), c);
        }
    }

    #[test]
    fn mirrored_swaps_handedness_on_the_same_arm() {
        for c in CHANNELS {
            let m = c.mirrored();
            assert_ne!(m, c);
            assert_eq!(m.mirrored(), c);
            // Same arm digit, different handedness letter.
            assert_eq!(m.name().as_bytes()[0], c.name().as_bytes()[0]);
            assert_ne!(m.name().as_bytes()[1], c.name().as_bytes()[1]);
        }
    }

    #[test]
    fn reflected_is_an_involution_matching_the_azimuth_flip() {
        let expected_indices = [1, 0, 7, 6, 5, 4, 3, 2];
        for (c, &want) in CHANNELS.iter().zip(&expected_indices) {
            assert_eq!(c.reflected().index(), want);
            assert_eq!(c.reflected().reflected(), *c);
            // Handedness always flips under a reflection.
            assert_ne!(c.reflected().name().as_bytes()[1], c.name().as_bytes()[1]);
        }
    }

    #[test]
    fn names_round_trip() {
        for c in CHANNELS {
            assert_eq!(c.name().parse::<RotorChannel>().unwrap(), c);
        }
        assert!("5R".parse::<RotorChannel>().is_err());
    }
}
