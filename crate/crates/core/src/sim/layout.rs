//! Rotor placement on the eight-arm umbrella airframe.
//!
//! Axes: x forward, y left, z up. Azimuths are measured from +x toward +y
//! (counter-clockwise seen from above). The four arm directions are
//! front/left/back/right; each carries a right- and a left-handed rotor
//! offset ±22.5° from the arm axis:
//!
//! ```text
//!   1R -22.5°   1L +22.5°   (front,  straddling +x)
//!   2R +67.5°   2L +112.5°  (left,   straddling +y)
//!   3R +157.5°  3L +202.5°  (back,   straddling -x)
//!   4R +247.5°  4L +292.5°  (right,  straddling -y)
//! ```
//!
//! The sines/cosines of all eight azimuths are ±sin(22.5°) and ±cos(22.5°);
//! they are stored from one pair of evaluations so that diametrically
//! opposite rotors carry bit-exact negated coefficients and symmetric
//! layouts cancel torques exactly.

use crate::real::{real, Real};
use crate::rotor::{RotorChannel, CHANNEL_COUNT};

/// Placement and handedness of one rotor.
#[derive(Debug, Clone, Copy)]
pub struct RotorGeometry<R: Real> {
    pub channel: RotorChannel,
    /// sin of the azimuth (moment arm fraction about the x/roll axis).
    pub sin_az: R,
    /// cos of the azimuth (moment arm fraction about the y/pitch axis).
    pub cos_az: R,
    /// Blade rotation direction, +1 counter-clockwise / −1 clockwise seen
    /// from above. Alternates around the ring to cancel drag torque; kept
    /// as metadata since the two modeled axes don't consume it.
    pub spin: i8,
}

/// The full eight-rotor layout.
#[derive(Debug, Clone, Copy)]
pub struct RotorLayout<R: Real> {
    rotors: [RotorGeometry<R>; CHANNEL_COUNT],
    /// Distance from the hub to each rotor axis, meters.
    pub arm_length: R,
}

impl<R: Real> RotorLayout<R> {
    /// Standard umbrella layout with the given arm length.
    pub fn umbrella(arm_length: R) -> Self {
        let eighth = real::<R>(std::f64::consts::PI / 8.0);
        let s = eighth.sin();
        let c = eighth.cos();
        use RotorChannel::*;
        let table = [
            (W1R, -s, c),
            (W1L, s, c),
            (W2R, c, s),
            (W2L, c, -s),
            (W3R, s, -c),
            (W3L, -s, -c),
            (W4R, -c, -s),
            (W4L, -c, s),
        ];
        let rotors = table.map(|(channel, sin_az, cos_az)| RotorGeometry {
            channel,
            sin_az,
            cos_az,
            spin: if channel.name().ends_with('R') { -1 } else { 1 },
        });
        RotorLayout { rotors, arm_length }
    }

    pub fn rotors(&self) -> &[RotorGeometry<R>; CHANNEL_COUNT] {
        &self.rotors
    }

    pub fn rotor(&self, channel: RotorChannel) -> &RotorGeometry<R> {
        &self.rotors[channel.index()]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rotor::CHANNELS;

    #[test]
    fn channels_are_stored_in_canonical_order() {
        let layout = RotorLayout::<f64>::umbrella(0.6);
        for (i, r) in layout.rotors().iter().enumerate() {
            assert_eq!(r.channel.index(), i);
        }
    }

    #[test]
    fn azimuths_match_the_documented_angles() {
        let layout = RotorLayout::<f64>::umbrella(0.6);
        let expected_deg = [-22.5, 22.5, 67.5, 112.5, 157.5, 202.5, 247.5, 292.5];
        for (r, deg) in layout.rotors().iter().zip(expected_deg) {
            let az = deg * std::f64::consts::PI / 180.0;
            assert!((r.sin_az - az.sin()).abs() < 1e-15, "{} sin", r.channel);
            assert!((r.cos_az - az.cos()).abs() < 1e-15, "{} cos", r.channel);
        }
    }

    #[test]
    fn opposite_rotors_have_bit_exact_negated_coefficients() {
        let layout = RotorLayout::<f64>::umbrella(0.6);
        for c in CHANNELS {
            let a = layout.rotor(c);
            let b = layout.rotor(c.opposite());
            assert_eq!(a.sin_az, -b.sin_az);
            assert_eq!(a.cos_az, -b.cos_az);
        }
    }

    #[test]
    fn reflected_rotors_flip_sin_and_keep_cos_bit_exactly() {
        // The geometric content of RotorChannel::reflected: under y → −y
        // the azimuth negates, so the roll arm (sin) flips sign while the
        // pitch arm (cos) is unchanged — exactly, not just approximately,
        // because all coefficients come from one sin/cos evaluation pair.
        let layout = RotorLayout::<f64>::umbrella(0.6);
        for c in CHANNELS {
            let a = layout.rotor(c);
            let b = layout.rotor(c.reflected());
            assert_eq!(a.sin_az, -b.sin_az, "{c}");
            assert_eq!(a.cos_az, b.cos_az, "{c}");
        }
    }

    #[test]
    fn spin_directions_alternate() {
        let layout = RotorLayout::<f64>::umbrella(0.6);
        let total: i32 = layout.rotors().iter().map(|r| r.spin as i32).sum();
        assert_eq!(total, 0);
    }
}
