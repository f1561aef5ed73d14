//! Unit conversions shared by the controller and the simulator.

use crate::real::{real, Real};

/// Converts rotor speed from revolutions per minute to radians per second.
#[inline]
pub fn rpm_to_rad_per_sec<R: Real>(x: R) -> R {
    x * real::<R>(std::f64::consts::TAU / 60.0)
}

/// Converts rotor speed from radians per second to revolutions per minute.
#[inline]
pub fn rad_per_sec_to_rpm<R: Real>(x: R) -> R {
    x * real::<R>(60.0 / std::f64::consts::TAU)
}

/// Degrees to radians.
#[inline]
pub fn deg_to_rad<R: Real>(x: R) -> R {
    x * real::<R>(std::f64::consts::PI / 180.0)
}

/// Radians to degrees.
#[inline]
pub fn rad_to_deg<R: Real>(x: R) -> R {
    x * real::<R>(180.0 / std::f64::consts::PI)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rpm_conversion_reference_points() {
        assert!((rpm_to_rad_per_sec(120.0f64) - 12.566370614359172).abs() < 1e-12);
        assert_eq!(rpm_to_rad_per_sec(0.0f64), 0.0);
        assert!((rpm_to_rad_per_sec(-1050.0f64) + 109.95574287564276).abs() < 1e-12);
    }

    #[test]
    fn conversions_round_trip() {
        for &x in &[-1050.0f64, -3.25, 0.0, 17.5, 1050.0] {
            assert!((rad_per_sec_to_rpm(rpm_to_rad_per_sec(x)) - x).abs() < 1e-9);
            assert!((rad_to_deg(deg_to_rad(x)) - x).abs() < 1e-9);
        }
    }
}
