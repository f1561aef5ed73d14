//! Per-axis PID baseline controller with geometric rotor mixing.
//!
//! Each axis runs an independent PID on its attitude error (degrees). The
//! two axis commands, in rpm-scale units, map onto the eight rotors by the
//! transpose of the torque geometry:
//!
//! ```text
//! delta_i = u_roll·sin(az_i) − u_pitch·cos(az_i)
//! ```
//!
//! so a positive roll command speeds up the left side and a positive pitch
//! command speeds up the back — the same sign conventions the plant's
//! torque sums use. Because sin/cos negate across opposite rotors, the
//! deltas inherit the opposite-rotor antisymmetry of the fuzzy table by
//! construction, and the symmetric ±1050 rpm clamp preserves it.

use super::layout::RotorLayout;
use crate::fuzzy::{ErrorInput, RotorDeltaOutput};
use crate::real::{clamp, real, Real};
use crate::rotor::CHANNEL_COUNT;

/// Gains shared by both axes. Units: output is rpm, error input degrees.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PidGains<R: Real> {
    /// Proportional gain, rpm per degree.
    pub kp: R,
    /// Integral gain, rpm per degree-second.
    pub ki: R,
    /// Derivative gain on the measured rate, rpm per degree/second.
    pub kd: R,
    /// Anti-windup clamp on the integral term's contribution, rpm.
    pub integral_limit: R,
}

impl<R: Real> PidGains<R> {
    /// Frozen default tuning for the comparison baseline: proportional
    /// dominated with a gentle trim integrator, so the step response
    /// settles essentially without overshoot at the default craft's
    /// inertia and slew limit.
    pub fn default_baseline() -> Self {
        PidGains {
            kp: real(6.0),
            ki: real(0.05),
            kd: real(0.45),
            integral_limit: real(300.0),
        }
    }

    pub fn validate(&self) -> Result<(), super::SimError> {
        for (name, v) in [
            ("kp", self.kp),
            ("ki", self.ki),
            ("kd", self.kd),
            ("integral_limit", self.integral_limit),
        ] {
            if !v.is_finite() || v < R::zero() {
                return Err(super::SimError::Config(format!(
                    "PID gain {name} must be finite and non-negative, got {v}"
                )));
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy)]
struct AxisState<R: Real> {
    integral: R,
}

impl<R: Real> Default for PidController<R> {
    fn default() -> Self {
        PidController::new(PidGains::default_baseline())
    }
}

/// Stateful two-axis PID.
#[derive(Debug, Clone)]
pub struct PidController<R: Real> {
    gains: PidGains<R>,
    roll: AxisState<R>,
    pitch: AxisState<R>,
}

impl<R: Real> PidController<R> {
    pub fn new(gains: PidGains<R>) -> Self {
        PidController {
            gains,
            roll: AxisState {
                integral: R::zero(),
            },
            pitch: AxisState {
                integral: R::zero(),
            },
        }
    }

    pub fn gains(&self) -> &PidGains<R> {
        &self.gains
    }

    /// Resets the integral state.
    pub fn reset(&mut self) {
        self.roll.integral = R::zero();
        self.pitch.integral = R::zero();
    }

    fn axis(gains: &PidGains<R>, axis: &mut AxisState<R>, error_deg: R, rate_deg: R, dt: R) -> R {
        axis.integral = axis.integral + error_deg * dt;
        if gains.ki > R::zero() {
            let cap = gains.integral_limit / gains.ki;
            axis.integral = clamp(axis.integral, -cap, cap);
        }
        // Derivative acts on the measurement (the rate), not on the error
        // difference, so reference steps don't kick the output.
        gains.kp * error_deg + gains.ki * axis.integral - gains.kd * rate_deg
    }

    /// One controller tick. `rates_deg` is `(roll rate, pitch rate)` in
    /// degrees per second; `dt` the controller period in seconds.
    pub fn control(
        &mut self,
        e: ErrorInput<R>,
        rates_deg: (R, R),
        dt: R,
        layout: &RotorLayout<R>,
    ) -> RotorDeltaOutput<R> {
        let u_roll = Self::axis(&self.gains, &mut self.roll, e.delta_phi(), rates_deg.0, dt);
        let u_pitch = Self::axis(
            &self.gains,
            &mut self.pitch,
            e.delta_theta(),
            rates_deg.1,
            dt,
        );
        let lim = real::<R>(1050.0);
        let mut rpm = [R::zero(); CHANNEL_COUNT];
        for (i, geom) in layout.rotors().iter().enumerate() {
            rpm[i] = clamp(u_roll * geom.sin_az - u_pitch * geom.cos_az, -lim, lim);
        }
        RotorDeltaOutput { rpm }
    }
}
