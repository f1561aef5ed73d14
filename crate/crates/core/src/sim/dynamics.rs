//! Two-axis rigid-body dynamics of the craft.
//!
//! Only roll and pitch are integrated; yaw is held at zero and translation
//! is ignored, since the controller under study consumes exactly the two
//! attitude errors. Sign conventions (x forward, y left, z up):
//!
//! * roll φ about +x: positive raises the left side;
//! * pitch θ about +y: positive lowers the nose;
//! * roll torque τx = Σ fᵢ·L·sin(azᵢ) — thrust on the left side (sin > 0)
//!   rolls positive;
//! * pitch torque τy = −Σ fᵢ·L·cos(azᵢ) — thrust on the front (cos > 0)
//!   raises the nose, i.e. drives θ negative.

use super::layout::RotorLayout;
use super::SimError;
use crate::real::{clamp, real, Real};
use crate::rotor::{CHANNELS, CHANNEL_COUNT};
use crate::units::rpm_to_rad_per_sec;

/// Physical constants of the craft and the integrator steps.
#[derive(Debug, Clone, Copy)]
pub struct CraftParams<R: Real> {
    /// Total takeoff mass, kg.
    pub mass: R,
    /// Moment of inertia about the roll axis, kg·m².
    pub inertia_roll: R,
    /// Moment of inertia about the pitch axis, kg·m².
    pub inertia_pitch: R,
    /// Thrust coefficient k in f = k·w², N·s²/rad².
    pub lift_constant: R,
    /// Hub-to-rotor distance, m.
    pub arm_length: R,
    /// Maximum change rate of each rotor speed, rad/s².
    pub slew_limit: R,
    /// Rotor speed at which eight rotors exactly carry the mass, rad/s.
    pub hover_speed: R,
    /// Hard ceiling on rotor speed, rad/s.
    pub max_speed: R,
    /// Rotational damping torque coefficient about each axis, N·m·s/rad.
    /// Models the aerodynamic resistance of the spinning rotor disks to
    /// body rotation; without it the rigid body would oscillate forever.
    pub rot_damping: R,
    /// Physics integration step, s.
    pub dt: R,
    /// Controller period, s.
    pub control_dt: R,
}

pub const GRAVITY: f64 = 9.81;

impl<R: Real> CraftParams<R> {
    /// Documented default craft: 16.751 kg total mass on 0.6 m arms,
    /// hovering at 100π rad/s (3000 rpm). The lift constant comes from the
    /// hover balance 8·k·w² = m·g; the inertias treat the eight rotor pods
    /// as point masses on the arm circle plus a compact central body.
    pub fn default_craft() -> Self {
        let mass = real::<R>(16.751);
        let hover_speed = real::<R>(100.0 * std::f64::consts::PI);
        let arm_length = real::<R>(0.6);
        let eight = real::<R>(8.0);
        let lift_constant = mass * real::<R>(GRAVITY) / (eight * hover_speed * hover_speed);
        CraftParams {
            mass,
            inertia_roll: real::<R>(1.6),
            inertia_pitch: real::<R>(1.6),
            lift_constant,
            arm_length,
            slew_limit: real::<R>(12.0),
            hover_speed,
            max_speed: hover_speed + rpm_to_rad_per_sec(real::<R>(1050.0)),
            rot_damping: real::<R>(14.0),
            dt: real::<R>(1e-3),
            control_dt: real::<R>(1e-2),
        }
    }

    /// Checks that every parameter is strictly positive and the steps are
    /// compatible (control period a positive multiple of the physics step).
    pub fn validate(&self) -> Result<(), SimError> {
        let fields: [(&str, R); 11] = [
            ("mass", self.mass),
            ("inertia_roll", self.inertia_roll),
            ("inertia_pitch", self.inertia_pitch),
            ("lift_constant", self.lift_constant),
            ("arm_length", self.arm_length),
            ("slew_limit", self.slew_limit),
            ("hover_speed", self.hover_speed),
            ("max_speed", self.max_speed),
            ("rot_damping", self.rot_damping),
            ("dt", self.dt),
            ("control_dt", self.control_dt),
        ];
        for (name, v) in fields {
            if v <= R::zero() || !v.is_finite() {
                return Err(SimError::Config(format!(
                    "craft parameter {name} must be strictly positive, got {v}"
                )));
            }
        }
        if self.max_speed <= self.hover_speed {
            return Err(SimError::Config(
                "max_speed must exceed hover_speed".to_string(),
            ));
        }
        let ratio = self.control_dt / self.dt;
        let rounded = ratio.round();
        if (ratio - rounded).abs() > real::<R>(1e-9) || rounded < R::one() {
            return Err(SimError::Config(format!(
                "control_dt must be a positive whole multiple of dt (ratio {ratio})"
            )));
        }
        Ok(())
    }

    /// Physics sub-steps per controller tick — see `validate`.
    pub fn substeps(&self) -> usize {
        (self.control_dt / self.dt)
            .round()
            .to_f64()
            .map(|x| x as usize)
            .unwrap_or(1)
    }
}

/// Full integrator state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AttitudeState<R: Real> {
    /// Simulation time, s.
    pub t: R,
    /// Roll angle φ, rad.
    pub roll: R,
    /// Pitch angle θ, rad.
    pub pitch: R,
    /// Yaw angle ψ, rad (held at 0 — no yaw channel).
    pub yaw: R,
    /// Roll rate p, rad/s.
    pub p: R,
    /// Pitch rate q, rad/s.
    pub q: R,
    /// Yaw rate r, rad/s (held at 0).
    pub r: R,
    /// Rotor speeds in canonical channel order, rad/s.
    pub speeds: [R; CHANNEL_COUNT],
}

impl<R: Real> AttitudeState<R> {
    /// Level craft at rest with all rotors at hover speed.
    pub fn hover(params: &CraftParams<R>) -> Self {
        AttitudeState {
            t: R::zero(),
            roll: R::zero(),
            pitch: R::zero(),
            yaw: R::zero(),
            p: R::zero(),
            q: R::zero(),
            r: R::zero(),
            speeds: [params.hover_speed; CHANNEL_COUNT],
        }
    }

    fn check_finite(&self) -> Result<(), SimError> {
        let all = [self.t, self.roll, self.pitch, self.p, self.q];
        if all.iter().all(|v| v.is_finite()) && self.speeds.iter().all(|v| v.is_finite()) {
            Ok(())
        } else {
            Err(SimError::Numerical(format!(
                "non-finite state at t={}: roll={}, pitch={}, p={}, q={}",
                self.t, self.roll, self.pitch, self.p, self.q
            )))
        }
    }
}

/// Thrust of one rotor: f = k·w².
pub fn rotor_thrust<R: Real>(w: R, lift_constant: R) -> Result<R, SimError> {
    if w < R::zero() {
        return Err(SimError::Config(format!(
            "rotor speed must be non-negative, got {w}"
        )));
    }
    Ok(lift_constant * w * w)
}

/// Roll and pitch torques produced by the current rotor speeds.
///
/// Summed pairwise over diametrically opposite rotors, so equal speeds
/// cancel bit-exactly. Returns `(tau_roll, tau_pitch)` in the conventions
/// of the module docs (positive roll torque lifts the left side; positive
/// pitch torque lowers the nose).
pub fn body_torques<R: Real>(
    state: &AttitudeState<R>,
    layout: &RotorLayout<R>,
    lift_constant: R,
) -> (R, R) {
    let arm = layout.arm_length;
    let mut tau_roll = R::zero();
    let mut tau_pitch = R::zero();
    // The first four channels are one rotor from each opposite pair.
    for c in &CHANNELS[..CHANNEL_COUNT / 2] {
        let geom = layout.rotor(*c);
        let w_a = state.speeds[c.index()];
        let w_b = state.speeds[c.opposite().index()];
        let df = lift_constant * (w_a * w_a - w_b * w_b);
        tau_roll = tau_roll + arm * geom.sin_az * df;
        tau_pitch = tau_pitch - arm * geom.cos_az * df;
    }
    (tau_roll, tau_pitch)
}

/// Advances the state by one physics step of `params.dt`.
///
/// Rotor speeds slew toward `hover + commanded delta` at no more than
/// `slew_limit·dt` per step and are clamped to `[0, max_speed]`; the two
/// rotational axes integrate with semi-implicit Euler. `external_torque`
/// is `(about roll, about pitch)` in N·m.
pub fn step<R: Real>(
    state: &AttitudeState<R>,
    commanded_delta_rpm: &[R; CHANNEL_COUNT],
    external_torque: (R, R),
    params: &CraftParams<R>,
    layout: &RotorLayout<R>,
) -> Result<AttitudeState<R>, SimError> {
    state.check_finite()?;
    let dt = params.dt;
    let max_dw = params.slew_limit * dt;

    let mut next = *state;
    for (speed, &cmd) in next.speeds.iter_mut().zip(commanded_delta_rpm.iter()) {
        let target = clamp(
            params.hover_speed + rpm_to_rad_per_sec(cmd),
            R::zero(),
            params.max_speed,
        );
        let dw = clamp(target - *speed, -max_dw, max_dw);
        *speed = *speed + dw;
    }

    let (tau_roll, tau_pitch) = body_torques(&next, layout, params.lift_constant);
    let roll_acc =
        (tau_roll - params.rot_damping * next.p + external_torque.0) / params.inertia_roll;
    let pitch_acc =
        (tau_pitch - params.rot_damping * next.q + external_torque.1) / params.inertia_pitch;

    next.p = next.p + roll_acc * dt;
    next.q = next.q + pitch_acc * dt;
    next.roll = next.roll + next.p * dt;
    next.pitch = next.pitch + next.q * dt;
    next.t = next.t + dt;
    next.check_finite()?;
    Ok(next)
}
