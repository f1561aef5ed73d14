//! Disturbance scenarios, the closed-loop runner, and settling measurement.

use super::dynamics::{step, AttitudeState, CraftParams};
use super::layout::RotorLayout;
use super::pid::{PidController, PidGains};
use super::SimError;
use crate::fuzzy::{ErrorInput, FuzzyEngine};
use crate::real::{real, Real};
use crate::rotor::CHANNEL_COUNT;
use crate::units::rad_to_deg;

/// A single disturbance applied during a run.
///
/// Events may overlap; their effects add.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum DisturbanceEvent<R: Real> {
    /// Step the attitude reference so the controller suddenly sees the
    /// given errors. `duration: None` holds the new reference for the rest
    /// of the run; `Some(d)` returns it to level after `d` seconds.
    ErrorStep {
        start: R,
        duration: Option<R>,
        delta_theta_deg: R,
        delta_phi_deg: R,
    },
    /// External body torque (N·m) applied over `[start, start + duration)`.
    TorquePulse {
        start: R,
        duration: R,
        tau_roll: R,
        tau_pitch: R,
    },
}

impl<R: Real> DisturbanceEvent<R> {
    fn validate(&self, i: usize) -> Result<(), SimError> {
        let bad = |msg: String| Err(SimError::Config(format!("disturbance {i}: {msg}")));
        match *self {
            DisturbanceEvent::ErrorStep {
                start,
                duration,
                delta_theta_deg,
                delta_phi_deg,
            } => {
                if !start.is_finite() || start < R::zero() {
                    return bad(format!("start must be >= 0, got {start}"));
                }
                if let Some(d) = duration {
                    if !d.is_finite() || d <= R::zero() {
                        return bad(format!("duration must be > 0, got {d}"));
                    }
                }
                let lim = real::<R>(30.0);
                for (name, v) in [("pitch", delta_theta_deg), ("roll", delta_phi_deg)] {
                    if !v.is_finite() || v.abs() > lim {
                        return bad(format!("{name} error step must be within ±30°, got {v}"));
                    }
                }
            }
            DisturbanceEvent::TorquePulse {
                start,
                duration,
                tau_roll,
                tau_pitch,
            } => {
                if !start.is_finite() || start < R::zero() {
                    return bad(format!("start must be >= 0, got {start}"));
                }
                if !duration.is_finite() || duration <= R::zero() {
                    return bad(format!("duration must be > 0, got {duration}"));
                }
                if !tau_roll.is_finite() || !tau_pitch.is_finite() {
                    return bad("torque components must be finite".to_string());
                }
            }
        }
        Ok(())
    }

    /// The instant settling is measured from: a persistent reference step
    /// begins a transient at its start, everything else at its end.
    fn reference_instant(&self) -> R {
        match *self {
            DisturbanceEvent::ErrorStep {
                start,
                duration: None,
                ..
            } => start,
            DisturbanceEvent::ErrorStep {
                start,
                duration: Some(d),
                ..
            } => start + d,
            DisturbanceEvent::TorquePulse {
                start, duration, ..
            } => start + duration,
        }
    }
}

/// A disturbance profile plus the run horizon.
#[derive(Debug, Clone, PartialEq)]
pub struct Scenario<R: Real> {
    /// Total simulated time, s.
    pub duration: R,
    pub disturbances: Vec<DisturbanceEvent<R>>,
}

impl<R: Real> Scenario<R> {
    pub fn validate(&self) -> Result<(), SimError> {
        if !self.duration.is_finite() || self.duration <= R::zero() {
            return Err(SimError::Config(format!(
                "scenario duration must be > 0, got {}",
                self.duration
            )));
        }
        for (i, ev) in self.disturbances.iter().enumerate() {
            ev.validate(i)?;
        }
        Ok(())
    }

    /// Attitude reference `(pitch°, roll°)` at time `t`.
    pub fn reference_at(&self, t: R) -> (R, R) {
        let mut theta = R::zero();
        let mut phi = R::zero();
        for ev in &self.disturbances {
            if let DisturbanceEvent::ErrorStep {
                start,
                duration,
                delta_theta_deg,
                delta_phi_deg,
            } = *ev
            {
                let active = t >= start
                    && match duration {
                        None => true,
                        Some(d) => t < start + d,
                    };
                if active {
                    theta = theta + delta_theta_deg;
                    phi = phi + delta_phi_deg;
                }
            }
        }
        (theta, phi)
    }

    /// External body torque `(roll, pitch)` in N·m at time `t`.
    pub fn external_torque_at(&self, t: R) -> (R, R) {
        let mut roll = R::zero();
        let mut pitch = R::zero();
        for ev in &self.disturbances {
            if let DisturbanceEvent::TorquePulse {
                start,
                duration,
                tau_roll,
                tau_pitch,
            } = *ev
            {
                if t >= start && t < start + duration {
                    roll = roll + tau_roll;
                    pitch = pitch + tau_pitch;
                }
            }
        }
        (roll, pitch)
    }

    /// Time the settling clock starts from: the latest reference instant of
    /// any disturbance, or 0 for an undisturbed run.
    pub fn settle_reference_time(&self) -> R {
        self.disturbances
            .iter()
            .map(DisturbanceEvent::reference_instant)
            .fold(R::zero(), R::max)
    }
}

/// Which controller closes the loop.
///
/// The fuzzy variant carries its engine inline; a run holds exactly one
/// controller, so the size imbalance against the bare PID gains is harmless.
#[allow(clippy::large_enum_variant)]
#[derive(Debug, Clone)]
pub enum ControllerKind<R: Real> {
    Fuzzy(FuzzyEngine<R>),
    Pid(PidGains<R>),
}

impl<R: Real> ControllerKind<R> {
    pub fn name(&self) -> &'static str {
        match self {
            ControllerKind::Fuzzy(_) => "fuzzy",
            ControllerKind::Pid(_) => "pid",
        }
    }
}

/// One sample per controller tick.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TraceRow<R: Real> {
    /// Sample time, s.
    pub t: R,
    /// Pitch angle θ, degrees.
    pub pitch_deg: R,
    /// Roll angle φ, degrees.
    pub roll_deg: R,
    /// Roll rate p, degrees/s.
    pub roll_rate_deg: R,
    /// Pitch rate q, degrees/s.
    pub pitch_rate_deg: R,
    /// Pitch error seen by the controller at this tick, degrees.
    pub pitch_error_deg: R,
    /// Roll error seen by the controller at this tick, degrees.
    pub roll_error_deg: R,
    /// Rotor speeds, rad/s, canonical channel order.
    pub speeds: [R; CHANNEL_COUNT],
    /// Speed offsets commanded at this tick, rpm.
    pub command_rpm: [R; CHANNEL_COUNT],
}

/// Summary of one closed-loop run.
#[derive(Debug, Clone, PartialEq)]
pub struct SettleReport<R: Real> {
    /// Controller that produced the run.
    pub controller: String,
    /// Seconds from the settling reference instant until both attitude
    /// errors stay inside ±0.05° for 200 ms; `None` if that never happens
    /// within the horizon.
    pub settle_time: Option<R>,
    /// Largest |pitch error| seen at any tick, degrees.
    pub peak_pitch_error_deg: R,
    /// Largest |roll error| seen at any tick, degrees.
    pub peak_roll_error_deg: R,
    /// Errors at the final tick, degrees.
    pub final_pitch_error_deg: R,
    pub final_roll_error_deg: R,
}

/// Full output of [`run_scenario`].
#[derive(Debug, Clone, PartialEq)]
pub struct RunResult<R: Real> {
    pub report: SettleReport<R>,
    pub trace: Vec<TraceRow<R>>,
}

/// Attitude errors the controller sees: reference minus measured angle,
/// in degrees.
fn errors_at<R: Real>(scenario: &Scenario<R>, state: &AttitudeState<R>) -> (R, R) {
    let (ref_theta, ref_phi) = scenario.reference_at(state.t);
    (
        ref_theta - rad_to_deg(state.pitch),
        ref_phi - rad_to_deg(state.roll),
    )
}

/// Run a scenario from level hover and measure settling.
pub fn run_scenario<R: Real>(
    controller: &ControllerKind<R>,
    scenario: &Scenario<R>,
    params: &CraftParams<R>,
    layout: &RotorLayout<R>,
) -> Result<RunResult<R>, SimError> {
    params.validate()?;
    scenario.validate()?;

    let mut pid = match controller {
        ControllerKind::Pid(gains) => {
            gains.validate()?;
            Some(PidController::new(*gains))
        }
        ControllerKind::Fuzzy(_) => None,
    };

    let substeps = params.substeps();
    let ticks = (scenario.duration / params.control_dt)
        .ceil()
        .to_usize()
        .ok_or_else(|| SimError::Config("scenario horizon overflows tick count".into()))?;

    let mut state = AttitudeState::hover(params);
    let mut trace = Vec::with_capacity(ticks + 1);

    for _ in 0..=ticks {
        let (e_theta, e_phi) = errors_at(scenario, &state);
        let input = ErrorInput::new(e_theta, e_phi);
        let cmd = match (controller, pid.as_mut()) {
            (ControllerKind::Fuzzy(engine), _) => engine.infer(input)?,
            (ControllerKind::Pid(_), Some(pid)) => {
                let rates = (rad_to_deg(state.p), rad_to_deg(state.q));
                pid.control(input, rates, params.control_dt, layout)
            }
            _ => unreachable!(),
        };

        trace.push(TraceRow {
            t: state.t,
            pitch_deg: rad_to_deg(state.pitch),
            roll_deg: rad_to_deg(state.roll),
            roll_rate_deg: rad_to_deg(state.p),
            pitch_rate_deg: rad_to_deg(state.q),
            pitch_error_deg: e_theta,
            roll_error_deg: e_phi,
            speeds: state.speeds,
            command_rpm: cmd.rpm,
        });

        for _ in 0..substeps {
            let torque = scenario.external_torque_at(state.t);
            state = step(&state, &cmd.rpm, torque, params, layout)?;
        }
    }

    let report = measure_settling(controller.name(), scenario, params, &trace);
    Ok(RunResult { report, trace })
}

/// Settling tolerance, degrees.
const SETTLE_BAND_DEG: f64 = 0.05;
/// How long both errors must stay inside the band, seconds.
const SETTLE_HOLD_S: f64 = 0.2;

fn measure_settling<R: Real>(
    controller: &str,
    scenario: &Scenario<R>,
    params: &CraftParams<R>,
    trace: &[TraceRow<R>],
) -> SettleReport<R> {
    let band = real::<R>(SETTLE_BAND_DEG);
    let hold_ticks = (real::<R>(SETTLE_HOLD_S) / params.control_dt)
        .round()
        .to_usize()
        .unwrap_or(usize::MAX);
    let t_ref = scenario.settle_reference_time();

    let inside =
        |row: &TraceRow<R>| row.pitch_error_deg.abs() < band && row.roll_error_deg.abs() < band;

    let mut settle_time = None;
    for (i, row) in trace.iter().enumerate() {
        if row.t < t_ref || i + hold_ticks >= trace.len() {
            continue;
        }
        if trace[i..=i + hold_ticks].iter().all(inside) {
            settle_time = Some(row.t - t_ref);
            break;
        }
    }

    let peak = |f: fn(&TraceRow<R>) -> R| trace.iter().map(|r| f(r).abs()).fold(R::zero(), R::max);
    let last = trace.last().expect("trace has at least one row");

    SettleReport {
        controller: controller.to_string(),
        settle_time,
        peak_pitch_error_deg: peak(|r| r.pitch_error_deg),
        peak_roll_error_deg: peak(|r| r.roll_error_deg),
        final_pitch_error_deg: last.pitch_error_deg,
        final_roll_error_deg: last.roll_error_deg,
    }
}
