//! TOML descriptions of simulation runs.
//!
//! A scenario file has four parts, all optional except `[run]`:
//!
//! ```toml
//! [craft]               # physical overrides; anything omitted uses the
//! mass = 16.751         # documented default craft
//!
//! [controller]
//! kind = "fuzzy"        # or "pid"
//! memberships = "tuned" # or "default"; which built-in input family
//!
//! [controller.pid]      # gains when kind = "pid"
//! kp = 6.0
//!
//! [run]
//! duration = 10.0       # seconds
//!
//! [[disturbance]]
//! kind = "error_step"   # or "torque_pulse"
//! start = 0.5
//! pitch_error_deg = -3.2
//! roll_error_deg = 1.7
//! ```
//!
//! This module is the I/O boundary, so it works in `f64` and hands out the
//! core types; unknown keys are rejected to catch typos early.

use serde::Deserialize;

use super::dynamics::{CraftParams, GRAVITY};
use super::pid::PidGains;
use super::scenario::{ControllerKind, DisturbanceEvent, Scenario};
use super::SimError;
use crate::fuzzy::FuzzyEngine;
use crate::units::rpm_to_rad_per_sec;

/// Built-in demo: a persistent −3.2°/+1.7° reference step at t = 0.5 s,
/// flown by the tuned fuzzy controller.
pub const DEFAULT_SCENARIO_TOML: &str = include_str!("../../data/scenario_step.toml");

/// Parsed scenario file.
#[derive(Debug, Clone, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct ScenarioConfig {
    #[serde(default)]
    pub craft: CraftSection,
    #[serde(default)]
    pub controller: ControllerSection,
    pub run: RunSection,
    #[serde(default, rename = "disturbance")]
    pub disturbances: Vec<DisturbanceSection>,
}

#[derive(Debug, Clone, Copy, Deserialize, PartialEq)]
#[serde(default, deny_unknown_fields)]
pub struct CraftSection {
    pub mass: f64,
    pub arm_length: f64,
    pub inertia_roll: f64,
    pub inertia_pitch: f64,
    /// Rotor speed carrying the craft, rpm.
    pub hover_rpm: f64,
    /// Controller authority: speed headroom above/below hover, rpm.
    pub max_delta_rpm: f64,
    /// Rotor speed slew limit, rad/s².
    pub slew_limit: f64,
    /// Rotational damping, N·m·s/rad.
    pub rot_damping: f64,
    /// Thrust coefficient override; derived from the hover balance
    /// m·g = 8·k·w² when absent.
    pub lift_constant: Option<f64>,
    /// Physics step, s.
    pub dt: f64,
    /// Controller period, s.
    pub control_dt: f64,
}

impl Default for CraftSection {
    fn default() -> Self {
        let d = CraftParams::<f64>::default_craft();
        CraftSection {
            mass: d.mass,
            arm_length: d.arm_length,
            inertia_roll: d.inertia_roll,
            inertia_pitch: d.inertia_pitch,
            hover_rpm: 3000.0,
            max_delta_rpm: 1050.0,
            slew_limit: d.slew_limit,
            rot_damping: d.rot_damping,
            lift_constant: None,
            dt: d.dt,
            control_dt: d.control_dt,
        }
    }
}

#[derive(Debug, Clone, Copy, Deserialize, PartialEq, Eq, Default)]
#[serde(rename_all = "lowercase")]
pub enum ControllerChoice {
    #[default]
    Fuzzy,
    Pid,
}

#[derive(Debug, Clone, Copy, Deserialize, PartialEq, Eq, Default)]
#[serde(rename_all = "lowercase")]
pub enum MembershipChoice {
    Default,
    #[default]
    Tuned,
}

#[derive(Debug, Clone, Copy, Deserialize, PartialEq, Default)]
#[serde(default, deny_unknown_fields)]
pub struct ControllerSection {
    pub kind: ControllerChoice,
    pub memberships: MembershipChoice,
    pub pid: Option<PidSection>,
}

#[derive(Debug, Clone, Copy, Deserialize, PartialEq)]
#[serde(default, deny_unknown_fields)]
pub struct PidSection {
    pub kp: f64,
    pub ki: f64,
    pub kd: f64,
    pub integral_limit: f64,
}

impl Default for PidSection {
    fn default() -> Self {
        let g = PidGains::<f64>::default_baseline();
        PidSection {
            kp: g.kp,
            ki: g.ki,
            kd: g.kd,
            integral_limit: g.integral_limit,
        }
    }
}

#[derive(Debug, Clone, Copy, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct RunSection {
    /// Simulated time, s.
    pub duration: f64,
}

#[derive(Debug, Clone, Copy, Deserialize, PartialEq)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum DisturbanceSection {
    ErrorStep {
        start: f64,
        #[serde(default)]
        duration: Option<f64>,
        #[serde(default)]
        pitch_error_deg: f64,
        #[serde(default)]
        roll_error_deg: f64,
    },
    TorquePulse {
        start: f64,
        duration: f64,
        #[serde(default)]
        tau_roll: f64,
        #[serde(default)]
        tau_pitch: f64,
    },
}

impl ScenarioConfig {
    /// Parses and validates a scenario file.
    pub fn from_toml_str(text: &str) -> Result<Self, SimError> {
        let cfg: ScenarioConfig =
            toml::from_str(text).map_err(|e| SimError::Parse(e.to_string()))?;
        cfg.craft_params().validate()?;
        cfg.scenario().validate()?;
        if let ControllerChoice::Pid = cfg.controller.kind {
            cfg.pid_gains().validate()?;
        }
        Ok(cfg)
    }

    pub fn scenario(&self) -> Scenario<f64> {
        let disturbances = self
            .disturbances
            .iter()
            .map(|d| match *d {
                DisturbanceSection::ErrorStep {
                    start,
                    duration,
                    pitch_error_deg,
                    roll_error_deg,
                } => DisturbanceEvent::ErrorStep {
                    start,
                    duration,
                    delta_theta_deg: pitch_error_deg,
                    delta_phi_deg: roll_error_deg,
                },
                DisturbanceSection::TorquePulse {
                    start,
                    duration,
                    tau_roll,
                    tau_pitch,
                } => DisturbanceEvent::TorquePulse {
                    start,
                    duration,
                    tau_roll,
                    tau_pitch,
                },
            })
            .collect();
        Scenario {
            duration: self.run.duration,
            disturbances,
        }
    }

    pub fn craft_params(&self) -> CraftParams<f64> {
        let c = &self.craft;
        let hover_speed = rpm_to_rad_per_sec(c.hover_rpm);
        let lift_constant = c
            .lift_constant
            .unwrap_or(c.mass * GRAVITY / (8.0 * hover_speed * hover_speed));
        CraftParams {
            mass: c.mass,
            inertia_roll: c.inertia_roll,
            inertia_pitch: c.inertia_pitch,
            lift_constant,
            arm_length: c.arm_length,
            slew_limit: c.slew_limit,
            hover_speed,
            max_speed: hover_speed + rpm_to_rad_per_sec(c.max_delta_rpm),
            rot_damping: c.rot_damping,
            dt: c.dt,
            control_dt: c.control_dt,
        }
    }

    pub fn pid_gains(&self) -> PidGains<f64> {
        let p = self.controller.pid.unwrap_or_default();
        PidGains {
            kp: p.kp,
            ki: p.ki,
            kd: p.kd,
            integral_limit: p.integral_limit,
        }
    }

    /// Builds the configured controller from the built-in rule and
    /// membership data.
    pub fn controller(&self) -> Result<ControllerKind<f64>, SimError> {
        match self.controller.kind {
            ControllerChoice::Pid => Ok(ControllerKind::Pid(self.pid_gains())),
            ControllerChoice::Fuzzy => {
                let engine = match self.controller.memberships {
                    MembershipChoice::Default => FuzzyEngine::default_config(),
                    MembershipChoice::Tuned => FuzzyEngine::tuned_config(),
                };
                Ok(ControllerKind::Fuzzy(engine))
            }
        }
    }
}

impl Default for ScenarioConfig {
    fn default() -> Self {
        ScenarioConfig::from_toml_str(DEFAULT_SCENARIO_TOML)
            .expect("built-in scenario file is valid")
    }
}
