//! Closed-loop attitude simulation of the eight-rotor craft.
//!
//! The craft is modelled as a rigid body free to roll and pitch about its
//! centre of mass while translation and yaw are held. Rotors sit at 45°
//! spacing on four arms, each arm carrying a clockwise/counter-clockwise
//! pair, so equal speeds produce exactly zero net torque. A controller
//! (either the fuzzy engine from [`crate::fuzzy`] or the PID baseline)
//! observes the attitude errors at a fixed control rate and commands
//! per-rotor speed offsets; the plant integrates at a finer step with a
//! slew limit on how fast rotor speeds can chase their targets.
//!
//! [`scenario`] describes disturbance profiles and runs complete
//! experiments, producing a time trace and a settling-time report.
//! [`config`] loads scenario descriptions from TOML.

pub mod config;
pub mod dynamics;
pub mod layout;
pub mod pid;
pub mod scenario;

pub use config::{ScenarioConfig, DEFAULT_SCENARIO_TOML};
pub use dynamics::{AttitudeState, CraftParams};
pub use layout::{RotorGeometry, RotorLayout};
pub use pid::{PidController, PidGains};
pub use scenario::{
    run_scenario, ControllerKind, DisturbanceEvent, RunResult, Scenario, SettleReport, TraceRow,
};

/// Errors from building or running a simulation.
#[derive(Debug, thiserror::Error)]
pub enum SimError {
    /// A parameter or scenario failed validation before the run started.
    #[error("configuration error: {0}")]
    Config(String),
    /// The state left the finite/physical envelope mid-run.
    #[error("numerical failure: {0}")]
    Numerical(String),
    /// A scenario file could not be read as TOML.
    #[error("scenario parse error: {0}")]
    Parse(String),
    /// The controller faulted during the run.
    #[error("controller error: {0}")]
    Controller(#[from] crate::fuzzy::FuzzyError),
}
