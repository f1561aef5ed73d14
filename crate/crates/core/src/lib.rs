//! Core library for an eight-rotor sidewalk-service drone:
//!
//! * [`fuzzy`] — Mamdani fuzzy-logic attitude stabilizer producing per-rotor
//!   speed corrections from pitch/roll errors.
//! * [`sim`] — a two-axis rigid-body attitude simulator with both the fuzzy
//!   controller and a PID baseline, used to compare disturbance recovery.
//! * [`harvester`] — electrical model of the induction energy harvester that
//!   scavenges power from rotor-frame vibration.
//! * [`vision`] — the sidewalk-inspection pipeline: filtering, orientation
//!   feature extraction, lane segmentation, and a small Hopfield associative
//!   memory that classifies painted guidance blocks.
//!
//! All numeric kernels are generic over [`real::Real`] (`f32` or `f64`);
//! the aliases below fix the precision used by the shipped tools.

pub mod fuzzy;
pub mod harvester;
pub mod real;
pub mod rotor;
pub mod sim;
pub mod units;
pub mod vision;

/// Scalar precision used by the command-line tools.
pub type Scalar = f64;

/// Fuzzy inference engine at shipping precision.
pub type Engine = fuzzy::FuzzyEngine<Scalar>;
/// Membership family at shipping precision.
pub type MembershipSet = fuzzy::MembershipSet<Scalar>;
