//! End-to-end inference: attitude errors in, eight rotor-speed changes out.

use super::defuzz::{centroid, Clipped};
use super::membership::MembershipSet;
use super::rules::RuleTable;
use super::FuzzyError;
use crate::real::{clamp, real, Real};
use crate::rotor::CHANNEL_COUNT;
use crate::units::rpm_to_rad_per_sec;

/// Pitch and roll errors in degrees, clamped to the ±30° universe.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ErrorInput<R: Real> {
    delta_theta: R,
    delta_phi: R,
}

impl<R: Real> ErrorInput<R> {
    /// Builds an input, saturating each error at ±30°.
    ///
    /// Panics on non-finite values: errors come from integrator state, and
    /// a NaN here means the simulation itself has already failed.
    pub fn new(delta_theta: R, delta_phi: R) -> Self {
        assert!(
            delta_theta.is_finite() && delta_phi.is_finite(),
            "attitude errors must be finite, got ({delta_theta}, {delta_phi})"
        );
        let lim = real::<R>(30.0);
        ErrorInput {
            delta_theta: clamp(delta_theta, -lim, lim),
            delta_phi: clamp(delta_phi, -lim, lim),
        }
    }

    /// Pitch error in degrees.
    pub fn delta_theta(&self) -> R {
        self.delta_theta
    }

    /// Roll error in degrees.
    pub fn delta_phi(&self) -> R {
        self.delta_phi
    }
}

/// Speed changes for the eight rotors in canonical channel order.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RotorDeltaOutput<R: Real> {
    /// Changes in revolutions per minute, each within ±1050.
    pub rpm: [R; CHANNEL_COUNT],
}

impl<R: Real> RotorDeltaOutput<R> {
    /// The same changes converted to radians per second.
    pub fn rad_per_sec(&self) -> [R; CHANNEL_COUNT] {
        self.rpm.map(rpm_to_rad_per_sec)
    }
}

/// A complete controller: membership families plus the rule table.
#[derive(Debug, Clone)]
pub struct FuzzyEngine<R: Real> {
    inputs: MembershipSet<R>,
    outputs: MembershipSet<R>,
    table: RuleTable,
}

/// Shipped rule table covering all 49 antecedent pairs.
pub const DEFAULT_RULES: &str = include_str!("../../data/attitude_default.rules");
/// Evenly spaced membership families over ±30° in and ±1050 rpm out.
pub const DEFAULT_MEMBERSHIPS: &str = include_str!("../../data/memberships_default.mf");
/// Membership variant with narrowed central sets, tuned so small attitude
/// errors produce a stronger, asymmetric per-rotor response. Used by the
/// step-disturbance demo scenario.
pub const TUNED_MEMBERSHIPS: &str = include_str!("../../data/memberships_tuned.mf");

impl<R: Real> FuzzyEngine<R> {
    pub fn new(inputs: MembershipSet<R>, outputs: MembershipSet<R>, table: RuleTable) -> Self {
        FuzzyEngine {
            inputs,
            outputs,
            table,
        }
    }

    /// Parses membership and rule text into an engine.
    pub fn from_texts(memberships: &str, rules: &str) -> Result<Self, FuzzyError> {
        let (inputs, outputs) = super::membership::parse_families(memberships)?;
        let table = RuleTable::parse(rules)?;
        Ok(FuzzyEngine::new(inputs, outputs, table))
    }

    /// Engine with the shipped evenly spaced membership families.
    pub fn default_config() -> Self {
        Self::from_texts(DEFAULT_MEMBERSHIPS, DEFAULT_RULES)
            .expect("embedded default configuration is valid")
    }

    /// Engine with the tuned membership variant.
    pub fn tuned_config() -> Self {
        Self::from_texts(TUNED_MEMBERSHIPS, DEFAULT_RULES)
            .expect("embedded tuned configuration is valid")
    }

    pub fn inputs(&self) -> &MembershipSet<R> {
        &self.inputs
    }

    pub fn outputs(&self) -> &MembershipSet<R> {
        &self.outputs
    }

    pub fn table(&self) -> &RuleTable {
        &self.table
    }

    /// Runs the full pipeline: fuzzify both errors, fire every rule at the
    /// min of its antecedent grades, clip each rule's per-rotor consequent
    /// at that strength, aggregate per rotor by max, and take the centroid
    /// of each rotor's aggregate over the output universe.
    pub fn infer(&self, e: ErrorInput<R>) -> Result<RotorDeltaOutput<R>, FuzzyError> {
        let (lo, hi) = self.inputs.universe();
        let gt = self.inputs.fuzzify(clamp(e.delta_theta, lo, hi));
        let gp = self.inputs.fuzzify(clamp(e.delta_phi, lo, hi));

        let mut per_channel: [Vec<Clipped<R>>; CHANNEL_COUNT] = Default::default();
        for row in self.table.rows() {
            let strength = gt[row.theta.index()].min(gp[row.phi.index()]);
            if strength > R::zero() {
                for (ch, labels) in row.out.iter().enumerate() {
                    per_channel[ch].push(Clipped {
                        function: *self.outputs.function(*labels),
                        strength,
                    });
                }
            }
        }

        let universe = self.outputs.universe();
        let mut rpm = [R::zero(); CHANNEL_COUNT];
        for (ch, clipped) in per_channel.iter().enumerate() {
            rpm[ch] = centroid(universe, clipped).ok_or_else(|| {
                FuzzyError::Membership(format!(
                    "internal invariant failure: no rule fired for input ({}, {})",
                    e.delta_theta, e.delta_phi
                ))
            })?;
        }
        Ok(RotorDeltaOutput { rpm })
    }
}
