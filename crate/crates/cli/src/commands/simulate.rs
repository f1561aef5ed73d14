//! `sidewalker simulate` — closed-loop disturbance runs.
//!
//! Reads a scenario file (craft parameters, controller choice,
//! disturbances, horizon), runs the loop, and writes `trace.csv` (one row
//! per controller tick), `settle.csv` (the run summary), and
//! `manifest.toml` into the output directory.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, ValueEnum};
use sidewalker_core::fuzzy::{
    ErrorInput, FuzzyEngine, DEFAULT_MEMBERSHIPS, DEFAULT_RULES, TUNED_MEMBERSHIPS,
};
use sidewalker_core::rotor::CHANNELS;
use sidewalker_core::sim::config::{ControllerChoice, MembershipChoice};
use sidewalker_core::sim::{
    run_scenario, ControllerKind, RotorLayout, RunResult, ScenarioConfig, SimError,
    DEFAULT_SCENARIO_TOML,
};

use crate::errors::CliError;
use crate::inputs::read_input_text;
use crate::manifest::{Manifest, ProbeRecord};

/// Standard demo error used for the recorded controller probe, degrees.
const PROBE_PITCH_DEG: f64 = -3.2;
const PROBE_ROLL_DEG: f64 = 1.7;

#[derive(Args)]
pub struct SimulateArgs {
    /// Scenario file; the embedded demo step scenario when omitted.
    #[arg(long)]
    pub scenario: Option<PathBuf>,
    /// Override the scenario's controller choice.
    #[arg(long, value_enum)]
    pub controller: Option<ControllerArg>,
    /// Membership family file overriding the scenario's embedded choice
    /// (fuzzy controller only).
    #[arg(long)]
    pub memberships: Option<PathBuf>,
    /// Rule table file overriding the embedded one (fuzzy controller only).
    #[arg(long)]
    pub rules: Option<PathBuf>,
    /// Output directory (created if missing).
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum ControllerArg {
    Fuzzy,
    Pid,
}

fn config_error(err: SimError) -> CliError {
    CliError::Usage(err.to_string())
}

pub fn run(args: &SimulateArgs, verbose: bool) -> Result<(), CliError> {
    let mut manifest = Manifest::new("simulate");

    // Fail-fast load: every referenced file is read and parsed before any
    // simulation work starts.
    let (scenario_label, scenario_text) = match &args.scenario {
        Some(path) => {
            let (resolved, text) = read_input_text(path)?;
            (resolved.display().to_string(), text)
        }
        None => (
            "embedded:demo-scenario".to_string(),
            DEFAULT_SCENARIO_TOML.to_string(),
        ),
    };
    manifest.input(scenario_label.clone(), scenario_text.as_bytes());

    let config = ScenarioConfig::from_toml_str(&scenario_text).map_err(config_error)?;
    let choice = match args.controller {
        Some(ControllerArg::Fuzzy) => ControllerChoice::Fuzzy,
        Some(ControllerArg::Pid) => ControllerChoice::Pid,
        None => config.controller.kind,
    };
    if choice == ControllerChoice::Pid && (args.memberships.is_some() || args.rules.is_some()) {
        return Err(CliError::Usage(
            "--memberships/--rules override the fuzzy controller; \
             the resolved controller is pid"
                .to_string(),
        ));
    }

    let controller = match choice {
        ControllerChoice::Pid => {
            manifest.setting("controller", "pid");
            let gains = config.pid_gains();
            manifest.setting(
                "pid_gains",
                format!(
                    "kp={} ki={} kd={} integral_limit={}",
                    gains.kp, gains.ki, gains.kd, gains.integral_limit
                ),
            );
            ControllerKind::Pid(gains)
        }
        ControllerChoice::Fuzzy => {
            manifest.setting("controller", "fuzzy");
            let (mf_label, mf_text) = match &args.memberships {
                Some(path) => {
                    let (resolved, text) = read_input_text(path)?;
                    (resolved.display().to_string(), text)
                }
                None => match config.controller.memberships {
                    MembershipChoice::Default => (
                        "embedded:memberships-default".to_string(),
                        DEFAULT_MEMBERSHIPS.to_string(),
                    ),
                    MembershipChoice::Tuned => (
                        "embedded:memberships-tuned".to_string(),
                        TUNED_MEMBERSHIPS.to_string(),
                    ),
                },
            };
            let (rules_label, rules_text) = match &args.rules {
                Some(path) => {
                    let (resolved, text) = read_input_text(path)?;
                    (resolved.display().to_string(), text)
                }
                None => ("embedded:rules".to_string(), DEFAULT_RULES.to_string()),
            };
            manifest.input(mf_label, mf_text.as_bytes());
            manifest.input(rules_label, rules_text.as_bytes());
            let engine = FuzzyEngine::<f64>::from_texts(&mf_text, &rules_text)
                .map_err(|e| CliError::Usage(e.to_string()))?;
            ControllerKind::Fuzzy(engine)
        }
    };

    let scenario = config.scenario();
    let params = config.craft_params();
    let layout = RotorLayout::umbrella(params.arm_length);
    if verbose {
        eprintln!(
            "running {} for {} s from {scenario_label}",
            controller.name(),
            scenario.duration
        );
    }

    let result = run_scenario(&controller, &scenario, &params, &layout).map_err(|e| match e {
        SimError::Config(_) | SimError::Parse(_) => CliError::Usage(e.to_string()),
        other => CliError::Runtime(other.to_string()),
    })?;

    if let ControllerKind::Fuzzy(engine) = &controller {
        let out = engine
            .infer(ErrorInput::new(PROBE_PITCH_DEG, PROBE_ROLL_DEG))
            .map_err(|e| CliError::Runtime(e.to_string()))?;
        manifest.set_probe(ProbeRecord {
            pitch_error_deg: PROBE_PITCH_DEG,
            roll_error_deg: PROBE_ROLL_DEG,
            delta_rpm: out.rpm.to_vec(),
        });
    }

    std::fs::create_dir_all(&args.out)
        .map_err(|e| CliError::Runtime(format!("creating {}: {e}", args.out.display())))?;
    manifest.write_output(&args.out.join("trace.csv"), trace_csv(&result).as_bytes())?;
    manifest.write_output(&args.out.join("settle.csv"), settle_csv(&result).as_bytes())?;
    manifest.write(&args.out.join("manifest.toml"))?;

    match result.report.settle_time {
        Some(t) => println!(
            "{} settled in {t:.3} s (peak errors {:.3} deg pitch, {:.3} deg roll)",
            result.report.controller,
            result.report.peak_pitch_error_deg,
            result.report.peak_roll_error_deg
        ),
        None => println!(
            "{} did not settle within {} s",
            result.report.controller, scenario.duration
        ),
    }
    Ok(())
}

/// One row per controller tick: time, attitude, rates, the eight rotor
/// speeds (rad/s), and the eight commanded speed changes (rpm).
fn trace_csv(result: &RunResult<f64>) -> String {
    let mut csv = String::from("t,theta,phi,p,q");
    for c in CHANNELS {
        write!(csv, ",w{c}").unwrap();
    }
    for c in CHANNELS {
        write!(csv, ",dW{c}").unwrap();
    }
    csv.push('\n');
    for row in &result.trace {
        write!(
            csv,
            "{},{},{},{},{}",
            row.t, row.pitch_deg, row.roll_deg, row.roll_rate_deg, row.pitch_rate_deg
        )
        .unwrap();
        for v in row.speeds {
            write!(csv, ",{v}").unwrap();
        }
        for v in row.command_rpm {
            write!(csv, ",{v}").unwrap();
        }
        csv.push('\n');
    }
    csv
}

fn settle_csv(result: &RunResult<f64>) -> String {
    let r = &result.report;
    let settle = r.settle_time.map(|t| t.to_string()).unwrap_or_default();
    format!(
        "controller,settle_time_s,peak_pitch_error_deg,peak_roll_error_deg,\
         final_pitch_error_deg,final_roll_error_deg\n{},{settle},{},{},{},{}\n",
        r.controller,
        r.peak_pitch_error_deg,
        r.peak_roll_error_deg,
        r.final_pitch_error_deg,
        r.final_roll_error_deg
    )
}
