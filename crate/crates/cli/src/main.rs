//! `sidewalker` — one binary for the service-drone toolbox.
//!
//! Subcommands: `rules` (validate a rotor rule table), `simulate` (closed
//! loop disturbance runs), `harvester` (induction harvester model),
//! `inspect` (sidewalk block decisions for one image), `synth` (synthetic
//! corpus generator), `hopfield` (recall one ternary triple).
//!
//! Every subcommand that writes files also writes a run manifest.
//! Exit codes: 0 success, 1 runtime failure, 2 usage/config error,
//! 3 validation failure.

mod commands;
mod errors;
mod inputs;
mod manifest;

use std::process::ExitCode;

use clap::{Parser, Subcommand};

use commands::{harvester, hopfield, inspect, rules, simulate, synth};

#[derive(Parser)]
#[command(
    name = "sidewalker",
    version,
    about = "Attitude control, energy harvesting, and sidewalk inspection tools",
    propagate_version = true
)]
struct Cli {
    /// Print progress details to stderr.
    #[arg(short, long, global = true)]
    verbose: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a rotor rule table (the embedded one by default)
    Rules(rules::RulesArgs),
    /// Run a closed-loop disturbance scenario and write its trace
    Simulate(simulate::SimulateArgs),
    /// Evaluate the energy-harvester model and write a turns sweep
    Harvester(harvester::HarvesterArgs),
    /// Decide repaint actions for the blocks in one PGM image
    Inspect(inspect::InspectArgs),
    /// Generate the seeded synthetic sidewalk corpus
    Synth(synth::SynthArgs),
    /// Recall one ternary triple through the block memory
    Hopfield(hopfield::HopfieldArgs),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Rules(args) => rules::run(args, cli.verbose),
        Command::Simulate(args) => simulate::run(args, cli.verbose),
        Command::Harvester(args) => harvester::run(args, cli.verbose),
        Command::Inspect(args) => inspect::run(args, cli.verbose),
        Command::Synth(args) => synth::run(args, cli.verbose),
        Command::Hopfield(args) => hopfield::run(args, cli.verbose),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            err.exit_code()
        }
    }
}
