//! `sidewalker rules` — structural validation of a rotor rule table.

use std::path::PathBuf;

use clap::Args;
use sidewalker_core::fuzzy::{FuzzyError, RuleTable, DEFAULT_RULES};

use crate::errors::CliError;
use crate::inputs::read_input_text;

#[derive(Args)]
pub struct RulesArgs {
    /// Rule table file to validate; the embedded table when omitted.
    #[arg(long)]
    pub file: Option<PathBuf>,
}

pub fn run(args: &RulesArgs, verbose: bool) -> Result<(), CliError> {
    let (label, text) = match &args.file {
        Some(path) => {
            let (resolved, text) = read_input_text(path)?;
            (resolved.display().to_string(), text)
        }
        None => ("embedded rule table".to_string(), DEFAULT_RULES.to_string()),
    };
    if verbose {
        eprintln!("validating {label}");
    }

    // Count attempted rule lines up front so an invalid file still reports
    // how much of it parsed (an empty file reads "0 rules").
    let attempted = text
        .lines()
        .filter(|l| !l.split('#').next().unwrap_or("").trim().is_empty())
        .count();

    match RuleTable::parse(&text) {
        Ok(table) => {
            println!(
                "{} rules, 7x7 coverage, antisymmetry OK",
                table.rows().len()
            );
            Ok(())
        }
        Err(FuzzyError::Rules(problems)) => {
            println!("{attempted} rules parsed; {} problem(s):", problems.len());
            for p in &problems {
                println!("  - {p}");
            }
            Err(CliError::Validation(format!(
                "{label}: rule table invalid ({} problem(s))",
                problems.len()
            )))
        }
        Err(other) => Err(CliError::Validation(other.to_string())),
    }
}
