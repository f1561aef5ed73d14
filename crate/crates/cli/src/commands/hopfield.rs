//! `sidewalker hopfield` — recall one ternary triple through the block
//! memory (the two stored alternation patterns). Prints the outcome; no
//! files are written.

use clap::Args;
use sidewalker_core::vision::{HopfieldError, HopfieldNet};

use crate::errors::CliError;

#[derive(Args)]
pub struct HopfieldArgs {
    /// Comma-separated triple with entries in {-1, 0, 1}, e.g. "0,-1,1".
    #[arg(long)]
    pub input: String,
}

fn parse_triple(text: &str) -> Result<[i8; 3], CliError> {
    let usage = || {
        CliError::Usage(format!(
            "--input must be three comma-separated values from {{-1, 0, 1}}, got `{text}`"
        ))
    };
    let values: Vec<i8> = text
        .split(',')
        .map(|p| p.trim().parse::<i8>())
        .collect::<Result<_, _>>()
        .map_err(|_| usage())?;
    if values.len() != 3 || values.iter().any(|v| !(-1..=1).contains(v)) {
        return Err(usage());
    }
    Ok([values[0], values[1], values[2]])
}

fn fmt_state(s: [i8; 3]) -> String {
    format!("[{}, {}, {}]", s[0], s[1], s[2])
}

pub fn run(args: &HopfieldArgs, verbose: bool) -> Result<(), CliError> {
    let input = parse_triple(&args.input)?;
    let net = HopfieldNet::alternation();
    if verbose {
        eprintln!(
            "recalling {} against {} stored memories",
            fmt_state(input),
            net.memories().len()
        );
    }
    match net.recall(input) {
        Ok(result) => {
            let plural = if result.sweeps == 1 { "" } else { "s" };
            match result.matched {
                Some(index) => {
                    println!("memory matched in {} sweep{plural}", result.sweeps);
                    println!(
                        "input {} -> memory {} {}",
                        fmt_state(input),
                        index,
                        fmt_state(result.final_state)
                    );
                }
                None => {
                    println!(
                        "no memory matched: stable at {} after {} sweep{plural} \
                         — flag for review",
                        fmt_state(result.final_state),
                        result.sweeps
                    );
                }
            }
            Ok(())
        }
        Err(HopfieldError::NonConvergent { states }) => {
            println!(
                "did not stabilize within {} sweeps — flag for review",
                states.len().saturating_sub(1)
            );
            Ok(())
        }
        Err(other) => Err(CliError::Usage(other.to_string())),
    }
}
