//! `sidewalker harvester` — induction harvester model evaluation.
//!
//! Writes a turns-sweep CSV (`turns,voltage_v`) to `--out`, prints the
//! electrical summary and the geometric consistency report, and writes a
//! `<out>.manifest.toml` next to the CSV.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::Args;
use sidewalker_core::harvester::{
    coil_resistance, consistency_report, induced_voltage, sweep_turns, HarvesterConfig,
    TARGET_POWER_DENSITY,
};

use crate::errors::CliError;
use crate::inputs::read_input_text;
use crate::manifest::Manifest;

#[derive(Args)]
pub struct HarvesterArgs {
    /// Coil/field spec file; built-in 40000-turn coil when omitted.
    #[arg(long)]
    pub spec: Option<PathBuf>,
    /// Turns sweep as start:end:step (inclusive ends).
    #[arg(long, default_value = "0:40000:500")]
    pub sweep: String,
    /// Output CSV path.
    #[arg(long)]
    pub out: PathBuf,
}

fn parse_sweep(text: &str) -> Result<(u32, u32, u32), CliError> {
    let parts: Vec<&str> = text.split(':').collect();
    let usage = || {
        CliError::Usage(format!(
            "--sweep must be start:end:step with start <= end and step > 0, got `{text}`"
        ))
    };
    if parts.len() != 3 {
        return Err(usage());
    }
    let nums: Vec<u32> = parts
        .iter()
        .map(|p| p.trim().parse::<u32>())
        .collect::<Result<_, _>>()
        .map_err(|_| usage())?;
    let (start, end, step) = (nums[0], nums[1], nums[2]);
    if start > end || step == 0 {
        return Err(usage());
    }
    Ok((start, end, step))
}

pub fn run(args: &HarvesterArgs, verbose: bool) -> Result<(), CliError> {
    let mut manifest = Manifest::new("harvester");
    let (spec_label, spec_text) = match &args.spec {
        Some(path) => {
            let (resolved, text) = read_input_text(path)?;
            (resolved.display().to_string(), text)
        }
        None => ("embedded:default-coil".to_string(), String::new()),
    };
    manifest.input(spec_label, spec_text.as_bytes());
    manifest.setting("sweep", &args.sweep);

    let config =
        HarvesterConfig::from_toml_str(&spec_text).map_err(|e| CliError::Usage(e.to_string()))?;
    let spec = config.spec();
    let env = config.environment();
    spec.validate()
        .map_err(|e| CliError::Usage(e.to_string()))?;

    let (start, end, step) = parse_sweep(&args.sweep)?;
    let points = sweep_turns(&spec, &env, (start..=end).step_by(step as usize))
        .map_err(|e| CliError::Usage(e.to_string()))?;
    if verbose {
        eprintln!("sweep {} points for turns {start}..={end}", points.len());
    }

    let mut csv = String::from("turns,voltage_v\n");
    for (n, v) in &points {
        writeln!(csv, "{n},{v}").unwrap();
    }
    manifest.write_output(&args.out, csv.as_bytes())?;

    let manifest_path = args.out.with_file_name(format!(
        "{}.manifest.toml",
        args.out
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_else(|| "harvester".to_string())
    ));
    manifest.write(&manifest_path)?;

    println!(
        "induced voltage {:.6} V, coil resistance {:.3} ohm at {} turns",
        induced_voltage(&spec, &env),
        coil_resistance(&spec),
        spec.turns
    );
    let report = consistency_report(&spec, &env, TARGET_POWER_DENSITY)
        .map_err(|e| CliError::Usage(e.to_string()))?;
    print!("{report}");
    Ok(())
}
