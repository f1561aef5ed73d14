//! `sidewalker synth` — seeded synthetic sidewalk corpus.
//!
//! Writes `img_NNNN.pgm` files, a `ground_truth.csv`
//! (`image,block_index,erased,expected_color`), and `manifest.toml` into
//! the output directory. The same spec and seed reproduce every byte.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::Args;
use sidewalker_core::vision::{generate_synthetic, SynthSpec};

use crate::errors::CliError;
use crate::inputs::read_input_text;
use crate::manifest::Manifest;

#[derive(Args)]
pub struct SynthArgs {
    /// Corpus spec file; built-in 200-image corpus when omitted.
    #[arg(long)]
    pub spec: Option<PathBuf>,
    /// Override the spec's random seed.
    #[arg(long)]
    pub seed: Option<u64>,
    /// Output directory (created if missing).
    #[arg(long)]
    pub out: PathBuf,
}

pub fn run(args: &SynthArgs, verbose: bool) -> Result<(), CliError> {
    let mut manifest = Manifest::new("synth");
    let (spec_label, spec_text) = match &args.spec {
        Some(path) => {
            let (resolved, text) = read_input_text(path)?;
            (resolved.display().to_string(), text)
        }
        None => ("embedded:default-corpus".to_string(), String::new()),
    };
    manifest.input(spec_label, spec_text.as_bytes());

    let mut spec =
        SynthSpec::from_toml_str(&spec_text).map_err(|e| CliError::Usage(e.to_string()))?;
    if let Some(seed) = args.seed {
        spec.seed = seed;
    }
    manifest.setting("seed", spec.seed);
    manifest.setting("count", spec.count);

    let corpus = generate_synthetic(&spec).map_err(|e| CliError::Usage(e.to_string()))?;
    std::fs::create_dir_all(&args.out)
        .map_err(|e| CliError::Runtime(format!("creating {}: {e}", args.out.display())))?;

    let mut truth = String::from("image,block_index,erased,expected_color\n");
    for item in &corpus {
        let path = args.out.join(format!("{}.pgm", item.name));
        manifest.write_output(&path, &item.image.to_pgm_binary())?;
        for row in &item.truth {
            writeln!(
                truth,
                "{},{},{},{}",
                row.image,
                row.block,
                row.erased,
                row.expected.as_str()
            )
            .unwrap();
        }
    }
    manifest.write_output(&args.out.join("ground_truth.csv"), truth.as_bytes())?;
    manifest.write(&args.out.join("manifest.toml"))?;
    if verbose {
        eprintln!("seed {} -> {} images", spec.seed, corpus.len());
    }
    println!(
        "wrote {} images and ground_truth.csv to {}",
        corpus.len(),
        args.out.display()
    );
    Ok(())
}
