//! `sidewalker inspect` — block repaint decisions for one sidewalk image.
//!
//! Reads an 8-bit PGM, runs the inspection pipeline, and writes one CSV
//! row per block: `image,block_index,action,color` (action is
//! keep/repaint/review; color is white/black for repaint rows, empty
//! otherwise). A `<out>.manifest.toml` is written next to the CSV.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, ValueEnum};
use sidewalker_core::vision::{
    inspect_image, BlockAction, FilterChoice, GrayImage, PipelineOptions, VisionError,
};

use crate::errors::CliError;
use crate::inputs::read_input;
use crate::manifest::Manifest;

#[derive(Args)]
pub struct InspectArgs {
    /// Input image (binary or ASCII PGM, maxval 255).
    #[arg(long)]
    pub image: PathBuf,
    /// Edge-stimulation front end.
    #[arg(long, value_enum, default_value_t = FilterArg::MexicanHat)]
    pub filter: FilterArg,
    /// Output CSV path.
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum FilterArg {
    /// Ricker (Mexican-hat) band-pass filter.
    MexicanHat,
    /// Gabor bank with PCA projection.
    GaborPca,
}

pub fn run(args: &InspectArgs, verbose: bool) -> Result<(), CliError> {
    let mut manifest = Manifest::new("inspect");
    let (resolved, bytes) = read_input(&args.image)?;
    manifest.input(resolved.display().to_string(), &bytes);

    let img = GrayImage::from_pgm_bytes(&bytes)
        .map_err(|e| CliError::Usage(format!("{}: {e}", resolved.display())))?;

    let options = PipelineOptions {
        filter: match args.filter {
            FilterArg::MexicanHat => FilterChoice::MexicanHat,
            FilterArg::GaborPca => FilterChoice::GaborPca,
        },
        ..PipelineOptions::default()
    };
    manifest.setting(
        "filter",
        match args.filter {
            FilterArg::MexicanHat => "mexican-hat",
            FilterArg::GaborPca => "gabor-pca",
        },
    );

    let report = inspect_image(&img, &options).map_err(|e| match e {
        VisionError::NoSidewalk | VisionError::TooFewSegments(_) => {
            CliError::Validation(format!("{}: {e}", resolved.display()))
        }
        other => CliError::Runtime(other.to_string()),
    })?;
    if verbose {
        eprintln!(
            "{} blocks, {} window recalls",
            report.segments.segments.len(),
            report.decisions.triples.len()
        );
    }

    let image_name = resolved
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| resolved.display().to_string());
    let mut csv = String::from("image,block_index,action,color\n");
    let mut repaints = 0usize;
    let mut reviews = 0usize;
    for (block, action) in report.decisions.actions.iter().enumerate() {
        let (action_str, color) = match action {
            BlockAction::Keep => ("keep", ""),
            BlockAction::Repaint(color) => {
                repaints += 1;
                ("repaint", color.as_str())
            }
            BlockAction::Review => {
                reviews += 1;
                ("review", "")
            }
        };
        writeln!(csv, "{image_name},{block},{action_str},{color}").unwrap();
    }
    manifest.write_output(&args.out, csv.as_bytes())?;

    let manifest_path = args.out.with_file_name(format!(
        "{}.manifest.toml",
        args.out
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_else(|| "inspect".to_string())
    ));
    manifest.write(&manifest_path)?;

    println!(
        "{}: {} blocks, {repaints} repaint order(s), {reviews} flagged for review",
        image_name,
        report.decisions.actions.len()
    );
    Ok(())
}
