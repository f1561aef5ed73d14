//! Sidewalk-inspection vision pipeline.
//!
//! A fronto-parallel photograph of a block-painted sidewalk goes through five
//! stages:
//!
//! 1. edge stimulation — Mexican-hat (Ricker) convolution at a configurable
//!    scale, or a Gabor-bank + PCA alternative ([`filter`], [`gabor`]);
//! 2. column segmentation — vertical block boundaries from the column-wise
//!    response profile ([`segment`]);
//! 3. ternarization — each segment becomes +1 (white), −1 (black) or
//!    0 (partially erased) by pixel majority ([`segment::ternarize`]);
//! 4. associative recall — a three-neuron Hopfield memory trained on the two
//!    alternation patterns pulls each segment triple toward the nearest
//!    well-painted pattern ([`hopfield`]);
//! 5. repaint decisions — sliding-window recalls merge into per-block paint
//!    or review orders ([`decide`]).
//!
//! [`synth`] generates the seeded synthetic corpus (striped images with known
//! erasures) used to score the pipeline end to end, since no public dataset
//! ships with the project.
//!
//! Everything here is concrete `f64`: images arrive as scaled doubles and no
//! consumer asks for reduced precision, so the generic-scalar machinery of
//! the control modules would buy nothing.

pub mod decide;
pub mod filter;
pub mod gabor;
pub mod hopfield;
pub mod image;
pub mod segment;
pub mod synth;

pub use decide::{
    decide_repaints, decide_ternary, BlockAction, DecisionSummary, PaintColor, RepaintDecision,
    TripleOutcome,
};
pub use filter::mexican_hat_filter;
pub use gabor::{gabor_pca_filter, GaborBank, GaborResponse};
pub use hopfield::{train_hopfield, HopfieldError, HopfieldNet, RecallResult};
pub use image::GrayImage;
pub use segment::{segment_columns, ternarize, Segment, SegmentSequence};
pub use synth::{generate_synthetic, GroundTruthRow, SynthSpec};

use thiserror::Error;

/// Which edge-stimulation front end the pipeline runs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum FilterChoice {
    #[default]
    MexicanHat,
    GaborPca,
}

/// Tunables for [`inspect_image`]; the defaults are the shipped calibration.
#[derive(Debug, Clone, PartialEq)]
pub struct PipelineOptions {
    pub filter: FilterChoice,
    /// Mexican-hat kernel scale, pixels.
    pub scale: usize,
    /// Relative column-boundary threshold, fraction of the peak column.
    pub boundary_threshold: f64,
    /// Majority threshold for ternarization.
    pub majority_threshold: f64,
    /// Bank used when `filter` is [`FilterChoice::GaborPca`].
    pub bank: GaborBank,
}

impl Default for PipelineOptions {
    fn default() -> Self {
        PipelineOptions {
            filter: FilterChoice::MexicanHat,
            scale: 2,
            boundary_threshold: segment::DEFAULT_BOUNDARY_THRESHOLD,
            majority_threshold: segment::DEFAULT_MAJORITY_THRESHOLD,
            bank: GaborBank::default(),
        }
    }
}

/// Everything one image produces on its way to repaint orders.
#[derive(Debug, Clone, PartialEq)]
pub struct InspectionReport {
    pub segments: SegmentSequence,
    pub decisions: DecisionSummary,
    /// Set when the Gabor front end found no usable texture direction.
    pub degenerate_filter: bool,
}

/// Full pipeline: edge stimulation, segmentation, ternarization, recall,
/// and the per-block merge, against the standard alternation memory.
pub fn inspect_image(
    img: &GrayImage,
    options: &PipelineOptions,
) -> Result<InspectionReport, VisionError> {
    let (filtered, degenerate_filter) = match options.filter {
        FilterChoice::MexicanHat => (mexican_hat_filter(img, options.scale)?, false),
        FilterChoice::GaborPca => {
            let response = gabor_pca_filter(img, &options.bank)?;
            (response.image, response.degenerate)
        }
    };
    let segments = segment_columns(
        &filtered,
        img,
        options.boundary_threshold,
        options.majority_threshold,
    )?;
    let net = HopfieldNet::alternation();
    let decisions = decide_repaints(&segments, &net)?;
    Ok(InspectionReport {
        segments,
        decisions,
        degenerate_filter,
    })
}

/// Errors from the vision pipeline.
#[derive(Debug, Error)]
pub enum VisionError {
    /// A PGM file failed to parse, or an image invariant was violated.
    #[error("image error: {0}")]
    Image(String),
    /// The requested kernel does not fit inside the image.
    #[error("kernel of size {kernel} exceeds image dimension {image}")]
    KernelTooLarge { kernel: usize, image: usize },
    /// A filter parameter was out of range.
    #[error("invalid filter parameter: {0}")]
    Filter(String),
    /// Column segmentation produced no usable segments.
    #[error("no sidewalk detected: column segmentation found no segments")]
    NoSidewalk,
    /// Inputs to an operation had mismatched dimensions.
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    /// The decision stage needs at least three segments.
    #[error("need at least 3 segments for triple recall, got {0}")]
    TooFewSegments(usize),
    /// Hopfield training or recall failed.
    #[error(transparent)]
    Hopfield(#[from] hopfield::HopfieldError),
    /// Synthetic-corpus generation was misconfigured.
    #[error("synthetic corpus spec error: {0}")]
    Synth(String),
}
