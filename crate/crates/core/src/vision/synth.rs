//! Seeded synthetic sidewalk corpus.
//!
//! No public dataset ships with the project, so the pipeline is scored on
//! generated fronto-parallel images: equal-width blocks painted in strict
//! white/black alternation, separated by thin dark joints (the grooves real
//! slabs have), with per-block random erasure (the block renders unpainted
//! mid-gray) and per-pixel Gaussian noise. The generator emits the matching
//! ground truth — which blocks are erased and what color each should be — so
//! decisions can be graded exactly.
//!
//! Generation is deterministic: one ChaCha stream seeded from the spec, with
//! a fixed draw order (per-block erasure flags, then row-major pixel noise).

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};
use serde::Deserialize;

use super::decide::PaintColor;
use super::image::GrayImage;
use super::VisionError;

/// Corpus description; the defaults match the shipped evaluation corpus.
#[derive(Debug, Clone, Copy, Deserialize, PartialEq)]
#[serde(default, deny_unknown_fields)]
pub struct SynthSpec {
    /// Number of images.
    pub count: usize,
    /// Image width, pixels; must be a multiple of `stripe_width`.
    pub width: usize,
    /// Image height, pixels.
    pub height: usize,
    /// Block width, pixels.
    pub stripe_width: usize,
    /// Width of the dark joint straddling each internal block boundary.
    pub groove_width: usize,
    /// Per-block probability of being erased.
    pub erasure_rate: f64,
    /// Standard deviation of the per-pixel Gaussian noise.
    pub noise_std: f64,
    /// RNG seed; same seed, same corpus, bit for bit.
    pub seed: u64,
}

impl Default for SynthSpec {
    fn default() -> Self {
        SynthSpec {
            count: 200,
            width: 96,
            height: 64,
            stripe_width: 16,
            groove_width: 2,
            erasure_rate: 0.2,
            noise_std: 0.1,
            seed: 7,
        }
    }
}

impl SynthSpec {
    /// Parses a TOML spec; omitted fields use the defaults.
    pub fn from_toml_str(text: &str) -> Result<Self, VisionError> {
        let spec: SynthSpec =
            toml::from_str(text).map_err(|e| VisionError::Synth(e.to_string()))?;
        spec.validate()?;
        Ok(spec)
    }

    /// Number of blocks per image.
    pub fn blocks(&self) -> usize {
        self.width / self.stripe_width
    }

    pub fn validate(&self) -> Result<(), VisionError> {
        if self.count == 0 {
            return Err(VisionError::Synth("count must be at least 1".into()));
        }
        if self.stripe_width < 4 {
            return Err(VisionError::Synth(
                "stripe width must be at least 4 pixels".into(),
            ));
        }
        if self.width == 0 || !self.width.is_multiple_of(self.stripe_width) {
            return Err(VisionError::Synth(format!(
                "width {} must be a positive multiple of stripe width {}",
                self.width, self.stripe_width
            )));
        }
        if self.blocks() < 3 {
            return Err(VisionError::Synth(format!(
                "need at least 3 blocks per image, got {}",
                self.blocks()
            )));
        }
        if self.height == 0 {
            return Err(VisionError::Synth("height must be positive".into()));
        }
        if self.groove_width > self.stripe_width / 2 {
            return Err(VisionError::Synth(format!(
                "groove width {} too wide for stripe width {}",
                self.groove_width, self.stripe_width
            )));
        }
        if !(0.0..=1.0).contains(&self.erasure_rate) {
            return Err(VisionError::Synth(format!(
                "erasure rate must be in [0, 1], got {}",
                self.erasure_rate
            )));
        }
        if !self.noise_std.is_finite() || self.noise_std < 0.0 {
            return Err(VisionError::Synth(format!(
                "noise std must be finite and non-negative, got {}",
                self.noise_std
            )));
        }
        Ok(())
    }
}

/// Ground-truth label for one block of one image.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroundTruthRow {
    /// Image name (file stem).
    pub image: String,
    pub block: usize,
    /// True when the block was rendered erased.
    pub erased: bool,
    /// The color the alternation says this block should carry.
    pub expected: PaintColor,
}

/// One generated image with its labels.
#[derive(Debug, Clone, PartialEq)]
pub struct SynthImage {
    pub name: String,
    pub image: GrayImage,
    pub truth: Vec<GroundTruthRow>,
}

/// Generates the full corpus.
pub fn generate_synthetic(spec: &SynthSpec) -> Result<Vec<SynthImage>, VisionError> {
    spec.validate()?;
    let noise = Normal::new(0.0, spec.noise_std.max(f64::MIN_POSITIVE))
        .map_err(|e| VisionError::Synth(e.to_string()))?;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let blocks = spec.blocks();
    let sw = spec.stripe_width;
    let gw = spec.groove_width;
    let mut corpus = Vec::with_capacity(spec.count);
    for index in 0..spec.count {
        let name = format!("img_{index:04}");
        let erased: Vec<bool> = (0..blocks)
            .map(|_| rng.gen_bool(spec.erasure_rate))
            .collect();
        let image = GrayImage::from_fn(spec.width, spec.height, |x, _| {
            let block = x / sw;
            let offset = x % sw;
            // Grooves straddle internal boundaries: the last `gw/2 + gw%2`
            // columns of a block and the first `gw/2` of the next.
            let left_groove = offset < gw / 2 && block > 0;
            let right_groove = offset >= sw - (gw - gw / 2) && block < blocks - 1;
            let base = if left_groove || right_groove {
                -1.0
            } else if erased[block] {
                0.0
            } else if block.is_multiple_of(2) {
                1.0
            } else {
                -1.0
            };
            let jitter = if spec.noise_std > 0.0 {
                noise.sample(&mut rng)
            } else {
                0.0
            };
            base + jitter
        });
        let truth = (0..blocks)
            .map(|block| GroundTruthRow {
                image: name.clone(),
                block,
                erased: erased[block],
                expected: if block % 2 == 0 {
                    PaintColor::White
                } else {
                    PaintColor::Black
                },
            })
            .collect();
        corpus.push(SynthImage { name, image, truth });
    }
    Ok(corpus)
}
