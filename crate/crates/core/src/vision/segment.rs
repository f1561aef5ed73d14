//! Column segmentation: turning an edge-stimulated image into an ordered run
//! of sidewalk blocks, then a ternary value per block.
//!
//! Sidewalk blocks are separated by vertical limits, so the segmenter works
//! on the column profile of the filtered image: the mean |response| per
//! column. Columns whose profile exceeds `threshold × max` are boundary
//! columns; each maximal run of boundary columns (runs separated by no more
//! than [`BOUNDARY_GAP_TOLERANCE`] quiet columns count as one) collapses to
//! its center, and the centers cut the image into contiguous half-open
//! column intervals. Per-segment white/black pixel fractions come from the
//! *original* image.

use super::image::GrayImage;
use super::VisionError;

/// Pixel level above which a pixel counts as white (and below the negation,
/// black) on the [−1, 1] scale.
pub const PIXEL_CLASS_THRESHOLD: f64 = 0.5;

/// Default boundary threshold: a column is a boundary when its mean
/// |response| reaches this fraction of the strongest column.
pub const DEFAULT_BOUNDARY_THRESHOLD: f64 = 0.35;

/// Default majority threshold for [`ternarize`].
pub const DEFAULT_MAJORITY_THRESHOLD: f64 = 0.7;

/// Two boundary runs separated by at most this many below-threshold columns
/// are treated as one boundary. The band-pass response changes sign at the
/// exact edge, so the |response| profile of a single physical boundary has a
/// narrow notch at its center; under noise that notch can dip below the
/// threshold and would otherwise split one boundary into two cuts.
pub const BOUNDARY_GAP_TOLERANCE: usize = 2;

/// One sidewalk block: a half-open column interval with its pixel statistics.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Segment {
    /// First column of the block.
    pub start: usize,
    /// One past the last column.
    pub end: usize,
    /// +1 white, −1 black, 0 partially erased.
    pub ternary: i8,
    /// Fraction of pixels above [`PIXEL_CLASS_THRESHOLD`].
    pub white_fraction: f64,
    /// Fraction of pixels below −[`PIXEL_CLASS_THRESHOLD`].
    pub black_fraction: f64,
}

impl Segment {
    pub fn width(&self) -> usize {
        self.end - self.start
    }

    /// Center column, rounded down.
    pub fn center(&self) -> usize {
        (self.start + self.end) / 2
    }
}

/// Ordered left-to-right run of segments covering the image width.
#[derive(Debug, Clone, PartialEq)]
pub struct SegmentSequence {
    pub segments: Vec<Segment>,
}

impl SegmentSequence {
    /// The per-block ternary values in order.
    pub fn ternary_vector(&self) -> Vec<i8> {
        self.segments.iter().map(|s| s.ternary).collect()
    }
}

/// Majority vote for one segment: +1 when the white fraction reaches `tau`,
/// −1 when the black fraction does, 0 otherwise ("partially erased"). The
/// comparison is inclusive, so a fraction exactly at `tau` saturates.
pub fn ternarize(white_fraction: f64, black_fraction: f64, tau: f64) -> i8 {
    if white_fraction >= tau {
        1
    } else if black_fraction >= tau {
        -1
    } else {
        0
    }
}

/// Splits the image into block segments.
///
/// `filtered` drives the boundary search, `original` supplies the pixel
/// statistics; they must have identical dimensions. `boundary_threshold` is
/// relative (fraction of the strongest column response, in (0, 1]); `tau` is
/// the majority threshold handed to [`ternarize`].
///
/// A silent filter response (all zeros — e.g. a uniformly painted sidewalk)
/// yields a single segment spanning the image. Zero usable segments is the
/// "no sidewalk detected" error.
pub fn segment_columns(
    filtered: &GrayImage,
    original: &GrayImage,
    boundary_threshold: f64,
    tau: f64,
) -> Result<SegmentSequence, VisionError> {
    if filtered.width() != original.width() || filtered.height() != original.height() {
        return Err(VisionError::Dimension(format!(
            "filtered {}x{} vs original {}x{}",
            filtered.width(),
            filtered.height(),
            original.width(),
            original.height()
        )));
    }
    if !(0.0..=1.0).contains(&boundary_threshold) || boundary_threshold == 0.0 {
        return Err(VisionError::Filter(format!(
            "boundary threshold must be in (0, 1], got {boundary_threshold}"
        )));
    }
    if !(0.0..=1.0).contains(&tau) {
        return Err(VisionError::Filter(format!(
            "majority threshold must be in [0, 1], got {tau}"
        )));
    }

    let (w, h) = (filtered.width(), filtered.height());
    let mut profile = vec![0.0f64; w];
    for (x, p) in profile.iter_mut().enumerate() {
        let mut acc = 0.0;
        for y in 0..h {
            acc += filtered.get(x, y).abs();
        }
        *p = acc / h as f64;
    }
    let peak = profile.iter().fold(0.0f64, |m, &v| m.max(v));

    // Boundary runs (inclusive column ranges), with short below-threshold
    // notches absorbed, then collapsed to their center columns as cuts.
    let mut runs: Vec<(usize, usize)> = Vec::new();
    if peak > 0.0 {
        let level = boundary_threshold * peak;
        let mut run_start: Option<usize> = None;
        // A trailing `false` closes any run still open at the right edge.
        let gate = profile.iter().map(|&v| v >= level).chain([false]);
        for (x, on) in gate.enumerate() {
            match (on, run_start) {
                (true, None) => run_start = Some(x),
                (false, Some(s)) => {
                    let run = (s, x - 1);
                    match runs.last_mut() {
                        Some(prev) if run.0 - prev.1 - 1 <= BOUNDARY_GAP_TOLERANCE => {
                            prev.1 = run.1;
                        }
                        _ => runs.push(run),
                    }
                    run_start = None;
                }
                _ => {}
            }
        }
    }
    let cuts: Vec<usize> = runs.iter().map(|&(s, e)| (s + e) / 2).collect();

    // Cut positions bound half-open intervals; empty ones (a cut at column 0
    // or two adjacent cuts) are dropped.
    let mut edges = Vec::with_capacity(cuts.len() + 2);
    edges.push(0);
    edges.extend(cuts);
    edges.push(w);
    let mut segments = Vec::new();
    for pair in edges.windows(2) {
        let (start, end) = (pair[0], pair[1]);
        if end <= start {
            continue;
        }
        let total = ((end - start) * h) as f64;
        let mut white = 0usize;
        let mut black = 0usize;
        for x in start..end {
            for y in 0..h {
                let v = original.get(x, y);
                if v > PIXEL_CLASS_THRESHOLD {
                    white += 1;
                } else if v < -PIXEL_CLASS_THRESHOLD {
                    black += 1;
                }
            }
        }
        let white_fraction = white as f64 / total;
        let black_fraction = black as f64 / total;
        segments.push(Segment {
            start,
            end,
            ternary: ternarize(white_fraction, black_fraction, tau),
            white_fraction,
            black_fraction,
        });
    }

    if segments.is_empty() {
        return Err(VisionError::NoSidewalk);
    }
    Ok(SegmentSequence { segments })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::vision::filter::mexican_hat_filter;

    fn three_stripes() -> GrayImage {
        GrayImage::from_fn(60, 24, |x, _| {
            if x < 20 {
                1.0
            } else if x < 40 {
                -1.0
            } else {
                1.0
            }
        })
    }

    #[test]
    fn three_stripes_make_three_segments() {
        let img = three_stripes();
        let filtered = mexican_hat_filter(&img, 2).unwrap();
        let seq = segment_columns(
            &filtered,
            &img,
            DEFAULT_BOUNDARY_THRESHOLD,
            DEFAULT_MAJORITY_THRESHOLD,
        )
        .unwrap();
        assert_eq!(seq.segments.len(), 3, "segments: {:?}", seq.segments);
        assert_eq!(seq.ternary_vector(), vec![1, -1, 1]);
        // Stripe edges at columns 20 and 40 recovered within ±2.
        assert!((seq.segments[0].end as isize - 20).abs() <= 2);
        assert!((seq.segments[1].end as isize - 40).abs() <= 2);
        // Contiguous cover of the full width.
        assert_eq!(seq.segments[0].start, 0);
        assert_eq!(seq.segments[2].end, 60);
        assert_eq!(seq.segments[0].end, seq.segments[1].start);
        assert_eq!(seq.segments[1].end, seq.segments[2].start);
    }

    #[test]
    fn uniform_black_image_is_one_black_segment() {
        let img = GrayImage::constant(40, 20, -1.0);
        let filtered = mexican_hat_filter(&img, 2).unwrap();
        let seq = segment_columns(&filtered, &img, 0.35, 0.7).unwrap();
        assert_eq!(seq.segments.len(), 1);
        assert_eq!(seq.segments[0].ternary, -1);
        assert_eq!(seq.segments[0].black_fraction, 1.0);
        assert_eq!(seq.segments[0].width(), 40);
    }

    #[test]
    fn ternarize_majority_rule() {
        assert_eq!(ternarize(1.0, 0.0, 0.7), 1);
        assert_eq!(ternarize(0.0, 0.92, 0.7), -1);
        assert_eq!(ternarize(0.4, 0.35, 0.7), 0);
        // Inclusive comparison exactly at tau.
        assert_eq!(ternarize(0.7, 0.0, 0.7), 1);
        assert_eq!(ternarize(0.0, 0.7, 0.7), -1);
    }

    #[test]
    fn dimension_mismatch_and_bad_thresholds_are_rejected() {
        let a = GrayImage::constant(10, 10, 0.0);
        let b = GrayImage::constant(12, 10, 0.0);
        assert!(matches!(
            segment_columns(&a, &b, 0.35, 0.7),
            Err(VisionError::Dimension(_))
        ));
        assert!(segment_columns(&a, &a, 0.0, 0.7).is_err());
        assert!(segment_columns(&a, &a, 1.5, 0.7).is_err());
        assert!(segment_columns(&a, &a, 0.35, 1.5).is_err());
    }

    #[test]
    fn notched_boundary_run_yields_a_single_cut() {
        // Response columns 10-11 and 13-14 with a quiet notch at 12: one
        // physical boundary, so one cut (at 12), not two. The isolated run
        // at column 40 is a second boundary. A 4-column gap (20-23 vs 28)
        // stays split.
        let single_notch = |x: usize| matches!(x, 10 | 11 | 13 | 14 | 40);
        let filtered = GrayImage::from_fn(60, 8, |x, _| if single_notch(x) { 1.0 } else { 0.0 });
        let original = GrayImage::constant(60, 8, 1.0);
        let seq = segment_columns(&filtered, &original, 0.35, 0.7).unwrap();
        let edges: Vec<(usize, usize)> = seq.segments.iter().map(|s| (s.start, s.end)).collect();
        assert_eq!(edges, vec![(0, 12), (12, 40), (40, 60)]);

        let wide_gap = |x: usize| matches!(x, 20 | 21 | 22 | 23 | 28);
        let filtered = GrayImage::from_fn(60, 8, |x, _| if wide_gap(x) { 1.0 } else { 0.0 });
        let seq = segment_columns(&filtered, &original, 0.35, 0.7).unwrap();
        let edges: Vec<(usize, usize)> = seq.segments.iter().map(|s| (s.start, s.end)).collect();
        assert_eq!(edges, vec![(0, 21), (21, 28), (28, 60)]);
    }

    #[test]
    fn gray_to_paint_boundaries_are_still_found() {
        // white | erased(gray) | black: the gray block must stay separate.
        let img = GrayImage::from_fn(60, 24, |x, _| {
            if x < 20 {
                1.0
            } else if x < 40 {
                0.0
            } else {
                -1.0
            }
        });
        let filtered = mexican_hat_filter(&img, 2).unwrap();
        let seq = segment_columns(&filtered, &img, 0.35, 0.7).unwrap();
        assert_eq!(seq.ternary_vector(), vec![1, 0, -1]);
    }
}
