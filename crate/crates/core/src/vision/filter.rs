//! Mexican-hat edge stimulation: same-size 2-D convolution with the Ricker
//! wavelet. The output keeps the input's resolution (that is the whole point
//! of using an undecimated transform here), uses symmetric boundary padding,
//! and is rescaled so the strongest response has magnitude 1.

use super::image::GrayImage;
use super::VisionError;

/// Largest response magnitude treated as silence; below it the output is the
/// all-zero image rather than noise amplified to full scale.
const SILENCE: f64 = 1e-12;

/// Ricker (Mexican-hat) kernel at standard deviation `sigma` pixels, radius
/// `ceil(3·sigma)`. The discrete taps are mean-subtracted so the kernel sums
/// to zero exactly despite truncation; a constant image then maps to an
/// exactly-zero response.
pub fn ricker_kernel(sigma: f64) -> (Vec<f64>, usize) {
    let radius = (3.0 * sigma).ceil() as usize;
    let size = 2 * radius + 1;
    let mut taps = Vec::with_capacity(size * size);
    let s2 = 2.0 * sigma * sigma;
    for y in 0..size {
        for x in 0..size {
            let dx = x as f64 - radius as f64;
            let dy = y as f64 - radius as f64;
            let q = (dx * dx + dy * dy) / s2;
            taps.push((1.0 - q) * (-q).exp());
        }
    }
    let mean = taps.iter().sum::<f64>() / taps.len() as f64;
    for t in &mut taps {
        *t -= mean;
    }
    (taps, radius)
}

/// Convolves with the Ricker kernel at the given integer scale (the wavelet's
/// standard deviation in pixels) and normalizes to [−1, 1].
pub fn mexican_hat_filter(img: &GrayImage, scale: usize) -> Result<GrayImage, VisionError> {
    if scale < 1 {
        return Err(VisionError::Filter(
            "mexican-hat scale must be at least 1 pixel".into(),
        ));
    }
    let (taps, radius) = ricker_kernel(scale as f64);
    let mut data = convolve_same(img, &taps, radius)?;
    normalize_max_abs(&mut data);
    GrayImage::new(img.width(), img.height(), data)
}

/// Same-size convolution with symmetric (edge-mirroring) padding.
pub(crate) fn convolve_same(
    img: &GrayImage,
    taps: &[f64],
    radius: usize,
) -> Result<Vec<f64>, VisionError> {
    let size = 2 * radius + 1;
    let (w, h) = (img.width(), img.height());
    if size > w || size > h {
        return Err(VisionError::KernelTooLarge {
            kernel: size,
            image: w.min(h),
        });
    }
    let mut out = vec![0.0; w * h];
    let r = radius as isize;
    for y in 0..h as isize {
        for x in 0..w as isize {
            let mut acc = 0.0;
            for ky in -r..=r {
                let sy = mirror(y + ky, h as isize);
                for kx in -r..=r {
                    let sx = mirror(x + kx, w as isize);
                    let tap = taps[((ky + r) * size as isize + (kx + r)) as usize];
                    acc += tap * img.get(sx as usize, sy as usize);
                }
            }
            out[(y * w as isize + x) as usize] = acc;
        }
    }
    Ok(out)
}

/// Half-sample symmetric reflection: …2 1 0 | 0 1 2… at the low edge. The
/// kernel-fits-in-image check guarantees one reflection suffices.
#[inline]
pub(crate) fn mirror(i: isize, n: isize) -> isize {
    if i < 0 {
        -1 - i
    } else if i >= n {
        2 * n - 1 - i
    } else {
        i
    }
}

/// Scales so the largest magnitude is 1; a silent response stays all-zero.
pub(crate) fn normalize_max_abs(data: &mut [f64]) {
    let peak = data.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    if peak < SILENCE {
        data.fill(0.0);
    } else {
        for v in data.iter_mut() {
            *v /= peak;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kernel_sums_to_zero_and_peaks_at_center() {
        let (taps, radius) = ricker_kernel(2.0);
        assert_eq!(radius, 6);
        assert_eq!(taps.len(), 13 * 13);
        let sum: f64 = taps.iter().sum();
        assert!(sum.abs() < 1e-12);
        let center = taps[radius * 13 + radius];
        assert!(taps.iter().all(|&t| t <= center));
    }

    #[test]
    fn constant_image_maps_to_exact_zero() {
        for level in [-1.0, 0.0, 0.4] {
            let img = GrayImage::constant(20, 16, level);
            let out = mexican_hat_filter(&img, 2).unwrap();
            assert!(out.data().iter().all(|&v| v == 0.0), "level {level}");
        }
    }

    #[test]
    fn vertical_step_response_is_extremal_at_the_edge() {
        let img = GrayImage::from_fn(32, 16, |x, _| if x < 16 { 1.0 } else { -1.0 });
        let out = mexican_hat_filter(&img, 2).unwrap();
        // The response to a step is odd about the edge, crossing zero
        // between columns 15/16 with extrema one kernel width (σ = 2) out.
        let mut best = (0, 0.0f64);
        for x in 0..32 {
            let v = out.get(x, 8).abs();
            if v > best.1 {
                best = (x, v);
            }
        }
        assert!(
            (13..=18).contains(&best.0),
            "peak at column {} is not within σ of the step",
            best.0
        );
        assert!((best.1 - 1.0).abs() < 1e-12, "normalized peak is 1");
        assert!((out.get(15, 8) + out.get(16, 8)).abs() < 1e-12);
        assert!(out.get(15, 8) > 0.1 && out.get(16, 8) < -0.1);
    }

    #[test]
    fn output_keeps_the_input_resolution() {
        for (w, h, scale) in [(13, 13, 2), (40, 9, 1), (97, 55, 3)] {
            let img = GrayImage::from_fn(w, h, |x, y| ((x * 7 + y * 3) % 5) as f64 / 5.0);
            let out = mexican_hat_filter(&img, scale).unwrap();
            assert_eq!((out.width(), out.height()), (w, h));
        }
    }

    #[test]
    fn oversized_kernel_and_zero_scale_are_rejected() {
        let img = GrayImage::constant(8, 8, 0.0);
        assert!(matches!(
            mexican_hat_filter(&img, 2),
            Err(VisionError::KernelTooLarge {
                kernel: 13,
                image: 8
            })
        ));
        assert!(mexican_hat_filter(&img, 0).is_err());
    }

    #[test]
    fn mirror_reflects_without_repeating_past_one_fold() {
        assert_eq!(mirror(-1, 10), 0);
        assert_eq!(mirror(-3, 10), 2);
        assert_eq!(mirror(0, 10), 0);
        assert_eq!(mirror(9, 10), 9);
        assert_eq!(mirror(10, 10), 9);
        assert_eq!(mirror(12, 10), 7);
    }
}
