//! Texture stimulation via a Gabor filter bank reduced by PCA.
//!
//! Each pixel gets a feature vector of Gabor magnitude responses (quadrature
//! pairs, so the response is phase-invariant); the features are centered and
//! projected onto their first principal component, computed per image by
//! power iteration. The projection is rescaled to [−1, 1] and serves as a
//! drop-in alternative to the Mexican-hat edge image.

use super::filter::{convolve_same, normalize_max_abs};
use super::image::GrayImage;
use super::VisionError;

/// Orientations and wavelengths evaluated per pixel.
#[derive(Debug, Clone, PartialEq)]
pub struct GaborBank {
    /// Carrier orientations, radians.
    pub orientations: Vec<f64>,
    /// Carrier wavelengths, pixels.
    pub wavelengths: Vec<f64>,
    /// Gaussian envelope aspect ratio (1 = isotropic).
    pub gamma: f64,
    /// Envelope width as a fraction of the wavelength (σ = ratio · λ).
    pub sigma_ratio: f64,
}

impl Default for GaborBank {
    /// Four orientations at 45° spacing, two octave-spaced wavelengths.
    fn default() -> Self {
        use std::f64::consts::PI;
        GaborBank {
            orientations: vec![0.0, PI / 4.0, PI / 2.0, 3.0 * PI / 4.0],
            wavelengths: vec![4.0, 8.0],
            gamma: 0.5,
            sigma_ratio: 0.56,
        }
    }
}

/// First-principal-component image of the bank's magnitude responses.
#[derive(Debug, Clone, PartialEq)]
pub struct GaborResponse {
    pub image: GrayImage,
    /// Set when the feature covariance is degenerate (e.g. a constant
    /// input); the image is then all zeros and downstream stages should
    /// treat the result as "no texture found" rather than silence.
    pub degenerate: bool,
}

/// Runs the bank, the per-image PCA, and the [−1, 1] rescale.
pub fn gabor_pca_filter(img: &GrayImage, bank: &GaborBank) -> Result<GaborResponse, VisionError> {
    if bank.orientations.is_empty() || bank.wavelengths.is_empty() {
        return Err(VisionError::Filter(
            "gabor bank needs at least one orientation and one wavelength".into(),
        ));
    }
    if bank.gamma <= 0.0 || bank.sigma_ratio <= 0.0 {
        return Err(VisionError::Filter(
            "gabor gamma and sigma ratio must be positive".into(),
        ));
    }
    let pixels = img.width() * img.height();
    let mut features: Vec<Vec<f64>> = Vec::new();
    for &lambda in &bank.wavelengths {
        for &theta in &bank.orientations {
            let (even, odd, radius) = gabor_pair(lambda, theta, bank.gamma, bank.sigma_ratio);
            let re = convolve_same(img, &even, radius)?;
            let im = convolve_same(img, &odd, radius)?;
            let magnitude: Vec<f64> = re
                .iter()
                .zip(&im)
                .map(|(a, b)| (a * a + b * b).sqrt())
                .collect();
            features.push(magnitude);
        }
    }

    // Center each feature over the image.
    for channel in &mut features {
        let mean = channel.iter().sum::<f64>() / pixels as f64;
        for v in channel.iter_mut() {
            *v -= mean;
        }
    }

    let dim = features.len();
    let mut cov = vec![0.0; dim * dim];
    for a in 0..dim {
        for b in a..dim {
            let dot: f64 = features[a]
                .iter()
                .zip(&features[b])
                .map(|(x, y)| x * y)
                .sum::<f64>()
                / pixels as f64;
            cov[a * dim + b] = dot;
            cov[b * dim + a] = dot;
        }
    }

    match principal_direction(&cov, dim) {
        Some(axis) => {
            let mut projected = vec![0.0; pixels];
            for (channel, weight) in features.iter().zip(&axis) {
                for (p, v) in projected.iter_mut().zip(channel) {
                    *p += weight * v;
                }
            }
            normalize_max_abs(&mut projected);
            let degenerate = projected.iter().all(|&v| v == 0.0);
            Ok(GaborResponse {
                image: GrayImage::new(img.width(), img.height(), projected)?,
                degenerate,
            })
        }
        None => Ok(GaborResponse {
            image: GrayImage::constant(img.width(), img.height(), 0.0),
            degenerate: true,
        }),
    }
}

/// Quadrature Gabor kernels (cosine and sine carriers under one Gaussian
/// envelope) for a single orientation/wavelength, plus their radius.
fn gabor_pair(
    lambda: f64,
    theta: f64,
    gamma: f64,
    sigma_ratio: f64,
) -> (Vec<f64>, Vec<f64>, usize) {
    let sigma = sigma_ratio * lambda;
    let radius = (3.0 * sigma).ceil() as usize;
    let size = 2 * radius + 1;
    let (sin_t, cos_t) = theta.sin_cos();
    let mut even = Vec::with_capacity(size * size);
    let mut odd = Vec::with_capacity(size * size);
    for y in 0..size {
        for x in 0..size {
            let dx = x as f64 - radius as f64;
            let dy = y as f64 - radius as f64;
            let xr = dx * cos_t + dy * sin_t;
            let yr = -dx * sin_t + dy * cos_t;
            let envelope = (-(xr * xr + gamma * gamma * yr * yr) / (2.0 * sigma * sigma)).exp();
            let phase = std::f64::consts::TAU * xr / lambda;
            even.push(envelope * phase.cos());
            odd.push(envelope * phase.sin());
        }
    }
    (even, odd, radius)
}

/// Dominant eigenvector of a symmetric matrix by power iteration with a
/// fixed deterministic start. Returns `None` when the matrix is numerically
/// zero. The sign is fixed by making the largest-magnitude component
/// positive, so repeated runs agree exactly.
fn principal_direction(cov: &[f64], dim: usize) -> Option<Vec<f64>> {
    let scale = cov.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    if scale < 1e-18 {
        return None;
    }
    let mut v = vec![1.0 / (dim as f64).sqrt(); dim];
    for _ in 0..200 {
        let mut next = vec![0.0; dim];
        for a in 0..dim {
            next[a] = (0..dim).map(|b| cov[a * dim + b] * v[b]).sum();
        }
        let norm = next.iter().map(|x| x * x).sum::<f64>().sqrt();
        if norm < 1e-18 {
            return None;
        }
        for x in &mut next {
            *x /= norm;
        }
        v = next;
    }
    let lead = v
        .iter()
        .enumerate()
        .max_by(|a, b| a.1.abs().total_cmp(&b.1.abs()))
        .map(|(i, _)| i)?;
    if v[lead] < 0.0 {
        for x in &mut v {
            *x = -*x;
        }
    }
    Some(v)
}
