//! Grayscale images on the scaled-double convention: every pixel lies in
//! [−1, +1], with −1 full black and +1 full white. 8-bit PGM files (both the
//! ASCII `P2` and binary `P5` flavors) are the interchange format; a byte x
//! maps to `2·x/255 − 1`.

use super::VisionError;

/// Row-major grayscale image with pixels in [−1, 1].
#[derive(Debug, Clone, PartialEq)]
pub struct GrayImage {
    width: usize,
    height: usize,
    data: Vec<f64>,
}

impl GrayImage {
    /// Wraps raw samples after checking the range invariant.
    pub fn new(width: usize, height: usize, data: Vec<f64>) -> Result<Self, VisionError> {
        if width == 0 || height == 0 {
            return Err(VisionError::Image(format!(
                "image dimensions must be positive, got {width}x{height}"
            )));
        }
        if data.len() != width * height {
            return Err(VisionError::Image(format!(
                "expected {} samples for {width}x{height}, got {}",
                width * height,
                data.len()
            )));
        }
        if let Some(bad) = data.iter().find(|v| !v.is_finite() || v.abs() > 1.0) {
            return Err(VisionError::Image(format!(
                "pixel value {bad} outside [-1, 1]"
            )));
        }
        Ok(GrayImage {
            width,
            height,
            data,
        })
    }

    /// Builds an image by evaluating `f(x, y)`; the result is clamped into
    /// [−1, 1] so generators can be sloppy about saturation.
    pub fn from_fn(width: usize, height: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut data = Vec::with_capacity(width * height);
        for y in 0..height {
            for x in 0..width {
                data.push(f(x, y).clamp(-1.0, 1.0));
            }
        }
        GrayImage {
            width,
            height,
            data,
        }
    }

    /// Uniform image of the given level.
    pub fn constant(width: usize, height: usize, level: f64) -> Self {
        Self::from_fn(width, height, |_, _| level)
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    /// Raw row-major samples.
    pub fn data(&self) -> &[f64] {
        &self.data
    }

    /// Pixel at column x, row y.
    #[inline]
    pub fn get(&self, x: usize, y: usize) -> f64 {
        self.data[y * self.width + x]
    }

    /// Parses an 8-bit PGM file (`P2` ASCII or `P5` binary, maxval 255).
    pub fn from_pgm_bytes(bytes: &[u8]) -> Result<Self, VisionError> {
        let mut header = HeaderScanner::new(bytes);
        let magic = header.token()?;
        let binary = match magic.as_str() {
            "P5" => true,
            "P2" => false,
            other => {
                return Err(VisionError::Image(format!(
                    "expected PGM magic P2 or P5, got {other:?}"
                )))
            }
        };
        let width: usize = header.number()?;
        let height: usize = header.number()?;
        let maxval: usize = header.number()?;
        if maxval != 255 {
            return Err(VisionError::Image(format!(
                "only 8-bit PGM with maxval 255 is supported, got {maxval}"
            )));
        }
        if width == 0 || height == 0 {
            return Err(VisionError::Image(format!(
                "image dimensions must be positive, got {width}x{height}"
            )));
        }
        let count = width * height;
        let levels: Vec<u8> = if binary {
            // Exactly one whitespace byte separates the header from raster data.
            let start = header.position() + 1;
            let end = start + count;
            if bytes.len() < end {
                return Err(VisionError::Image(format!(
                    "raster truncated: need {count} bytes, have {}",
                    bytes.len().saturating_sub(start)
                )));
            }
            bytes[start..end].to_vec()
        } else {
            let mut values = Vec::with_capacity(count);
            for _ in 0..count {
                let v: usize = header.number()?;
                if v > 255 {
                    return Err(VisionError::Image(format!("sample {v} exceeds maxval 255")));
                }
                values.push(v as u8);
            }
            values
        };
        let data = levels.iter().map(|&b| byte_to_level(b)).collect();
        GrayImage::new(width, height, data)
    }

    /// Serializes as binary `P5`.
    pub fn to_pgm_binary(&self) -> Vec<u8> {
        let mut out = format!("P5\n{} {}\n255\n", self.width, self.height).into_bytes();
        out.extend(self.data.iter().map(|&v| level_to_byte(v)));
        out
    }

    /// Serializes as ASCII `P2`, one image row per text line.
    pub fn to_pgm_ascii(&self) -> String {
        let mut out = format!("P2\n{} {}\n255\n", self.width, self.height);
        for y in 0..self.height {
            let row: Vec<String> = (0..self.width)
                .map(|x| level_to_byte(self.get(x, y)).to_string())
                .collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }
}

fn byte_to_level(b: u8) -> f64 {
    2.0 * f64::from(b) / 255.0 - 1.0
}

fn level_to_byte(v: f64) -> u8 {
    (((v + 1.0) * 255.0 / 2.0).round()).clamp(0.0, 255.0) as u8
}

/// Tokenizer for PGM headers: whitespace-separated tokens with `#` comments
/// running to end of line.
struct HeaderScanner<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> HeaderScanner<'a> {
    fn new(bytes: &'a [u8]) -> Self {
        HeaderScanner { bytes, pos: 0 }
    }

    /// Byte offset of the last consumed token's end.
    fn position(&self) -> usize {
        self.pos
    }

    fn token(&mut self) -> Result<String, VisionError> {
        while self.pos < self.bytes.len() {
            let b = self.bytes[self.pos];
            if b == b'#' {
                while self.pos < self.bytes.len() && self.bytes[self.pos] != b'\n' {
                    self.pos += 1;
                }
            } else if b.is_ascii_whitespace() {
                self.pos += 1;
            } else {
                break;
            }
        }
        let start = self.pos;
        while self.pos < self.bytes.len() && !self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(VisionError::Image("unexpected end of PGM header".into()));
        }
        String::from_utf8(self.bytes[start..self.pos].to_vec())
            .map_err(|_| VisionError::Image("PGM header is not ASCII".into()))
    }

    fn number(&mut self) -> Result<usize, VisionError> {
        let tok = self.token()?;
        tok.parse().map_err(|_| {
            VisionError::Image(format!("expected a number in PGM header, got {tok:?}"))
        })
    }
}
