//! Scalar abstraction: every numeric kernel in this crate is generic over a
//! floating-point type so the same code runs in `f32` and `f64`.

use std::fmt::{Debug, Display, LowerExp};
use std::iter::Sum;

use num_traits::{Float, FromPrimitive, ToPrimitive};

/// Floating-point scalar used throughout the crate. Implemented for `f32`
/// and `f64`; the shipped binaries use `f64` (see [`crate::Scalar`]).
pub trait Real:
    Float + FromPrimitive + ToPrimitive + Sum + Display + LowerExp + Debug + 'static
{
}

impl Real for f32 {}
impl Real for f64 {}

/// Converts an `f64` constant into the active scalar type.
///
/// Panics only if the target type cannot represent any `f64` at all, which
/// cannot happen for the two provided implementations.
#[inline]
pub fn real<R: Real>(x: f64) -> R {
    R::from_f64(x).expect("f64 constant must convert into the scalar type")
}

/// Clamps `x` into `[lo, hi]`.
#[inline]
pub fn clamp<R: Real>(x: R, lo: R, hi: R) -> R {
    if x < lo {
        lo
    } else if x > hi {
        hi
    } else {
        x
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn real_converts_constants() {
        let a: f32 = real(1.5);
        let b: f64 = real(1.5);
        assert_eq!(a, 1.5f32);
        assert_eq!(b, 1.5f64);
    }

    #[test]
    fn clamp_bounds() {
        assert_eq!(clamp(5.0, -1.0, 1.0), 1.0);
        assert_eq!(clamp(-5.0, -1.0, 1.0), -1.0);
        assert_eq!(clamp(0.25, -1.0, 1.0), 0.25);
    }
}
