//! Exact centroid of a max-aggregate of clipped membership functions.
//!
//! The aggregate of trapezoids clipped at their rule strengths is piecewise
//! linear, so its centroid can be integrated exactly instead of sampled:
//! split the universe at every foot/clip abscissa, split each interval
//! again at pairwise crossings of the active line segments, and integrate
//! the single dominating line on each piece in closed form.

use super::membership::MembershipFunction;
use crate::real::Real;

/// One membership function clipped at a rule strength.
#[derive(Debug, Clone, Copy)]
pub struct Clipped<R: Real> {
    pub function: MembershipFunction<R>,
    pub strength: R,
}

/// Centroid of `max_i min(strength_i, function_i)` over the universe.
///
/// Returns `None` when no strength is positive (empty aggregate).
pub fn centroid<R: Real>(universe: (R, R), clipped: &[Clipped<R>]) -> Option<R> {
    let (lo, hi) = universe;
    let active: Vec<Clipped<R>> = clipped
        .iter()
        .copied()
        .filter(|c| c.strength > R::zero())
        .collect();
    if active.is_empty() {
        return None;
    }

    let mut breaks: Vec<R> = vec![lo, hi];
    for c in &active {
        let f = &c.function;
        for x in [
            f.left_foot,
            f.rising_at(c.strength),
            f.falling_at(c.strength),
            f.right_foot,
        ] {
            if x > lo && x < hi {
                breaks.push(x);
            }
        }
    }
    breaks.sort_by(|a, b| a.partial_cmp(b).expect("breakpoints are finite"));
    breaks.dedup();

    let two = R::one() + R::one();
    let six = two + two + two;
    let mut area = R::zero();
    let mut moment = R::zero();

    for w in breaks.windows(2) {
        let (a, b) = (w[0], w[1]);
        if a >= b {
            continue;
        }
        let mid = (a + b) / two;
        // Each clipped function is linear on (a, b); capture it by its
        // values at the interval ends.
        let lines: Vec<(R, R)> = active
            .iter()
            .map(|c| {
                let f = &c.function;
                let s = c.strength;
                if mid <= f.left_foot || mid >= f.right_foot {
                    (R::zero(), R::zero())
                } else if mid < f.rising_at(s) {
                    let slope_num = |x: R| (x - f.left_foot) / (f.peak_left - f.left_foot);
                    (slope_num(a), slope_num(b))
                } else if mid > f.falling_at(s) {
                    let fall = |x: R| (f.right_foot - x) / (f.right_foot - f.peak_right);
                    (fall(a), fall(b))
                } else {
                    (s, s)
                }
            })
            .collect();

        // Sub-split at pairwise crossings so one line dominates each piece.
        let mut cuts: Vec<R> = vec![a, b];
        for i in 0..lines.len() {
            for j in (i + 1)..lines.len() {
                let da = lines[i].0 - lines[j].0;
                let db = lines[i].1 - lines[j].1;
                let denom = da - db;
                if denom != R::zero() {
                    let t = da / denom;
                    if t > R::zero() && t < R::one() {
                        cuts.push(a + t * (b - a));
                    }
                }
            }
        }
        cuts.sort_by(|x, y| x.partial_cmp(y).expect("cut points are finite"));
        cuts.dedup();

        let envelope = |x: R| -> R {
            let t = (x - a) / (b - a);
            lines
                .iter()
                .map(|&(ya, yb)| (R::one() - t) * ya + t * yb)
                .fold(R::zero(), R::max)
        };

        for piece in cuts.windows(2) {
            let (x0, x1) = (piece[0], piece[1]);
            if x0 >= x1 {
                continue;
            }
            let (y0, y1) = (envelope(x0), envelope(x1));
            let width = x1 - x0;
            area = area + width * (y0 + y1) / two;
            moment = moment + width * (x0 * (two * y0 + y1) + x1 * (y0 + two * y1)) / six;
        }
    }

    if area > R::zero() {
        Some(moment / area)
    } else {
        None
    }
}
