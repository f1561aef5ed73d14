//! Repaint decisions: sliding Hopfield recall over segment triples, then a
//! per-block merge of the overlapping verdicts.
//!
//! Every window of three consecutive blocks is recalled. A window that lands
//! on a stored memory orders a repaint for each component where its input
//! disagreed with the memory; a window that ends unrecognizable (the all-zero
//! fixed point) or fails to converge flags its blocks for human review and
//! abstains from voting. Per block, the converged windows then vote: repaint
//! orders against leave-alone verdicts, ties resolved toward repainting, and
//! a white/black conflict escalates to review. Blocks covered *only* by
//! review windows are reported for review — never silently painted.

use super::hopfield::{HopfieldError, HopfieldNet};
use super::segment::SegmentSequence;
use super::VisionError;

/// Paint colors on the ternary scale: +1 ↔ white, −1 ↔ black.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PaintColor {
    White,
    Black,
}

impl PaintColor {
    fn from_ternary(v: i8) -> Option<Self> {
        match v {
            1 => Some(PaintColor::White),
            -1 => Some(PaintColor::Black),
            _ => None,
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            PaintColor::White => "white",
            PaintColor::Black => "black",
        }
    }
}

impl std::fmt::Display for PaintColor {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// What one recall window concluded.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TripleOutcome {
    /// Recall reached a stored memory; `orders` lists (block index, color)
    /// for every component that disagreed with it. Empty exactly when the
    /// input already was the memory (one confirming sweep).
    Matched {
        memory: [i8; 3],
        sweeps: usize,
        orders: Vec<(usize, PaintColor)>,
    },
    /// Recall converged somewhere that is not a stored memory (the all-zero
    /// fixed point); the window's blocks need human review.
    Unrecognizable { final_state: [i8; 3], sweeps: usize },
    /// Recall hit the sweep cap without settling.
    NonConvergent,
}

/// One window's verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepaintDecision {
    /// Index of the window; the window covers blocks
    /// `triple_index .. triple_index + 3`.
    pub triple_index: usize,
    /// The ternary input triple.
    pub input: [i8; 3],
    pub outcome: TripleOutcome,
}

/// Final per-block instruction after merging windows.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BlockAction {
    /// Leave the block as painted.
    Keep,
    /// Repaint with the given color.
    Repaint(PaintColor),
    /// Hand to a human: conflicting or unrecognizable evidence.
    Review,
}

/// All window verdicts plus the merged per-block actions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecisionSummary {
    pub triples: Vec<RepaintDecision>,
    /// One action per block, indexed by block position.
    pub actions: Vec<BlockAction>,
}

impl DecisionSummary {
    /// Blocks ordered repainted, as (block index, color).
    pub fn repaints(&self) -> Vec<(usize, PaintColor)> {
        self.actions
            .iter()
            .enumerate()
            .filter_map(|(i, a)| match a {
                BlockAction::Repaint(c) => Some((i, *c)),
                _ => None,
            })
            .collect()
    }

    /// Blocks flagged for review.
    pub fn reviews(&self) -> Vec<usize> {
        self.actions
            .iter()
            .enumerate()
            .filter_map(|(i, a)| matches!(a, BlockAction::Review).then_some(i))
            .collect()
    }
}

/// Runs the sliding-window recall over a segment sequence.
pub fn decide_repaints(
    seq: &SegmentSequence,
    net: &HopfieldNet,
) -> Result<DecisionSummary, VisionError> {
    decide_ternary(&seq.ternary_vector(), net)
}

/// Same as [`decide_repaints`] but starting from the bare ternary vector.
pub fn decide_ternary(values: &[i8], net: &HopfieldNet) -> Result<DecisionSummary, VisionError> {
    let n = values.len();
    if n < 3 {
        return Err(VisionError::TooFewSegments(n));
    }

    let mut triples = Vec::with_capacity(n - 2);
    for t in 0..n - 2 {
        let input = [values[t], values[t + 1], values[t + 2]];
        let outcome = match net.recall(input) {
            Ok(result) => match result.matched {
                Some(_) => {
                    let memory = result.final_state;
                    let orders = input
                        .iter()
                        .enumerate()
                        .filter(|&(i, &v)| v != memory[i])
                        .filter_map(|(i, _)| {
                            PaintColor::from_ternary(memory[i]).map(|c| (t + i, c))
                        })
                        .collect();
                    TripleOutcome::Matched {
                        memory,
                        sweeps: result.sweeps,
                        orders,
                    }
                }
                None => TripleOutcome::Unrecognizable {
                    final_state: result.final_state,
                    sweeps: result.sweeps,
                },
            },
            Err(HopfieldError::NonConvergent { .. }) => TripleOutcome::NonConvergent,
            Err(other) => return Err(other.into()),
        };
        triples.push(RepaintDecision {
            triple_index: t,
            input,
            outcome,
        });
    }

    // Per-block vote counts from converged windows; review coverage from the
    // rest.
    let mut white = vec![0usize; n];
    let mut black = vec![0usize; n];
    let mut clean = vec![0usize; n];
    let mut review = vec![0usize; n];
    for decision in &triples {
        let t = decision.triple_index;
        match &decision.outcome {
            TripleOutcome::Matched { orders, .. } => {
                for b in t..t + 3 {
                    match orders.iter().find(|(block, _)| *block == b) {
                        Some((_, PaintColor::White)) => white[b] += 1,
                        Some((_, PaintColor::Black)) => black[b] += 1,
                        None => clean[b] += 1,
                    }
                }
            }
            TripleOutcome::Unrecognizable { .. } | TripleOutcome::NonConvergent => {
                for r in &mut review[t..t + 3] {
                    *r += 1;
                }
            }
        }
    }

    let actions = (0..n)
        .map(|b| {
            let votes = white[b] + black[b];
            if votes + clean[b] == 0 {
                // Only review windows saw this block.
                if review[b] > 0 {
                    BlockAction::Review
                } else {
                    BlockAction::Keep
                }
            } else if votes >= clean[b] && votes > 0 {
                if white[b] > black[b] {
                    BlockAction::Repaint(PaintColor::White)
                } else if black[b] > white[b] {
                    BlockAction::Repaint(PaintColor::Black)
                } else {
                    BlockAction::Review
                }
            } else {
                BlockAction::Keep
            }
        })
        .collect();

    Ok(DecisionSummary { triples, actions })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn net() -> HopfieldNet {
        HopfieldNet::alternation()
    }

    #[test]
    fn perfect_alternation_orders_nothing() {
        let summary = decide_ternary(&[1, -1, 1, -1, 1], &net()).unwrap();
        assert!(summary.repaints().is_empty());
        assert!(summary.reviews().is_empty());
        assert!(summary
            .actions
            .iter()
            .all(|a| matches!(a, BlockAction::Keep)));
        for t in &summary.triples {
            match &t.outcome {
                TripleOutcome::Matched { sweeps, orders, .. } => {
                    assert_eq!(*sweeps, 1);
                    assert!(orders.is_empty());
                }
                other => panic!("unexpected outcome {other:?}"),
            }
        }
    }

    #[test]
    fn single_erased_block_is_painted_white() {
        // Third block (index 2) erased in a white-led alternation.
        let summary = decide_ternary(&[1, -1, 0, -1, 1], &net()).unwrap();
        assert_eq!(summary.repaints(), vec![(2, PaintColor::White)]);
        assert!(summary.reviews().is_empty());
    }

    #[test]
    fn minimal_sequence_paints_its_erased_lead_block() {
        let summary = decide_ternary(&[0, -1, 1], &net()).unwrap();
        assert_eq!(summary.repaints(), vec![(0, PaintColor::White)]);
        match &summary.triples[0].outcome {
            TripleOutcome::Matched { memory, sweeps, .. } => {
                assert_eq!(*memory, [1, -1, 1]);
                assert_eq!(*sweeps, 2);
            }
            other => panic!("unexpected outcome {other:?}"),
        }
    }

    #[test]
    fn all_zero_window_flags_review_but_neighbors_still_paint() {
        // Blocks 2..5 erased out of seven: window (2,3,4) is all-zero and
        // must not paint, yet flanking windows supply orders for every
        // erased block.
        let summary = decide_ternary(&[1, -1, 0, 0, 0, -1, 1], &net()).unwrap();
        let repaints = summary.repaints();
        assert_eq!(
            repaints,
            vec![
                (2, PaintColor::White),
                (3, PaintColor::Black),
                (4, PaintColor::White)
            ]
        );
        assert!(summary.reviews().is_empty());
        assert!(summary
            .triples
            .iter()
            .any(|t| matches!(t.outcome, TripleOutcome::Unrecognizable { .. })));
    }

    #[test]
    fn blocks_seen_only_by_zero_windows_go_to_review() {
        // Five consecutive erased blocks: the middle one is covered only by
        // all-zero windows.
        let summary = decide_ternary(&[1, -1, 0, 0, 0, 0, 0, -1, 1], &net()).unwrap();
        assert_eq!(summary.reviews(), vec![4]);
        let painted: Vec<usize> = summary.repaints().iter().map(|r| r.0).collect();
        assert_eq!(painted, vec![2, 3, 5, 6]);
    }

    #[test]
    fn adjacent_erasures_both_get_their_alternation_color() {
        let summary = decide_ternary(&[1, 0, 0, -1, 1], &net()).unwrap();
        assert_eq!(
            summary.repaints(),
            vec![(1, PaintColor::Black), (2, PaintColor::White)]
        );
    }

    #[test]
    fn short_sequences_are_rejected() {
        assert!(matches!(
            decide_ternary(&[1, -1], &net()),
            Err(VisionError::TooFewSegments(2))
        ));
    }
}
