//! Three-neuron Hopfield associative memory over block triples.
//!
//! Training follows the outer-product rule `W = Σ V·Vᵀ − m·I` (m = number of
//! stored vectors), which zeroes the diagonal and keeps W symmetric. Recall
//! runs in sweeps over the neurons; *within* a sweep the neurons update
//! sequentially in index order, each seeing its predecessors' fresh values,
//! and a zero local field keeps the neuron's previous value. A sweep that
//! changes nothing confirms the fixed point and is included in the count, so
//! a stored memory scores exactly 1 sweep.
//!
//! Sequential updating is deliberate: with simultaneous updates this weight
//! matrix oscillates on six of the 27 ternary inputs (for example
//! [1, 1, 0] ↔ [−1, −1, 0]), while the sequential schedule provably
//! converges — each flip strictly lowers the energy −½·sᵀWs — and lands
//! every non-degenerate input on a stored pattern within three sweeps.

use thiserror::Error;

/// Hard stop for the recall loop. The sequential schedule converges long
/// before this; the cap exists so a future weight matrix that oscillates is
/// reported instead of hanging.
pub const SWEEP_CAP: usize = 10;

/// Trained three-neuron network.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HopfieldNet {
    weights: [[i32; 3]; 3],
    memories: Vec<[i8; 3]>,
}

/// Outcome of one recall.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecallResult {
    /// State after the confirming sweep. Components stay ternary: a zero
    /// input component with zero local field keeps its zero.
    pub final_state: [i8; 3],
    /// Number of sweeps including the confirming one (≥ 1).
    pub sweeps: usize,
    /// Index into the stored memories when the final state equals one.
    pub matched: Option<usize>,
}

/// Training and recall failures.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum HopfieldError {
    #[error("need 1 or 2 memories, got {0}")]
    MemoryCount(usize),
    #[error("memory components must be -1 or +1, got {0}")]
    MemoryValue(i8),
    #[error("recall input components must be -1, 0 or +1, got {0}")]
    InputValue(i8),
    #[error("recall did not converge within {SWEEP_CAP} sweeps; cycle states {states:?}")]
    NonConvergent { states: Vec<[i8; 3]> },
}

/// Builds the weight matrix from one or two fundamental vectors.
pub fn train_hopfield(memories: &[[i8; 3]]) -> Result<HopfieldNet, HopfieldError> {
    if memories.is_empty() || memories.len() > 2 {
        return Err(HopfieldError::MemoryCount(memories.len()));
    }
    for memory in memories {
        if let Some(&bad) = memory.iter().find(|v| v.abs() != 1) {
            return Err(HopfieldError::MemoryValue(bad));
        }
    }
    let mut weights = [[0i32; 3]; 3];
    for memory in memories {
        for (i, row) in weights.iter_mut().enumerate() {
            for (j, w) in row.iter_mut().enumerate() {
                *w += i32::from(memory[i]) * i32::from(memory[j]);
            }
        }
    }
    let m = memories.len() as i32;
    for (i, row) in weights.iter_mut().enumerate() {
        row[i] -= m;
    }
    Ok(HopfieldNet {
        weights,
        memories: memories.to_vec(),
    })
}

impl HopfieldNet {
    /// The network trained on the two sidewalk alternation patterns
    /// [1, −1, 1] and [−1, 1, −1].
    pub fn alternation() -> Self {
        train_hopfield(&[[1, -1, 1], [-1, 1, -1]]).expect("fixed memories are valid")
    }

    pub fn weights(&self) -> &[[i32; 3]; 3] {
        &self.weights
    }

    pub fn memories(&self) -> &[[i8; 3]] {
        &self.memories
    }

    /// Energy −½·sᵀWs of a state.
    pub fn energy(&self, state: &[i8; 3]) -> f64 {
        let mut acc = 0i32;
        for i in 0..3 {
            for j in 0..3 {
                acc += self.weights[i][j] * i32::from(state[i]) * i32::from(state[j]);
            }
        }
        -0.5 * f64::from(acc)
    }

    /// Runs recall sweeps until a full sweep changes nothing.
    pub fn recall(&self, input: [i8; 3]) -> Result<RecallResult, HopfieldError> {
        if let Some(&bad) = input.iter().find(|v| v.abs() > 1) {
            return Err(HopfieldError::InputValue(bad));
        }
        let mut state = input;
        let mut visited = vec![state];
        for sweep in 1..=SWEEP_CAP {
            let mut changed = false;
            for i in 0..3 {
                let field: i32 = (0..3)
                    .map(|j| self.weights[i][j] * i32::from(state[j]))
                    .sum();
                let next = match field.signum() {
                    1 => 1,
                    -1 => -1,
                    _ => state[i],
                };
                if next != state[i] {
                    state[i] = next;
                    changed = true;
                }
            }
            if !changed {
                let matched = self.memories.iter().position(|m| *m == state);
                return Ok(RecallResult {
                    final_state: state,
                    sweeps: sweep,
                    matched,
                });
            }
            visited.push(state);
        }
        Err(HopfieldError::NonConvergent { states: visited })
    }
}
