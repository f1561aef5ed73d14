//! Exhaustive check of the three-neuron associative memory against an
//! independently written brute-force reference. The reference builds its
//! weight matrix from scratch, replays the sequential update schedule with
//! its own loop structure, and records the whole trajectory, so the two
//! implementations share nothing but the contract.

use sidewalker_core::vision::hopfield::{train_hopfield, HopfieldNet};

const MEMORIES: [[i8; 3]; 2] = [[1, -1, 1], [-1, 1, -1]];

/// Brute-force reference: outer-product weights and sweep-by-sweep updates,
/// returning every intermediate state (index 0 is the input).
struct Oracle {
    w: Vec<Vec<i64>>,
}

impl Oracle {
    fn new(memories: &[[i8; 3]]) -> Self {
        let mut w = vec![vec![0i64; 3]; 3];
        for v in memories {
            for (i, row) in w.iter_mut().enumerate() {
                for (j, wij) in row.iter_mut().enumerate() {
                    *wij += i64::from(v[i]) * i64::from(v[j]);
                }
            }
        }
        for (i, row) in w.iter_mut().enumerate() {
            row[i] -= memories.len() as i64;
        }
        Oracle { w }
    }

    /// Runs until a sweep changes nothing; the trajectory includes the
    /// confirming sweep's (identical) state, so `trajectory.len() - 1` is
    /// the sweep count.
    fn run(&self, input: [i8; 3], cap: usize) -> Option<Vec<[i8; 3]>> {
        let mut states = vec![input];
        loop {
            if states.len() > cap {
                return None;
            }
            let previous = *states.last().unwrap();
            let mut s = previous;
            for i in 0..3 {
                let h: i64 = self.w[i]
                    .iter()
                    .zip(s.iter())
                    .map(|(&wij, &sj)| wij * i64::from(sj))
                    .sum();
                s[i] = if h > 0 {
                    1
                } else if h < 0 {
                    -1
                } else {
                    s[i]
                };
            }
            states.push(s);
            if s == previous {
                return Some(states);
            }
        }
    }

    fn energy(&self, s: [i8; 3]) -> i64 {
        let mut acc = 0i64;
        for i in 0..3 {
            for j in 0..3 {
                acc += self.w[i][j] * i64::from(s[i]) * i64::from(s[j]);
            }
        }
        -acc // twice the conventional energy; ordering is all that matters
    }
}

fn all_ternary() -> Vec<[i8; 3]> {
    let mut inputs = Vec::with_capacity(27);
    for a in [-1i8, 0, 1] {
        for b in [-1i8, 0, 1] {
            for c in [-1i8, 0, 1] {
                inputs.push([a, b, c]);
            }
        }
    }
    inputs
}

#[test]
fn weight_matrix_is_exactly_the_hand_derivation() {
    let net = HopfieldNet::alternation();
    assert_eq!(*net.weights(), [[0, -2, 2], [-2, 0, -2], [2, -2, 0]]);
    let oracle = Oracle::new(&MEMORIES);
    for i in 0..3 {
        for j in 0..3 {
            assert_eq!(i64::from(net.weights()[i][j]), oracle.w[i][j]);
        }
    }
}

#[test]
fn single_memory_weights_agree_too() {
    let net = train_hopfield(&[[1, 1, 1]]).unwrap();
    let oracle = Oracle::new(&[[1, 1, 1]]);
    for i in 0..3 {
        for j in 0..3 {
            assert_eq!(i64::from(net.weights()[i][j]), oracle.w[i][j]);
        }
    }
    assert_eq!(*net.weights(), [[0, 1, 1], [1, 0, 1], [1, 1, 0]]);
}

#[test]
fn exhaustive_recall_matches_the_oracle_state_for_state() {
    let net = HopfieldNet::alternation();
    let oracle = Oracle::new(&MEMORIES);
    for input in all_ternary() {
        let trajectory = oracle
            .run(input, 10)
            .unwrap_or_else(|| panic!("oracle failed to converge on {input:?}"));
        let result = net.recall(input).unwrap();
        assert_eq!(
            result.final_state,
            *trajectory.last().unwrap(),
            "final state diverges on {input:?}"
        );
        assert_eq!(
            result.sweeps,
            trajectory.len() - 1,
            "sweep count diverges on {input:?}"
        );
    }
}

#[test]
fn everything_but_the_zero_vector_lands_on_a_memory_within_three_sweeps() {
    let net = HopfieldNet::alternation();
    for input in all_ternary() {
        let result = net.recall(input).unwrap();
        if input == [0, 0, 0] {
            assert_eq!(result.final_state, [0, 0, 0]);
            assert_eq!(result.sweeps, 1);
            assert_eq!(result.matched, None);
        } else {
            assert!(
                MEMORIES.contains(&result.final_state),
                "{input:?} ended at {:?}",
                result.final_state
            );
            assert!(
                result.sweeps <= 3,
                "{input:?} took {} sweeps",
                result.sweeps
            );
            assert!(result.matched.is_some());
        }
    }
}

#[test]
fn both_memories_are_one_sweep_fixed_points() {
    let net = HopfieldNet::alternation();
    for (index, memory) in MEMORIES.iter().enumerate() {
        let result = net.recall(*memory).unwrap();
        assert_eq!(result.final_state, *memory);
        assert_eq!(result.sweeps, 1);
        assert_eq!(result.matched, Some(index));
    }
}

#[test]
fn recall_commutes_with_global_sign_flip() {
    let net = HopfieldNet::alternation();
    for input in all_ternary() {
        let flipped = [-input[0], -input[1], -input[2]];
        let a = net.recall(input).unwrap();
        let b = net.recall(flipped).unwrap();
        assert_eq!(
            b.final_state,
            [-a.final_state[0], -a.final_state[1], -a.final_state[2]],
            "sign symmetry broken on {input:?}"
        );
        assert_eq!(a.sweeps, b.sweeps);
    }
}

#[test]
fn oracle_trajectories_never_raise_the_energy() {
    let oracle = Oracle::new(&MEMORIES);
    for input in all_ternary() {
        let trajectory = oracle.run(input, 10).unwrap();
        for pair in trajectory.windows(2) {
            assert!(
                oracle.energy(pair[1]) <= oracle.energy(pair[0]),
                "energy rose between {:?} and {:?}",
                pair[0],
                pair[1]
            );
        }
    }
}
