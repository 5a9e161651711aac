//! Inputs shared by the construction benchmarks.

use bdh_core::{generate_random_bdh, ConstructionSequence};

pub const SIZES: [usize; 4] = [1_000, 10_000, 20_000, 40_000];
pub const TWIN_PROBS: [f64; 3] = [0.0, 0.5, 0.9];
pub const SEED: u64 = 0x5eed;

/// Random construction sequence for a benchmark point.
pub fn instance(n: usize, twin_prob: f64) -> ConstructionSequence {
    generate_random_bdh(n, twin_prob, SEED).expect("benchmark parameters are valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn instances_are_deterministic() {
        assert_eq!(instance(500, 0.5), instance(500, 0.5));
        assert_eq!(instance(500, 0.5).n(), 500);
    }
}
