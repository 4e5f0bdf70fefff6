//! Seeded randomness for BogoSort and for random benchmark inputs.
//!
//! The generator is xoshiro256++ seeded through SplitMix64. Bounded draws use
//! the multiply-shift reduction `(x * bound) >> 64`, so a given seed yields the
//! same shuffles on every platform and every build.

use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::Xoshiro256PlusPlus;

use crate::Element;

#[derive(Debug, Clone)]
pub struct SeededRng(Xoshiro256PlusPlus);

impl SeededRng {
    pub fn new(seed: u64) -> Self {
        SeededRng(Xoshiro256PlusPlus::seed_from_u64(seed))
    }

    /// Uniform-enough index in `0..bound`. `bound` must be non-zero.
    #[inline]
    pub fn below(&mut self, bound: usize) -> usize {
        debug_assert!(bound > 0);
        ((u128::from(self.0.next_u64()) * bound as u128) >> 64) as usize
    }

    /// Fisher–Yates, walking from the last slot down.
    pub fn shuffle<T>(&mut self, a: &mut [T]) {
        for i in (1..a.len()).rev() {
            let j = self.below(i + 1);
            a.swap(i, j);
        }
    }
}

/// Mixes a base seed with a benchmark cell so each `(n, trial)` gets its own
/// independent stream.
pub fn derive_seed(base: u64, n: u64, trial: u64) -> u64 {
    base ^ n.wrapping_mul(0x9E37_79B9_7F4A_7C15)
        ^ trial.wrapping_mul(0xD1B5_4A32_D192_ED03).rotate_left(17)
}

/// A uniformly random ordering of `1..=n`.
pub fn random_permutation(n: usize, seed: u64) -> Vec<Element> {
    let mut a: Vec<Element> = (1..=n as Element).collect();
    SeededRng::new(seed).shuffle(&mut a);
    a
}
