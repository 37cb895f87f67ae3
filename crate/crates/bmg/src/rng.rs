//! Seeded random numbers with a fixed, portable algorithm.
//!
//! Randomized constructions (bitournaments, random trees) are part of the
//! external contract: the same seed must produce the same object in any
//! reimplementation. To that end this is a plain 64-bit linear congruential
//! generator with Knuth's MMIX constants, not an abstract RNG trait:
//!
//! ```text
//! state' = state * 6364136223846793005 + 1442695040888963407   (mod 2^64)
//! ```
//!
//! Each call to `next` returns the new state. Bounded draws use only the
//! high 32 bits, which are the strongest bits of an LCG:
//! `below(n) = ((state' >> 32) * n) >> 32`.

#[derive(Debug, Clone)]
pub struct Lcg64 {
    state: u64,
}

impl Lcg64 {
    pub fn new(seed: u64) -> Self {
        Lcg64 { state: seed }
    }

    pub fn next(&mut self) -> u64 {
        self.state = self.state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        self.state
    }

    /// Uniform draw from 0..n (n ≥ 1).
    pub fn below(&mut self, n: u64) -> u64 {
        assert!(n >= 1);
        ((self.next() >> 32) * n) >> 32
    }

    pub fn coin(&mut self) -> bool {
        self.below(2) == 1
    }
}
