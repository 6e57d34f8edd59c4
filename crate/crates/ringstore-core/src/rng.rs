//! Seeded pseudorandom stream shared by every randomized operation in the
//! crate, so runs are reproducible bit-for-bit from a single `u64` seed.

/// 64-bit linear congruential generator. Field values are taken from the
/// high 32 bits of each step, reduced modulo p.
#[derive(Debug, Clone)]
pub struct Lcg {
    state: u64,
}

const MULTIPLIER: u64 = 6364136223846793005;
const INCREMENT: u64 = 1442695040888963407;

impl Lcg {
    pub fn new(seed: u64) -> Self {
        Lcg { state: seed }
    }

    pub fn next_u32(&mut self) -> u32 {
        self.state = self
            .state
            .wrapping_mul(MULTIPLIER)
            .wrapping_add(INCREMENT);
        (self.state >> 32) as u32
    }

    /// A field value in [0, p).
    pub fn next_mod(&mut self, p: u64) -> u64 {
        debug_assert!(p > 0 && p <= u32::MAX as u64 + 1);
        u64::from(self.next_u32()) % p
    }

    /// A vector of `len` field values in [0, p).
    pub fn vector_mod(&mut self, p: u64, len: usize) -> Vec<u64> {
        (0..len).map(|_| self.next_mod(p)).collect()
    }
}
