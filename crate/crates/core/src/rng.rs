//! Reproducible pseudo-random source for test instances.
//!
//! A 64-bit linear congruential generator with Knuth's MMIX constants:
//!
//! ```text
//! state ← state · 6364136223846793005 + 1442695040888963407   (mod 2^64)
//! output = state >> 32                                          (upper 32 bits)
//! ```
//!
//! The state is initialised to the seed itself and advanced once before the
//! first output. `below(k)` reduces one output modulo `k`; the slight modulo
//! bias is accepted in exchange for being trivially portable.

#[derive(Debug, Clone)]
pub struct Lcg {
    state: u64,
}

const MULTIPLIER: u64 = 6_364_136_223_846_793_005;
const INCREMENT: u64 = 1_442_695_040_888_963_407;

impl Lcg {
    pub fn new(seed: u64) -> Self {
        Self { state: seed }
    }

    pub fn next_u32(&mut self) -> u32 {
        self.state = self.state.wrapping_mul(MULTIPLIER).wrapping_add(INCREMENT);
        (self.state >> 32) as u32
    }

    /// Uniform-ish value in `0..k`. Panics if `k == 0`.
    pub fn below(&mut self, k: u64) -> u64 {
        assert!(k > 0, "empty range");
        self.next_u32() as u64 % k
    }

    /// Value in the inclusive range `lo..=hi`.
    pub fn range_i64(&mut self, lo: i64, hi: i64) -> i64 {
        assert!(lo <= hi, "empty range");
        lo + self.below((hi - lo) as u64 + 1) as i64
    }

    /// Derives an independent stream, e.g. one per grid cell.
    pub fn fork(&self, index: u64) -> Self {
        let mut child = Self::new(self.state ^ index.wrapping_mul(0x9E37_79B9_7F4A_7C15));
        child.next_u32();
        child
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_sequence() {
        // state_1 = 42·a + c mod 2^64
        let mut r = Lcg::new(42);
        let s1 = 42u64.wrapping_mul(MULTIPLIER).wrapping_add(INCREMENT);
        assert_eq!(r.next_u32(), (s1 >> 32) as u32);
        let s2 = s1.wrapping_mul(MULTIPLIER).wrapping_add(INCREMENT);
        assert_eq!(r.next_u32(), (s2 >> 32) as u32);
    }

    #[test]
    fn ranges() {
        let mut r = Lcg::new(7);
        for _ in 0..1000 {
            let v = r.range_i64(-3, 3);
            assert!((-3..=3).contains(&v));
        }
        let a: Vec<u32> = {
            let mut r = Lcg::new(1);
            (0..5).map(|_| r.next_u32()).collect()
        };
        let b: Vec<u32> = {
            let mut r = Lcg::new(1);
            (0..5).map(|_| r.next_u32()).collect()
        };
        assert_eq!(a, b);
    }
}
