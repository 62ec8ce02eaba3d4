//! SplitMix64, the pinned pseudorandom sequence. Every seeded draw in this
//! crate (field values for the k-path statistic, random test instances) comes
//! from this generator so that outputs are reproducible bit-for-bit across
//! runs, machines, and implementations.

/// SplitMix64 with the standard constants.
#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E3779B97F4A7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
        z ^ (z >> 31)
    }

    /// Uniform draw from `0..bound` by rejection; `bound` must be nonzero.
    pub fn next_below(&mut self, bound: u64) -> u64 {
        assert!(bound > 0, "next_below requires a nonzero bound");
        let zone = u64::MAX - (u64::MAX % bound);
        loop {
            let v = self.next_u64();
            if v < zone {
                return v % bound;
            }
        }
    }

    /// Bernoulli draw with probability `num/den`.
    pub fn next_bool(&mut self, num: u64, den: u64) -> bool {
        self.next_below(den) < num
    }
}
