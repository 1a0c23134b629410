//! Counter-based pseudorandom numbers.
//!
//! Sampling and randomized factorization both need reproducible streams.
//! The generator here is the SplitMix64 finalizer applied to a counter, so
//! the i-th draw of a stream is a pure function of (seed, i). That makes
//! parallel partitioning of sample indices deterministic regardless of
//! thread count.

/// SplitMix64 output function: a bijective mixer on 64-bit words.
#[inline]
pub fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// A keyed stream of 64-bit words: `word(k)` is a pure function of
/// (seed, stream, k).
#[derive(Debug, Clone, Copy)]
pub struct CounterRng {
    key: u64,
}

impl CounterRng {
    /// Derive the stream keyed by `(seed, stream)`.
    pub fn new(seed: u64, stream: u64) -> Self {
        let key = splitmix64(seed ^ splitmix64(stream.wrapping_mul(0xa076_1d64_78bd_642f)));
        CounterRng { key }
    }

    /// The `k`-th word of the stream.
    #[inline]
    pub fn word(&self, k: u64) -> u64 {
        splitmix64(self.key.wrapping_add(k.wrapping_mul(0x2545_f491_4f6c_dd1d)))
    }

    /// Uniform draw from `[0, range)`, exact (rejection sampling).
    ///
    /// Consumes a variable number of words starting at counter `k`; the
    /// result depends only on (stream key, k, range). Returns the value and
    /// the number of words consumed.
    #[inline]
    pub fn uniform_at(&self, k: u64, range: u64) -> (u64, u64) {
        debug_assert!(range > 0);
        // Largest multiple of `range` below 2^64; draws at or above it are
        // rejected so every residue is equally likely.
        let limit = u64::MAX - (u64::MAX % range + 1) % range;
        let mut used = 0u64;
        loop {
            let w = self.word(k.wrapping_add(used));
            used += 1;
            if w <= limit {
                return (w % range, used);
            }
        }
    }
}

/// A tiny sequential PRNG for randomized algorithms (equal-degree splitting).
#[derive(Debug, Clone)]
pub struct SeqRng {
    state: u64,
}

impl SeqRng {
    pub fn new(seed: u64) -> Self {
        SeqRng { state: splitmix64(seed) }
    }

    #[inline]
    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e37_79b9_7f4a_7c15);
        splitmix64(self.state)
    }

    /// Uniform in `[0, range)` by rejection.
    pub fn below(&mut self, range: u64) -> u64 {
        debug_assert!(range > 0);
        let limit = u64::MAX - (u64::MAX % range + 1) % range;
        loop {
            let w = self.next_u64();
            if w <= limit {
                return w % range;
            }
        }
    }
}
