//! Portable random hosts.
//!
//! The generator is SplitMix64 (state advances by `0x9E3779B97F4A7C15`, output
//! mixed with the standard `30/27/31` xor-shift-multiply finalizer). A host
//! draws one value per candidate chord, in lexicographic pair order, and keeps
//! the chord when `(x >> 11) * 2^-53 < density`. Any implementation of these two
//! rules reproduces the same hosts from the same seed.

use crate::graph::PathGraph;

#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform in `[0, 1)` with 53 bits.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform in `0..bound` by rejection.
    pub fn below(&mut self, bound: u64) -> u64 {
        assert!(bound > 0);
        let zone = u64::MAX - u64::MAX % bound;
        loop {
            let x = self.next_u64();
            if x < zone {
                return x % bound;
            }
        }
    }
}

/// A host on `n` vertices keeping each possible chord with probability `density`.
pub fn random_host(n: usize, density: f64, seed: u64) -> PathGraph {
    let mut rng = SplitMix64::new(seed);
    let mut chords = Vec::new();
    for i in 0..n {
        for j in i + 2..n {
            if rng.next_f64() < density {
                chords.push((i, j));
            }
        }
    }
    PathGraph::new(n, chords).expect("pairs of span at least 2")
}
