//! Self-contained PRNG for the seeded simulations and test suites.
//!
//! Pinned-seed tests must reproduce bit-for-bit on any platform or port of
//! this code, so the generator is spelled out here rather than taken from
//! the environment. The stream is xoshiro256** (Blackman/Vigna) seeded from
//! the SplitMix64 finalizer:
//!
//! * `GOLDEN_GAMMA = 0x9E3779B97F4A7C15` (SplitMix64 increment),
//! * `mix64` multipliers `0xBF58476D1CE4E5B9` and `0x94D049BB133111EB`,
//! * xoshiro256** scrambler `rotl(s1 * 5, 7) * 9`, shifts 17/45.
//!
//! State word `i` of a generator with seed `s` is
//! `mix64(s + (i+1) * GOLDEN_GAMMA)`, i.e. the SplitMix64 output stream.
//! Substream `i` of a run with seed `s` is a generator seeded with
//! SplitMix64 output `i`; simulation walks draw from per-walk substreams so
//! results do not depend on execution order.

pub const GOLDEN_GAMMA: u64 = 0x9E37_79B9_7F4A_7C15;

/// SplitMix64 finalizer.
pub fn mix64(z: u64) -> u64 {
    let z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    let z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

fn splitmix_stream(seed: u64, index: u64) -> u64 {
    mix64(seed.wrapping_add(GOLDEN_GAMMA.wrapping_mul(index.wrapping_add(1))))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Xoshiro256StarStar {
    s: [u64; 4],
}

impl Xoshiro256StarStar {
    pub fn from_seed(seed: u64) -> Self {
        let mut s = [0u64; 4];
        for (i, word) in s.iter_mut().enumerate() {
            *word = splitmix_stream(seed, i as u64);
        }
        if s == [0, 0, 0, 0] {
            s[0] = GOLDEN_GAMMA;
        }
        Xoshiro256StarStar { s }
    }

    /// Independent substream for walk `index` under run seed `seed`.
    pub fn substream(seed: u64, index: u64) -> Self {
        Self::from_seed(splitmix_stream(seed, index))
    }

    pub fn next_u64(&mut self) -> u64 {
        let result = self.s[1].wrapping_mul(5).rotate_left(7).wrapping_mul(9);
        let t = self.s[1] << 17;
        self.s[2] ^= self.s[0];
        self.s[3] ^= self.s[1];
        self.s[1] ^= self.s[2];
        self.s[0] ^= self.s[3];
        self.s[2] ^= t;
        self.s[3] = self.s[3].rotate_left(45);
        result
    }

    /// Unbiased uniform draw from `0..n` by rejection.
    pub fn gen_range(&mut self, n: u64) -> u64 {
        assert!(n > 0, "gen_range needs a positive bound");
        let threshold = n.wrapping_neg() % n; // 2^64 mod n
        loop {
            let r = self.next_u64();
            if r >= threshold {
                return r % n;
            }
        }
    }

    pub fn gen_index(&mut self, n: usize) -> usize {
        self.gen_range(n as u64) as usize
    }
}
