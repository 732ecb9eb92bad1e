//! Seeded xoshiro256++ generator.
//!
//! The 256-bit state is filled with four consecutive splitmix64 outputs of
//! the seed, and uniform reals take the top 53 bits of each output. Both
//! algorithms are fixed so point clouds are reproducible across platforms.

/// splitmix64, used only to expand a 64-bit seed into generator state.
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
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Xoshiro256PlusPlus {
    s: [u64; 4],
}

impl Xoshiro256PlusPlus {
    pub fn seed_from_u64(seed: u64) -> Self {
        let mut sm = SplitMix64::new(seed);
        let s = [sm.next_u64(), sm.next_u64(), sm.next_u64(), sm.next_u64()];
        Xoshiro256PlusPlus { s }
    }

    /// Raw state constructor. An all-zero state is a fixed point and never
    /// produced by [`Self::seed_from_u64`].
    pub fn from_state(s: [u64; 4]) -> Self {
        Xoshiro256PlusPlus { s }
    }

    pub fn next_u64(&mut self) -> u64 {
        let s = &mut self.s;
        let result = s[0].wrapping_add(s[3]).rotate_left(23).wrapping_add(s[0]);
        let t = s[1] << 17;
        s[2] ^= s[0];
        s[3] ^= s[1];
        s[1] ^= s[2];
        s[0] ^= s[3];
        s[2] ^= t;
        s[3] = s[3].rotate_left(45);
        result
    }

    /// Uniform draw in `[0, 1)` with 53 random mantissa bits.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }
}

/// Functional form: returns the next uniform draw and the advanced state.
pub fn next_random(state: Xoshiro256PlusPlus) -> (f64, Xoshiro256PlusPlus) {
    let mut state = state;
    let u = state.next_f64();
    (u, state)
}

/// Inverse-CDF sampler over a fixed list of probabilities.
///
/// Index `i` owns the right-open interval `[c_{i-1}, c_i)` of cumulative sums,
/// so zero-probability entries are never drawn.
#[derive(Debug, Clone)]
pub struct Categorical {
    cumulative: Vec<f64>,
    last_live: usize,
}

impl Categorical {
    pub fn new(probs: &[f64]) -> Self {
        assert!(!probs.is_empty(), "categorical over an empty list");
        let mut acc = 0.0;
        let cumulative = probs
            .iter()
            .map(|&p| {
                acc += p;
                acc
            })
            .collect();
        let last_live = probs.iter().rposition(|&p| p > 0.0).unwrap_or(0);
        Categorical {
            cumulative,
            last_live,
        }
    }

    /// Maps `u ∈ [0, 1)` to an index.
    pub fn index_of(&self, u: f64) -> usize {
        let i = self.cumulative.partition_point(|&c| c <= u);
        // rounding can leave the total slightly below 1
        i.min(self.last_live)
    }

    pub fn sample(&self, rng: &mut Xoshiro256PlusPlus) -> usize {
        self.index_of(rng.next_f64())
    }

    pub fn len(&self) -> usize {
        self.cumulative.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cumulative.is_empty()
    }
}
