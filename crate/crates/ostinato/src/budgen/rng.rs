/// A seeded, platform-independent stream of uniform draws.
///
/// The stream is a plain SplitMix64: the same seed produces the same
/// draws on every platform and in every release of this crate — traces
/// recorded by one run replay everywhere. `ALGORITHM` names the stream so
/// that a future change of generator cannot masquerade as the old one.
#[derive(Debug, Clone)]
pub struct RandomSource {
    seed: u64,
    state: u64,
}

/// Identifier of the draw stream implemented by [`RandomSource`].
pub const ALGORITHM: &str = "splitmix64/1";

impl RandomSource {
    pub fn new(seed: u64) -> Self {
        RandomSource { seed, state: seed }
    }

    /// The seed this source was created with.
    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform draw in `0..bound` (rejection sampling, exactly uniform).
    ///
    /// # Panics
    /// Panics if `bound` is zero; callers guard empty ranges themselves.
    pub fn pick(&mut self, bound: usize) -> usize {
        assert!(bound > 0, "cannot draw from an empty range");
        let bound = bound as u64;
        let threshold = bound.wrapping_neg() % bound;
        loop {
            let value = self.next_u64();
            if value >= threshold {
                return (value % bound) as usize;
            }
        }
    }

    /// Uniform element of a nonempty slice.
    pub fn choose<'a, T>(&mut self, items: &'a [T]) -> &'a T {
        &items[self.pick(items.len())]
    }
}
