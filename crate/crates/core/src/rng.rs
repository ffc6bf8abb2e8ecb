//! Seeds and reproducible random streams.
//!
//! Every random choice in the crate draws from ChaCha8, a counter-based
//! generator whose output depends only on `(key, stream, counter)`. A
//! [`RngSeed`] expands its 64-bit seed into the 256-bit key with
//! `rand_core`'s PCG32-based `seed_from_u64`, and selects the ChaCha stream
//! with its `stream` field. Sub-streams for trials and retries are derived
//! with the SplitMix64 finaliser (multipliers `0xBF58476D1CE4E5B9`,
//! `0x94D049BB133111EB`, increment `0x9E3779B97F4A7C15`), so a trial's stream
//! depends only on its parent and index, never on scheduling.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RngSeed {
    pub seed: u64,
    pub stream: u64,
}

impl RngSeed {
    pub const fn new(seed: u64) -> Self {
        RngSeed { seed, stream: 0 }
    }

    pub fn rng(self) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(self.stream);
        rng
    }

    /// Independent sub-stream number `index`.
    pub fn child(self, index: u64) -> Self {
        RngSeed {
            seed: self.seed,
            stream: splitmix64(self.stream ^ splitmix64(index.wrapping_add(1))),
        }
    }
}

impl From<u64> for RngSeed {
    fn from(seed: u64) -> Self {
        RngSeed::new(seed)
    }
}

pub fn splitmix64(x: u64) -> u64 {
    let mut z = x.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}
