//! Seeded random streams.
//!
//! Every randomized decision draws from a ChaCha8 stream selected by purpose,
//! so adding draws for one purpose never shifts another.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Purpose of a random stream.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[repr(u64)]
pub enum Stream {
    /// LAR's subsampling of the light elements.
    Sample = 0,
    /// RLA's keep-or-drop coin per recorded candidate.
    Coin = 1,
    /// Graph structure and edge weights in generators.
    Graph = 2,
    /// Element costs in generators.
    Cost = 3,
    /// Instance-shape choices (edge probability, budget fraction).
    Shape = 4,
    /// Similarity feature vectors.
    Features = 5,
}

pub fn stream(seed: u64, purpose: Stream) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(purpose as u64);
    rng
}

/// Mixes a base seed with an index (SplitMix64 finalizer), for per-repetition
/// or per-instance seeds.
pub fn derive_seed(seed: u64, index: u64) -> u64 {
    let mut z = seed.wrapping_add(index.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}
