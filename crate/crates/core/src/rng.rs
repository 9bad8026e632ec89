//! Seeded randomness shared by every algorithm.
//!
//! Each run owns a single ChaCha8 stream created from its seed. The stream is
//! portable across platforms, so identical seeds give bit-identical runs.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub type RunRng = ChaCha8Rng;

pub fn seeded(seed: u64) -> RunRng {
    ChaCha8Rng::seed_from_u64(seed)
}
