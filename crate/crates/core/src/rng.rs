//! Seeded random streams.
//!
//! Every sample is drawn from a `ChaCha8Rng` seeded with a 64-bit value
//! derived from the master seed and the coordinates of the draw. Derivation
//! folds each coordinate into the state with the SplitMix64 finalizer, so
//! `stream_seed(s, &[a, b])` and `stream_seed(s, &[b, a])` differ.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub type SampleRng = ChaCha8Rng;

#[inline]
fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Seed for the stream addressed by `coords` under `master`.
pub fn stream_seed(master: u64, coords: &[u64]) -> u64 {
    coords.iter().fold(splitmix64(master), |acc, &c| {
        splitmix64(acc ^ splitmix64(c))
    })
}

pub fn rng_from_seed(seed: u64) -> SampleRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Generator for replicate `replicate` of the cell `(n, alpha_index)`.
pub fn replicate_rng(master: u64, n: usize, alpha_index: usize, replicate: usize) -> SampleRng {
    rng_from_seed(stream_seed(
        master,
        &[n as u64, alpha_index as u64, replicate as u64],
    ))
}
