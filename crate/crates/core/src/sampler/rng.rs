//! Deterministic, splittable random streams.
//!
//! Every Monte-Carlo draw has its own ChaCha12 stream keyed by
//! `SplitMix64(seed, sample_index)`. Batches are therefore reproducible
//! bit-for-bit for a given `(seed, N)` and partition freely across
//! workers: the multiset of draws does not depend on the work split.
//! Gaussians use the ziggurat sampler, chi variates the Marsaglia–Tsang
//! gamma sampler, both from `rand_distr` with fixed algorithms.

use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;

#[inline]
fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9E37_79B9_7F4A_7C15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// The per-sample generator for draw `index` of the batch `seed`.
pub fn stream_rng(seed: u64, index: u64) -> ChaCha12Rng {
    let mut state = seed ^ splitmix64(&mut { index });
    let mut key = [0u8; 32];
    for chunk in key.chunks_exact_mut(8) {
        chunk.copy_from_slice(&splitmix64(&mut state).to_le_bytes());
    }
    ChaCha12Rng::from_seed(key)
}
