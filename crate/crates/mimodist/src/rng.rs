//! Seed derivation and deterministic RNG construction.
//!
//! All randomness in the crate flows from a single root seed. Component
//! streams are derived as `splitmix64(root ^ fnv1a(component) ^ index * PHI)`,
//! so independently indexed work items (channels, OFDM symbols, dataset
//! records) can be generated in any order, or in parallel, with identical
//! results.

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

const FNV_OFFSET: u64 = 0xcbf2_9ce4_8422_2325;
const FNV_PRIME: u64 = 0x0000_0100_0000_01b3;
/// 2^64 / golden ratio, the Weyl increment used by splitmix64.
const PHI: u64 = 0x9e37_79b9_7f4a_7c15;

fn fnv1a(bytes: &[u8]) -> u64 {
    let mut h = FNV_OFFSET;
    for &b in bytes {
        h ^= u64::from(b);
        h = h.wrapping_mul(FNV_PRIME);
    }
    h
}

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(PHI);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Derive the stream seed for `component` item `index` under `root`.
pub fn derive_seed(root: u64, component: &str, index: u64) -> u64 {
    splitmix64(root ^ fnv1a(component.as_bytes()) ^ index.wrapping_mul(PHI))
}

/// Deterministic RNG for one component stream.
pub fn rng_for(root: u64, component: &str, index: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(derive_seed(root, component, index))
}
