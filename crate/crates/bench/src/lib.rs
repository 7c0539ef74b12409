//! Benchmark-only crate; see `benches/engines.rs`.

use num_bigint::BigUint;

/// A deterministic pseudo-random decimal index with the given digit count.
pub fn huge_index(digits: usize, seed: u64) -> BigUint {
    let mut state = seed.wrapping_mul(0x9E3779B97F4A7C15) | 1;
    let s: String = (0..digits)
        .map(|k| {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            let d = if k == 0 { state % 9 + 1 } else { state % 10 };
            char::from(b'0' + d as u8)
        })
        .collect();
    s.parse().unwrap()
}
