//! Fibonacci numbers in the `f_0 = 1, f_1 = 2` indexing, negative indices
//! included, plus the exact Beatty floor `⌊pφ⌋` and the bracketing schemes
//! that classify a window length `n` by its Fibonacci scale `h`.

use num_bigint::BigUint;
use num_integer::Roots;
use num_traits::Zero;

use crate::error::{domain, Result};

/// Largest index for which `fib` fits in an `i128`.
pub const MAX_FIB_I128: i64 = 180;

/// `f_m` with `f_0 = 1`, `f_1 = 2`, extended downwards by `f_{m-2} = f_m - f_{m-1}`.
///
/// The table values below `0` are `f_{-1} = 1`, `f_{-2} = 0`, `f_{-3} = 1`,
/// `f_{-4} = -1`; indices below `-4` are rejected.
pub fn fib(m: i64) -> i128 {
    try_fib(m).expect("fib index out of range")
}

pub fn try_fib(m: i64) -> Result<i128> {
    match m {
        -4 => return Ok(-1),
        -3 => return Ok(1),
        -2 => return Ok(0),
        -1 => return Ok(1),
        _ => {}
    }
    if m < -4 {
        return Err(domain(format!("fib index {m} below -4")));
    }
    if m > MAX_FIB_I128 {
        return Err(domain(format!("fib index {m} exceeds i128 range")));
    }
    static TABLE: std::sync::OnceLock<Vec<i128>> = std::sync::OnceLock::new();
    let table = TABLE.get_or_init(|| {
        let mut t = vec![1i128, 2];
        for m in 2..=MAX_FIB_I128 as usize {
            t.push(t[m - 1] + t[m - 2]);
        }
        t
    });
    Ok(table[m as usize])
}

/// A growable table of `f_0, f_1, f_2, ...` as big integers, for positions of
/// unbounded magnitude.
#[derive(Debug, Default, Clone)]
pub struct FibTable {
    values: Vec<BigUint>,
}

impl FibTable {
    pub fn new() -> Self {
        FibTable {
            values: vec![BigUint::from(1u32), BigUint::from(2u32)],
        }
    }

    /// `f_m` for `m >= 0`, extending the table as needed.
    pub fn get(&mut self, m: usize) -> &BigUint {
        while self.values.len() <= m {
            let k = self.values.len();
            let next = &self.values[k - 1] + &self.values[k - 2];
            self.values.push(next);
        }
        &self.values[m]
    }

    /// Smallest index `k` with `f_k > n`; the table ends up covering `0..=k`.
    pub fn first_above(&mut self, n: &BigUint) -> usize {
        let mut k = 0;
        while self.get(k) <= n {
            k += 1;
        }
        k
    }
}

thread_local! {
    static FIB_TABLE: std::cell::RefCell<FibTable> = std::cell::RefCell::new(FibTable::new());
}

/// Run `f` with access to a thread-local big Fibonacci table.
pub(crate) fn with_fib_table<T>(f: impl FnOnce(&mut FibTable) -> T) -> T {
    FIB_TABLE.with(|t| f(&mut t.borrow_mut()))
}

/// Exact `⌊pφ⌋` for `φ = (√5 - 1)/2`, via `⌊(⌊√(5p²)⌋ - p)/2⌋`.
///
/// Integer arithmetic only; valid because `pφ` is never an integer for `p ≥ 1`.
pub fn floor_mult_phi(p: &BigUint) -> BigUint {
    if p.is_zero() {
        return BigUint::zero();
    }
    let five_p2 = BigUint::from(5u32) * p * p;
    let t = five_p2.sqrt();
    (t - p) >> 1
}

/// `⌊pφ⌋` for machine-sized `p` (valid up to `p ≈ 2.8e18`).
pub fn floor_mult_phi_u64(p: u64) -> u64 {
    let five_p2 = 5u128 * (p as u128) * (p as u128);
    let t = five_p2.sqrt();
    ((t - p as u128) / 2) as u64
}

/// The bracketing used to pick the scale index `h` for a window length `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HScheme {
    /// `2f_h <= n < 2f_{h+1}` (squares; also the 2+ε prefix formula).
    Squares,
    /// `2f_h + 1 <= n < 2f_{h+1} + 1` (2+ε windows).
    TwoPlusEps,
    /// `3f_h <= n < 3f_{h+1}` (cube windows).
    Cubes,
    /// `2f_h - 1 <= n < 2f_{h+1} - 1` (cube prefix formula).
    CubePrefix,
}

impl HScheme {
    pub fn min_n(self) -> u64 {
        match self {
            HScheme::Squares => 2,
            HScheme::TwoPlusEps => 5,
            HScheme::Cubes => 9,
            HScheme::CubePrefix => 14,
        }
    }

    fn lower_bound(self, h: i64) -> i128 {
        match self {
            HScheme::Squares => 2 * fib(h),
            HScheme::TwoPlusEps => 2 * fib(h) + 1,
            HScheme::Cubes => 3 * fib(h),
            HScheme::CubePrefix => 2 * fib(h) - 1,
        }
    }
}

/// The unique `h >= 0` whose bracket contains `n` under the given scheme.
pub fn classify_h(n: u64, scheme: HScheme) -> Result<i64> {
    if n < scheme.min_n() {
        return Err(domain(format!(
            "n = {n} below minimum {} for {scheme:?}",
            scheme.min_n()
        )));
    }
    let n = n as i128;
    let mut h = 0;
    while scheme.lower_bound(h + 1) <= n {
        h += 1;
    }
    Ok(h)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fib_anchor_values() {
        assert_eq!(fib(0), 1);
        assert_eq!(fib(1), 2);
        assert_eq!(fib(4), 8);
        assert_eq!(fib(-1), 1);
        assert_eq!(fib(-2), 0);
        assert_eq!(fib(-3), 1);
        assert_eq!(fib(-4), -1);
        assert!(try_fib(-5).is_err());
    }

    #[test]
    fn fib_recurrence_everywhere_used() {
        for m in -2..=90 {
            assert_eq!(fib(m), fib(m - 1) + fib(m - 2), "recurrence at {m}");
        }
    }

    #[test]
    fn big_table_matches_small() {
        let mut t = FibTable::new();
        for m in 0..120usize {
            assert_eq!(t.get(m).to_string(), fib(m as i64).to_string());
        }
    }

    #[test]
    fn beatty_floor_small_values() {
        assert_eq!(floor_mult_phi_u64(1), 0);
        assert_eq!(floor_mult_phi_u64(2), 1);
        assert_eq!(floor_mult_phi_u64(5), 3);
        for p in 1..2000u64 {
            let big = floor_mult_phi(&BigUint::from(p));
            assert_eq!(big, BigUint::from(floor_mult_phi_u64(p)));
        }
    }

    #[test]
    fn classify_h_examples() {
        assert_eq!(classify_h(20, HScheme::Squares).unwrap(), 4);
        assert_eq!(classify_h(2, HScheme::Squares).unwrap(), 0);
        assert_eq!(classify_h(21, HScheme::Cubes).unwrap(), 3);
        assert_eq!(classify_h(14, HScheme::CubePrefix).unwrap(), 3);
        assert_eq!(classify_h(15, HScheme::CubePrefix).unwrap(), 4);
        assert_eq!(classify_h(11, HScheme::TwoPlusEps).unwrap(), 3);
        assert!(classify_h(1, HScheme::Squares).is_err());
        assert!(classify_h(8, HScheme::Cubes).is_err());
    }
}
