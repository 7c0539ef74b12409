//! Kernel (singular) words `K_m`, their exact occurrence positions, kernels
//! of factors, return-word decompositions, and the two interval families
//! that locate every square by the position of its kernel.

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{domain, resource, verification, Result};
use crate::fib::{fib, floor_mult_phi, with_fib_table};
use crate::word::{fib_prefix, fib_prefix_capped, letter_at, Letter, Word, DEFAULT_CAP};

/// `K_{-2} = ε`, `K_{-1} = a`, `K_0 = b`, and for `m >= 1`
/// `K_m` is the last letter of `F_{m+1}` followed by `F_m` minus its last
/// letter, so `|K_m| = f_m`.
pub fn kernel_word(m: i64) -> Result<Word> {
    match m {
        -2 => return Ok(Word::empty()),
        -1 => return Ok(Word(vec![Letter::A])),
        0 => return Ok(Word(vec![Letter::B])),
        m if m < -2 => return Err(domain(format!("no kernel word at index {m}"))),
        _ => {}
    }
    let len = crate::fib::try_fib(m)?;
    if len > DEFAULT_CAP as i128 {
        return Err(resource(format!("K_{m} has {len} letters, over the cap")));
    }
    // F_{m+1} ends in b for odd m+1, in a for even m+1 (m >= 1).
    let last = if (m + 1) % 2 == 1 { Letter::B } else { Letter::A };
    let mut w = vec![last];
    w.extend_from_slice(&fib_prefix(len as u64 - 1)?.0);
    Ok(Word(w))
}

/// Position of the `p`-th occurrence of `K_m`:
/// `(K_m)_p = p f_{m+1} + ⌊pφ⌋ f_m`, for `m >= -1`, `p >= 1`.
pub fn kernel_occurrence(m: i64, p: &BigUint) -> Result<BigUint> {
    if m < -1 {
        return Err(domain(format!("kernel occurrences defined for m >= -1, got {m}")));
    }
    if p < &BigUint::one() {
        return Err(domain("occurrence count p is 1-based"));
    }
    let beatty = floor_mult_phi(p);
    Ok(with_fib_table(|t| {
        let fm1 = if m + 1 >= 0 { t.get((m + 1) as usize).clone() } else { BigUint::one() };
        let fm = if m >= 0 { t.get(m as usize).clone() } else { BigUint::one() };
        p * fm1 + beatty * fm
    }))
}

/// The kernel of a factor: the maximal kernel word inside `w`, with its
/// unique 1-based offset.
pub fn kernel_of(w: &Word) -> Result<(i64, usize)> {
    if w.is_empty() {
        return Err(domain("the empty word has no kernel"));
    }
    if !is_factor(w)? {
        return Err(domain(format!("{w} is not a factor of the Fibonacci word")));
    }
    let mut m = 0;
    while fib(m + 1) as usize <= w.len() {
        m += 1;
    }
    for k in (-1..=m).rev() {
        let kw = kernel_word(k)?;
        if let Some(off) = w.find_from(&kw, 1) {
            if w.find_from(&kw, off + 1).is_some() {
                return Err(verification(format!(
                    "kernel K_{k} occurs more than once in {w}"
                )));
            }
            return Ok((k, off));
        }
    }
    unreachable!("every nonempty factor contains a or b")
}

/// Factor test against a prefix of length `4|w| + f_10`; every factor of the
/// Fibonacci word recurs within any window that long.
pub fn is_factor(w: &Word) -> Result<bool> {
    if w.is_empty() {
        return Ok(true);
    }
    let n = 4 * w.len() as u64 + fib(10) as u64;
    let p = fib_prefix_capped(n, DEFAULT_CAP.max(n))?;
    Ok(p.find_from(w, 1).is_some())
}

/// A return-word decomposition: `F = r0 . F(r1, r2)` where `r1, r2` are the
/// first two return words of the factor and `r0` the part before its first
/// occurrence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReturnDecomposition {
    pub prefix_r0: Word,
    pub r1: Word,
    pub r2: Word,
}

/// Decomposes F by the return words of `w`, scanning a prefix just long
/// enough to see the first three occurrences.
pub fn return_words(w: &Word) -> Result<ReturnDecomposition> {
    if w.is_empty() {
        return Err(domain("return words of the empty word are undefined"));
    }
    if !is_factor(w)? {
        return Err(domain(format!("{w} is not a factor of the Fibonacci word")));
    }
    let mut n = (8 * w.len() as u64).max(64);
    loop {
        let p = fib_prefix_capped(n + w.len() as u64, DEFAULT_CAP)?;
        let occ = p.occurrences(w);
        if occ.len() >= 3 {
            let r0 = p.slice(1, occ[0] - 1);
            let r1 = p.slice(occ[0], occ[1] - 1);
            let r2 = p.slice(occ[1], occ[2] - 1);
            if r1 == r2 {
                return Err(verification(format!(
                    "first two return words of {w} coincide"
                )));
            }
            return Ok(ReturnDecomposition { prefix_r0: r0, r1, r2 });
        }
        if n >= DEFAULT_CAP {
            return Err(resource(format!(
                "no three occurrences of {w} within the materialization cap"
            )));
        }
        n = (n * 2).min(DEFAULT_CAP);
    }
}

/// A set of consecutive starting positions, inclusive on both ends;
/// `lo = hi + 1` encodes the empty interval.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PositionInterval {
    pub lo: BigUint,
    pub hi: BigUint,
}

impl PositionInterval {
    pub fn cardinality(&self) -> BigUint {
        if self.lo > self.hi {
            BigUint::default()
        } else {
            &self.hi - &self.lo + 1u32
        }
    }

    pub fn contains_u64(&self, i: u64) -> bool {
        let i = BigUint::from(i);
        self.lo <= i && i <= self.hi
    }
}

/// The interval of positions of the `p`-th batch of squares with kernel
/// `K_m`:
///
/// - kind 1 (root length `f_{m+1}`): `[(K_m)_p - f_{m+1} + 1, (K_m)_p - f_{m-1} - 1]`,
///   `f_m - 1` positions;
/// - kind 2 (root length `f_{m-1}`): `[(K_m)_p - f_{m-3}, (K_m)_p]`,
///   `f_{m-3} + 1` positions.
pub fn square_sets(kind: u8, m: i64, p: &BigUint) -> Result<PositionInterval> {
    if m < 1 {
        return Err(domain(format!("square sets need m >= 1, got {m}")));
    }
    if p < &BigUint::one() {
        return Err(domain("occurrence count p is 1-based"));
    }
    let anchor = kernel_occurrence(m, p)?;
    match kind {
        1 => Ok(PositionInterval {
            lo: &anchor - BigUint::from(fib(m + 1) as u128) + 1u32,
            hi: &anchor - BigUint::from(fib(m - 1) as u128) - 1u32,
        }),
        2 => Ok(PositionInterval {
            lo: &anchor - BigUint::from(fib(m - 3).max(0) as u128),
            hi: anchor,
        }),
        k => Err(domain(format!("square set kind must be 1 or 2, got {k}"))),
    }
}

/// Occurrence positions of `w` within `F[1, limit]` (scan helper for tests
/// and the CLI).
pub fn scan_occurrences(w: &Word, limit: u64) -> Result<Vec<u64>> {
    let p = fib_prefix_capped(limit, DEFAULT_CAP)?;
    Ok(p.occurrences(w).into_iter().map(|i| i as u64).collect())
}

/// Convenience wrapper: `F[i]` at a machine-sized position.
pub fn letter_at_u64(i: u64) -> Result<Letter> {
    letter_at(&BigUint::from(i))
}
