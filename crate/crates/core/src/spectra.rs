//! Position sequences `of^{r,m}`: the i-th entry is the code (1..f_m) of the
//! r-power of size f_m starting at position i of the Fibonacci word, or 0.
//! Each sequence is a Fibonacci word over two run-length-encoded blocks.

use num_bigint::BigUint;
use num_traits::One;

use crate::block::{fib_letter_seq, Block, BlockFibWord, RunSegment};
use crate::error::{domain, resource, Result};
use crate::fib::fib;
use crate::zeck::ZeckRep;

/// A counted exponent `r`: either exactly a rational in `[2, 4]`, or
/// "strictly above" one (the 2+ε family is strictly above 2).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ExponentSpec {
    Exact { num: u64, den: u64 },
    StrictlyAbove { num: u64, den: u64 },
}

impl ExponentSpec {
    pub fn exact(num: u64, den: u64) -> Result<ExponentSpec> {
        Self::check(num, den)?;
        let g = gcd(num, den);
        Ok(ExponentSpec::Exact { num: num / g, den: den / g })
    }

    pub fn strictly_above(num: u64, den: u64) -> Result<ExponentSpec> {
        Self::check(num, den)?;
        let g = gcd(num, den);
        Ok(ExponentSpec::StrictlyAbove { num: num / g, den: den / g })
    }

    fn check(num: u64, den: u64) -> Result<()> {
        if den == 0 {
            return Err(domain("exponent denominator must be positive"));
        }
        if num < 2 * den || num > 4 * den {
            return Err(domain(format!("exponent {num}/{den} outside [2, 4]")));
        }
        Ok(())
    }

    pub fn square() -> ExponentSpec {
        ExponentSpec::Exact { num: 2, den: 1 }
    }

    pub fn cube() -> ExponentSpec {
        ExponentSpec::Exact { num: 3, den: 1 }
    }

    pub fn two_plus_eps() -> ExponentSpec {
        ExponentSpec::StrictlyAbove { num: 2, den: 1 }
    }

    /// The occupied length: the exact length of the r-power of size `s`
    /// that this exponent counts. `⌈r s⌉`, bumped by one when the spec is
    /// strictly-above and `r s` is integral.
    pub fn occupied_len(&self, s: u128) -> u128 {
        match *self {
            ExponentSpec::Exact { num, den } => {
                let (num, den) = (num as u128, den as u128);
                (num * s).div_ceil(den)
            }
            ExponentSpec::StrictlyAbove { num, den } => {
                let (num, den) = (num as u128, den as u128);
                if (num * s) % den == 0 {
                    num * s / den + 1
                } else {
                    (num * s).div_ceil(den)
                }
            }
        }
    }

    pub fn describe(&self) -> String {
        match *self {
            ExponentSpec::Exact { num, den: 1 } => format!("{num}"),
            ExponentSpec::Exact { num, den } => format!("{num}/{den}"),
            ExponentSpec::StrictlyAbove { num, den: 1 } => format!("{num}+eps"),
            ExponentSpec::StrictlyAbove { num, den } => format!("{num}/{den}+eps"),
        }
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Blocks of the position sequence of size-`f_m` powers with occupied
/// length `l`. Two branches:
///
/// - `2f_m <= l <= f_{m+2} - 1`, with `x = l - 2f_m + 1`:
///   `R_a = [1..f_{m-1}-x, 0 x (f_m+x)]`, `R_b = [1..f_m]`;
/// - `f_{m+2} <= l`, with `y = l - f_{m+2} + 1`:
///   `R_a = [0 x f_{m+1}]`, `R_b = [1..f_m-y, 0 x min(y, f_m)]`.
///
/// Once `l >= f_{m+2} + f_m - 1` the second branch empties and the sequence
/// is identically zero.
pub fn power_blocks(m: i64, l: u128) -> Result<BlockFibWord> {
    if m < 0 {
        return Err(domain(format!("size index m must be >= 0, got {m}")));
    }
    let fm = fib(m);
    let fm_prev = fib(m - 1);
    let l = l as i128;
    if l < 2 * fm {
        return Err(domain(format!(
            "occupied length {l} below 2 f_{m} = {}",
            2 * fm
        )));
    }
    let (ra, rb) = if l <= fib(m + 2) - 1 {
        let x = l - 2 * fm + 1;
        (
            Block::new(vec![RunSegment::up(1, fm_prev - x), RunSegment::flat(0, fm + x)]),
            Block::new(vec![RunSegment::up(1, fm)]),
        )
    } else {
        let y = l - fib(m + 2) + 1;
        (
            Block::new(vec![RunSegment::flat(0, fib(m + 1))]),
            Block::new(vec![RunSegment::up(1, fm - y), RunSegment::flat(0, y.min(fm))]),
        )
    };
    BlockFibWord::without_prefix(ra, rb)
}

/// A position sequence `of^{r,m}` ready for random access.
#[derive(Debug, Clone)]
pub struct PositionSeq {
    pub spec: ExponentSpec,
    pub m: i64,
    pub blocks: BlockFibWord,
}

impl PositionSeq {
    pub fn new(spec: ExponentSpec, m: i64) -> Result<PositionSeq> {
        let l = spec.occupied_len(fib(m) as u128);
        Ok(PositionSeq { spec, m, blocks: power_blocks(m, l)? })
    }

    pub fn value_at(&self, i: &BigUint) -> Result<i128> {
        self.blocks.value_at(i)
    }

    /// `of^{r,m}[i .. i+span-1]`, walking Zeckendorf digits by successor.
    pub fn value_range(&self, i: &BigUint, span: u64) -> Result<Vec<i128>> {
        if i < &BigUint::one() {
            return Err(domain("positions are 1-based"));
        }
        let mut z = ZeckRep::encode(&(i - 1u32));
        let mut out = Vec::with_capacity(span as usize);
        for _ in 0..span {
            out.push(self.blocks.value_from_digits(&z));
            z.succ();
        }
        Ok(out)
    }
}

/// `of^{r,m}[i]`.
pub fn pos_value(spec: ExponentSpec, m: i64, i: &BigUint) -> Result<i128> {
    PositionSeq::new(spec, m)?.value_at(i)
}

/// Number of distinct nonzero codes among `of^{r,m}[i .. i+span-1]`;
/// zero for an empty span.
pub fn distinct_in_window(spec: ExponentSpec, m: i64, i: &BigUint, span: i128) -> Result<u64> {
    if span <= 0 {
        return Ok(0);
    }
    if span > crate::word::DEFAULT_CAP as i128 {
        return Err(resource(format!("span {span} exceeds enumeration budget")));
    }
    let seq = PositionSeq::new(spec, m)?;
    let mut seen = vec![false; fib(m) as usize + 1];
    let mut count = 0u64;
    for v in seq.value_range(i, span as u64)? {
        if v > 0 && !seen[v as usize] {
            seen[v as usize] = true;
            count += 1;
        }
    }
    Ok(count)
}

/// Count of distinct nonzero codes the sequence ever shows; this is what a
/// window reports once its span reaches `f_{m+3}`.
pub fn saturated_count(spec: ExponentSpec, m: i64) -> u64 {
    let fm = fib(m);
    let l = spec.occupied_len(fm as u128) as i128;
    if l <= fib(m + 2) - 1 {
        fm as u64
    } else {
        let y = l - fib(m + 2) + 1;
        (fm - y).max(0) as u64
    }
}

/// One step of the run-shrinking law: from the blocks at occupied length
/// `l` to the blocks at `l + 1`. A position stays nonzero exactly when it
/// and its successor were both nonzero.
pub fn shrink_step(m: i64, l: u128) -> Result<BlockFibWord> {
    let w = power_blocks(m, l)?;
    shrink_blocks(&w)
}

/// The generic block-level shrink; the input must have no prefix.
pub fn shrink_blocks(w: &BlockFibWord) -> Result<BlockFibWord> {
    if !w.prefix.is_empty() {
        return Err(domain("shrink expects a prefix-free block word"));
    }
    let a = w.block_a.values();
    let b = w.block_b.values();
    // Block a is followed by a or b; both begin with the same zero-ness in
    // every table built here, but the last entry of a is zero anyway for
    // all power blocks, so the successor never matters.
    let succ_of_a = *a.first().unwrap_or(&0);
    let succ_of_b = *a.first().unwrap_or(&0); // b is always followed by a
    let shrink = |vals: &[i128], succ: i128| -> Vec<i128> {
        (0..vals.len())
            .map(|j| {
                let next = if j + 1 < vals.len() { vals[j + 1] } else { succ };
                if vals[j] != 0 && next != 0 {
                    vals[j]
                } else {
                    0
                }
            })
            .collect()
    };
    let na = shrink(&a, succ_of_a);
    let nb = shrink(&b, succ_of_b);
    if !a.is_empty() && *a.last().unwrap() != 0 {
        let with_b = if b.is_empty() { 0 } else { b[0] };
        if (succ_of_a != 0) != (with_b != 0) {
            return Err(crate::error::verification(
                "shrink is ambiguous: block a ends nonzero and successors disagree",
            ));
        }
    }
    BlockFibWord::without_prefix(Block::from_values(&na), Block::from_values(&nb))
}

/// Sliding-window restructuring: for a prefix-free block word with
/// `|block_a| = f_m` and window length `f_h`, the sequence of windows
/// `w[i; f_h]` is a Fibonacci word over its first `f_M` and next `f_{M-1}`
/// windows, where
///
/// `M = h` if `h >= m+2`; `m+2` if `h = m+1`; `m+1` if `1 <= h <= m`;
/// `m` if `h = 0`.
pub fn sliding_restructure(
    w: &BlockFibWord,
    h: i64,
) -> Result<(i64, Vec<Vec<i128>>, Vec<Vec<i128>>)> {
    if !w.prefix.is_empty() {
        return Err(domain("sliding restructure expects a prefix-free block word"));
    }
    if h < 0 {
        return Err(domain("window scale h must be >= 0"));
    }
    let m = w.scale();
    let big_m = if h >= m + 2 {
        h
    } else if h == m + 1 {
        m + 2
    } else if h >= 1 {
        m + 1
    } else {
        m
    };
    let fh = fib(h) as usize;
    let need = (fib(big_m + 1) as usize) + fh;
    let flat = w.expand(need);
    let window = |i: usize| flat[i - 1..i - 1 + fh].to_vec();
    let a: Vec<Vec<i128>> = (1..=fib(big_m) as usize).map(window).collect();
    let b: Vec<Vec<i128>> = (fib(big_m) as usize + 1..=fib(big_m + 1) as usize)
        .map(window)
        .collect();
    Ok((big_m, a, b))
}

/// The window sequence itself, for checking the restructuring.
pub fn sliding_windows(w: &BlockFibWord, h: i64, count: usize) -> Result<Vec<Vec<i128>>> {
    let fh = fib(h) as usize;
    let flat = w.expand(count + fh);
    Ok((1..=count).map(|i| flat[i - 1..i - 1 + fh].to_vec()).collect())
}

/// Expands the Fibonacci word over two abstract window-letters, for
/// comparing against `sliding_windows`.
pub fn expand_over<T: Clone>(a: &[T], b: &[T], n: usize) -> Vec<T> {
    let shortest = a.len().min(b.len()).max(1);
    let mut out = Vec::with_capacity(n + a.len());
    for &l in &fib_letter_seq(n / shortest + 2) {
        if out.len() >= n {
            break;
        }
        out.extend_from_slice(if l { b } else { a });
    }
    out.truncate(n);
    out
}
