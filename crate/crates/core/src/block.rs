//! Run-length-encoded integer blocks and Fibonacci words over a two-block
//! alphabet, with random access driven by Zeckendorf digits.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};

use crate::error::{domain, verification, Result};
use crate::fib::fib;
use crate::zeck::ZeckRep;

/// One arithmetic run `start, start+step, ..., start+step*(length-1)`.
/// A non-positive length contributes nothing.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RunSegment {
    pub start: i128,
    pub step: i8,
    pub length: i128,
}

impl RunSegment {
    pub fn flat(start: i128, length: i128) -> RunSegment {
        RunSegment { start, step: 0, length }
    }

    pub fn up(start: i128, length: i128) -> RunSegment {
        RunSegment { start, step: 1, length }
    }

    pub fn down(start: i128, length: i128) -> RunSegment {
        RunSegment { start, step: -1, length }
    }

    /// The `k`-th value, 1-based, for `1 <= k <= length`.
    pub fn value_at(&self, k: i128) -> i128 {
        self.start + self.step as i128 * (k - 1)
    }
}

/// A finite integer sequence stored as run segments.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Block {
    segments: Vec<RunSegment>,
    total_length: u128,
}

impl Block {
    pub fn new(segments: Vec<RunSegment>) -> Block {
        let kept: Vec<RunSegment> = segments.into_iter().filter(|s| s.length > 0).collect();
        let total_length = kept.iter().map(|s| s.length as u128).sum();
        Block { segments: kept, total_length }
    }

    pub fn empty() -> Block {
        Block::new(Vec::new())
    }

    /// A block listing explicit values (used by tests and small fixtures).
    pub fn from_values(values: &[i128]) -> Block {
        Block::new(values.iter().map(|&v| RunSegment::flat(v, 1)).collect())
    }

    pub fn len(&self) -> u128 {
        self.total_length
    }

    pub fn is_empty(&self) -> bool {
        self.total_length == 0
    }

    pub fn segments(&self) -> &[RunSegment] {
        &self.segments
    }

    /// The `k`-th value, 1-based; time proportional to the segment count.
    pub fn value_at(&self, k: u128) -> i128 {
        debug_assert!(k >= 1 && k <= self.total_length);
        let mut rest = k as i128;
        for seg in &self.segments {
            if rest <= seg.length {
                return seg.value_at(rest);
            }
            rest -= seg.length;
        }
        unreachable!("index {k} beyond block length {}", self.total_length)
    }

    pub fn values(&self) -> Vec<i128> {
        let mut out = Vec::with_capacity(self.total_length as usize);
        for seg in &self.segments {
            for k in 1..=seg.length {
                out.push(seg.value_at(k));
            }
        }
        out
    }

    pub fn max_value(&self) -> Option<i128> {
        self.segments
            .iter()
            .map(|s| s.value_at(1).max(s.value_at(s.length)))
            .max()
    }

    /// Number of distinct nonzero values, assuming runs never revisit a
    /// nonzero value twice (true for all blocks built in this crate: each
    /// nonzero code appears in at most one maximal run per block).
    pub fn distinct_nonzero(&self) -> u64 {
        let mut seen = std::collections::BTreeSet::new();
        for seg in &self.segments {
            for k in 1..=seg.length {
                let v = seg.value_at(k);
                if v != 0 {
                    seen.insert(v);
                }
            }
        }
        seen.len() as u64
    }
}

/// An infinite sequence `prefix . F(block_a, block_b)`: the Fibonacci word
/// over the alphabet `{block_a, block_b}` with an optional finite prefix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockFibWord {
    pub prefix: Block,
    pub block_a: Block,
    pub block_b: Block,
    /// Index `t` with `|block_a| = f_t`, `|block_b| = f_{t-1}`.
    scale: i64,
}

impl BlockFibWord {
    pub fn new(prefix: Block, block_a: Block, block_b: Block) -> Result<BlockFibWord> {
        let scale = block_scale(block_a.len(), block_b.len())?;
        Ok(BlockFibWord { prefix, block_a, block_b, scale })
    }

    pub fn without_prefix(block_a: Block, block_b: Block) -> Result<BlockFibWord> {
        BlockFibWord::new(Block::empty(), block_a, block_b)
    }

    /// Index `t` with `|block_a| = f_t`.
    pub fn scale(&self) -> i64 {
        self.scale
    }

    /// The `i`-th value of the infinite sequence, 1-based, in time
    /// polylogarithmic in `i`.
    ///
    /// Past the prefix, `F(R_a, R_b)[j] = (R_a R_b)[[a_t ... a_0]_F + 1]`
    /// where `a_k ... a_0` is the Zeckendorf representation of `j - 1`.
    pub fn value_at(&self, i: &BigUint) -> Result<i128> {
        if i < &BigUint::one() {
            return Err(domain("positions are 1-based"));
        }
        let plen = BigUint::from(self.prefix.len());
        if i <= &plen {
            return Ok(self.prefix.value_at(i.to_u128().unwrap()));
        }
        let j = i - &plen;
        let z = ZeckRep::encode(&(j - 1u32));
        Ok(self.value_from_digits(&z))
    }

    /// Same access with the Zeckendorf digits of `j - 1` already in hand,
    /// where `j` is the position relative to the end of the prefix.
    pub fn value_from_digits(&self, digits: &ZeckRep) -> i128 {
        let idx = digits.low_value(self.scale) as u128 + 1;
        if idx <= self.block_a.len() {
            self.block_a.value_at(idx)
        } else {
            self.block_b.value_at(idx - self.block_a.len())
        }
    }

    /// The first `n` values, by naive block concatenation (test oracle and
    /// sweep helper; does not use the Zeckendorf path).
    pub fn expand(&self, n: usize) -> Vec<i128> {
        let mut out = self.prefix.values();
        let a = self.block_a.values();
        let b = self.block_b.values();
        let shortest = a.len().min(b.len()).max(1);
        for &l in &fib_letter_seq(n / shortest + 2) {
            if out.len() >= n {
                break;
            }
            out.extend_from_slice(if l { &b } else { &a });
        }
        out.truncate(n);
        out
    }
}

/// The Fibonacci word over `{false, true}` (a = false), first `n` letters.
pub fn fib_letter_seq(n: usize) -> Vec<bool> {
    let mut s = vec![false];
    while s.len() < n {
        let mut next = Vec::with_capacity(s.len() * 2);
        for &l in &s {
            if l {
                next.push(false);
            } else {
                next.push(false);
                next.push(true);
            }
        }
        s = next;
    }
    s.truncate(n);
    s
}

/// Finds `t >= 0` with `|a| = f_t` and `|b| = f_{t-1}`.
fn block_scale(a_len: u128, b_len: u128) -> Result<i64> {
    for t in 0..=crate::fib::MAX_FIB_I128 {
        let ft = fib(t) as u128;
        if ft == a_len && fib(t - 1) as u128 == b_len {
            return Ok(t);
        }
        if ft > a_len {
            break;
        }
    }
    Err(verification(format!(
        "block lengths ({a_len}, {b_len}) are not consecutive Fibonacci numbers"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn abc_de() -> BlockFibWord {
        // R_a = ABC, R_b = DE coded as 1,2,3 / 4,5
        BlockFibWord::without_prefix(
            Block::from_values(&[1, 2, 3]),
            Block::from_values(&[4, 5]),
        )
        .unwrap()
    }

    #[test]
    fn indexed_access_example() {
        // F(ABC, DE)[20] = B.
        let w = abc_de();
        assert_eq!(w.value_at(&BigUint::from(20u32)).unwrap(), 2);
        assert_eq!(w.value_at(&BigUint::from(5u32)).unwrap(), 5);
    }

    #[test]
    fn prefix_bypass() {
        let w = BlockFibWord::new(
            Block::from_values(&[9, 8]),
            Block::from_values(&[1, 2, 3]),
            Block::from_values(&[4, 5]),
        )
        .unwrap();
        assert_eq!(w.value_at(&BigUint::from(1u32)).unwrap(), 9);
        assert_eq!(w.value_at(&BigUint::from(2u32)).unwrap(), 8);
        assert_eq!(w.value_at(&BigUint::from(3u32)).unwrap(), 1);
    }

    #[test]
    fn access_matches_expansion() {
        let w = abc_de();
        let flat = w.expand(10_000);
        for i in 1..=10_000usize {
            assert_eq!(
                w.value_at(&BigUint::from(i)).unwrap(),
                flat[i - 1],
                "position {i}"
            );
        }
    }

    #[test]
    fn rejects_bad_lengths() {
        assert!(BlockFibWord::without_prefix(
            Block::from_values(&[1, 2, 3, 4]),
            Block::from_values(&[5])
        )
        .is_err());
    }

    #[test]
    fn run_segments() {
        let b = Block::new(vec![
            RunSegment::down(5, 3),
            RunSegment::flat(7, 0),
            RunSegment::up(1, 2),
        ]);
        assert_eq!(b.values(), vec![5, 4, 3, 1, 2]);
        assert_eq!(b.len(), 5);
        assert_eq!(b.value_at(3), 3);
        assert_eq!(b.distinct_nonzero(), 5);
    }
}
