//! The binary alphabet, finite words with 1-based indexing, and random
//! access into the infinite Fibonacci word F (fixed point of a -> ab, b -> a).

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{domain, resource, Error, Result};
use crate::zeck::ZeckRep;

/// Default budget for explicitly materialized words (letters).
pub const DEFAULT_CAP: u64 = 1 << 22;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    A,
    B,
}

impl Letter {
    pub fn as_char(self) -> char {
        match self {
            Letter::A => 'a',
            Letter::B => 'b',
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

/// A finite word over `{a, b}`. Positions are 1-based throughout.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word(pub Vec<Letter>);

impl Word {
    pub fn empty() -> Word {
        Word(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `w[i]`, 1-based.
    pub fn at(&self, i: usize) -> Letter {
        self.0[i - 1]
    }

    /// `w[i, j]`; `w[i, i-1]` is the empty word.
    pub fn slice(&self, i: usize, j: usize) -> Word {
        if j + 1 == i {
            return Word::empty();
        }
        Word(self.0[i - 1..j].to_vec())
    }

    /// `w[i; n] = w[i, i+n-1]`.
    pub fn window(&self, i: usize, n: usize) -> Word {
        if n == 0 {
            return Word::empty();
        }
        self.slice(i, i + n - 1)
    }

    pub fn bytes(&self) -> Vec<u8> {
        self.0.iter().map(|l| l.as_char() as u8).collect()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// First 1-based position at which `needle` occurs at or after `from`.
    pub fn find_from(&self, needle: &Word, from: usize) -> Option<usize> {
        let n = needle.len();
        if n == 0 || self.len() + 1 < from + n {
            return None;
        }
        (from..=self.len() - n + 1).find(|&i| self.0[i - 1..i - 1 + n] == needle.0[..])
    }

    /// All 1-based occurrence positions of `needle`.
    pub fn occurrences(&self, needle: &Word) -> Vec<usize> {
        let mut out = Vec::new();
        let mut i = 1;
        while let Some(p) = self.find_from(needle, i) {
            out.push(p);
            i = p + 1;
        }
        out
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.0 {
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Word> {
        s.chars()
            .map(|c| match c {
                'a' => Ok(Letter::A),
                'b' => Ok(Letter::B),
                _ => Err(domain(format!("invalid letter {c:?}"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }
}

/// Applies the Fibonacci morphism a -> ab, b -> a.
pub fn sigma(w: &Word) -> Word {
    let mut out = Vec::with_capacity(w.len() * 2);
    for &l in &w.0 {
        match l {
            Letter::A => {
                out.push(Letter::A);
                out.push(Letter::B);
            }
            Letter::B => out.push(Letter::A),
        }
    }
    Word(out)
}

/// `F_m = sigma^m(a)` for `m >= 0`; `F_{-1} = b`, `F_{-2} = empty`.
pub fn fib_word(m: i64) -> Result<Word> {
    match m {
        -2 => return Ok(Word::empty()),
        -1 => return Ok(Word(vec![Letter::B])),
        m if m < -2 => return Err(domain(format!("no Fibonacci word at index {m}"))),
        _ => {}
    }
    let len = crate::fib::try_fib(m)?;
    if len > DEFAULT_CAP as i128 {
        return Err(resource(format!("F_{m} has {len} letters, over the cap")));
    }
    fib_prefix(len as u64)
}

/// The prefix `F[1, n]`, built by repeated appending (`F_{m+1} = F_m F_{m-1}`).
pub fn fib_prefix(n: u64) -> Result<Word> {
    fib_prefix_capped(n, DEFAULT_CAP)
}

pub fn fib_prefix_capped(n: u64, cap: u64) -> Result<Word> {
    if n > cap {
        return Err(resource(format!("prefix length {n} exceeds cap {cap}")));
    }
    let n = n as usize;
    if n == 0 {
        return Ok(Word::empty());
    }
    // Grow F_1 = ab by whole appends F_{m+1} = F_m F_{m-1}; every F_{m-1}
    // with m >= 1 is a prefix of the word built so far.
    let mut w = vec![Letter::A, Letter::B];
    let (mut prev, mut cur) = (1usize, 2usize);
    while w.len() < n {
        let tail = w[..prev].to_vec();
        w.extend_from_slice(&tail);
        let next = cur + prev;
        prev = cur;
        cur = next;
    }
    w.truncate(n);
    Ok(Word(w))
}

/// `F[i]` for an arbitrary-precision position, in time polynomial in the
/// digit count of `i`: the answer is digit `a_0` of the Zeckendorf
/// representation of `i - 1`.
pub fn letter_at(i: &BigUint) -> Result<Letter> {
    if i < &BigUint::one() {
        return Err(domain("positions are 1-based"));
    }
    let z = ZeckRep::encode(&(i - 1u32));
    Ok(if z.low_value(0) == 1 { Letter::B } else { Letter::A })
}

/// `F[i; n]` for an arbitrary-precision start position.
pub fn window(i: &BigUint, n: u64) -> Result<Word> {
    window_capped(i, n, DEFAULT_CAP)
}

pub fn window_capped(i: &BigUint, n: u64, cap: u64) -> Result<Word> {
    if i < &BigUint::one() {
        return Err(domain("positions are 1-based"));
    }
    if n > cap {
        return Err(resource(format!("window length {n} exceeds cap {cap}")));
    }
    let mut z = ZeckRep::encode(&(i - 1u32));
    let mut out = Vec::with_capacity(n as usize);
    for _ in 0..n {
        out.push(if z.low_value(0) == 1 { Letter::B } else { Letter::A });
        z.succ();
    }
    Ok(Word(out))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prefix_13_is_f5() {
        assert_eq!(fib_prefix(13).unwrap().to_string(), "abaababaabaab");
    }

    #[test]
    fn fib_words() {
        assert_eq!(fib_word(-2).unwrap().to_string(), "");
        assert_eq!(fib_word(-1).unwrap().to_string(), "b");
        assert_eq!(fib_word(0).unwrap().to_string(), "a");
        assert_eq!(fib_word(1).unwrap().to_string(), "ab");
        assert_eq!(fib_word(4).unwrap().to_string(), "abaababa");
        for m in 2..12 {
            let w = fib_word(m).unwrap();
            assert_eq!(w, sigma(&fib_word(m - 1).unwrap()));
            assert_eq!(
                w,
                fib_word(m - 1).unwrap().concat(&fib_word(m - 2).unwrap())
            );
        }
    }

    #[test]
    fn window_examples() {
        assert_eq!(window(&BigUint::from(4u32), 5).unwrap().to_string(), "ababa");
        assert!(window(&BigUint::from(1u32), 0).unwrap().is_empty());
        assert_eq!(letter_at(&BigUint::from(5u32)).unwrap(), Letter::B);
        assert_eq!(letter_at(&BigUint::from(1u32)).unwrap(), Letter::A);
    }

    #[test]
    fn letter_at_agrees_with_prefix() {
        let n = crate::fib::fib(20) as u64;
        let p = fib_prefix(n).unwrap();
        for i in 1..=n {
            assert_eq!(
                letter_at(&BigUint::from(i)).unwrap(),
                p.at(i as usize),
                "letter {i}"
            );
        }
    }

    #[test]
    fn letter_at_one_million() {
        let p = fib_prefix(1_000_000).unwrap();
        for i in [999_983u64, 1_000_000] {
            assert_eq!(letter_at(&BigUint::from(i)).unwrap(), p.at(i as usize));
        }
    }

    #[test]
    fn slices_are_one_based() {
        let w = Word::from_str("abaab").unwrap();
        assert_eq!(w.at(1), Letter::A);
        assert_eq!(w.slice(2, 4).to_string(), "baa");
        assert!(w.slice(3, 2).is_empty());
        assert_eq!(w.window(4, 2).to_string(), "ab");
        assert_eq!(w.occurrences(&Word::from_str("ab").unwrap()), vec![1, 4]);
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(
            fib_prefix_capped(100, 10),
            Err(crate::error::Error::Resource(_))
        ));
    }
}
