//! Zeckendorf numeration: every `n >= 0` is a unique sum of non-adjacent
//! Fibonacci numbers `f_j` (with `f_0 = 1, f_1 = 2`). Digit strings may also
//! be evaluated in non-canonical form.

use std::fmt;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::error::{domain, Result};
use crate::fib::{fib, with_fib_table};

/// Canonical Zeckendorf representation. `digits[j]` is the coefficient of
/// `f_j` (least significant first); canonical form has no `11` and no
/// trailing (most significant) zero. Zero is the empty digit string.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZeckRep {
    digits: Vec<u8>,
}

impl ZeckRep {
    /// Canonical representation of `n`, by greedy subtraction of the largest
    /// Fibonacci number that fits.
    pub fn encode(n: &BigUint) -> ZeckRep {
        if n.is_zero() {
            return ZeckRep { digits: Vec::new() };
        }
        with_fib_table(|t| {
            let top = t.first_above(n);
            let mut digits = vec![0u8; top];
            let mut rest = n.clone();
            for j in (0..top).rev() {
                if *t.get(j) <= rest {
                    digits[j] = 1;
                    rest -= t.get(j);
                }
            }
            debug_assert!(rest.is_zero());
            ZeckRep { digits }
        })
    }

    pub fn encode_u64(n: u64) -> ZeckRep {
        ZeckRep::encode(&BigUint::from(n))
    }

    /// Digits least significant first.
    pub fn digits(&self) -> &[u8] {
        &self.digits
    }

    /// Index of the most significant digit, or `None` for zero.
    pub fn top_index(&self) -> Option<usize> {
        if self.digits.is_empty() {
            None
        } else {
            Some(self.digits.len() - 1)
        }
    }

    pub fn value(&self) -> BigUint {
        with_fib_table(|t| {
            let mut acc = BigUint::zero();
            for (j, &d) in self.digits.iter().enumerate() {
                if d == 1 {
                    acc += t.get(j);
                }
            }
            acc
        })
    }

    /// `[a_t ... a_0]_F + 0`: the value of the digits at indices `0..=t`.
    /// Bounded by `f_{t+2} - 1`, so an `i128` suffices for `t <= 178`.
    pub fn low_value(&self, t: i64) -> i128 {
        let mut acc = 0i128;
        for j in 0..=t.max(-1) {
            if (j as usize) < self.digits.len() && self.digits[j as usize] == 1 {
                acc += fib(j);
            }
        }
        acc
    }

    /// In-place successor: canonical digits of `value + 1`.
    ///
    /// Carries use `f_j + f_{j+1} = f_{j+2}` and `2f_j = f_{j+1} + f_{j-2}`
    /// (with the degenerate low cases `2f_0 = f_1` and `2f_1 = f_2 + f_0`),
    /// so a step is amortized constant time.
    pub fn succ(&mut self) {
        self.add_at(0);
        while self.digits.last() == Some(&0) {
            self.digits.pop();
        }
    }

    fn add_at(&mut self, j: usize) {
        if self.digits.len() <= j {
            self.digits.resize(j + 1, 0);
        }
        self.digits[j] += 1;
        let mut work = vec![j];
        while let Some(j) = work.pop() {
            if j < self.digits.len() && self.digits[j] == 2 {
                self.digits[j] = 0;
                match j {
                    0 => self.bump(1, &mut work),
                    1 => {
                        self.bump(2, &mut work);
                        self.bump(0, &mut work);
                    }
                    _ => {
                        self.bump(j + 1, &mut work);
                        self.bump(j - 2, &mut work);
                    }
                }
                work.push(j);
                continue;
            }
            for lo in [j.saturating_sub(1), j] {
                if lo + 1 < self.digits.len() && self.digits[lo] == 1 && self.digits[lo + 1] == 1 {
                    self.digits[lo] = 0;
                    self.digits[lo + 1] = 0;
                    self.bump(lo + 2, &mut work);
                    work.push(lo);
                }
            }
        }
    }

    fn bump(&mut self, j: usize, work: &mut Vec<usize>) {
        if self.digits.len() <= j {
            self.digits.resize(j + 1, 0);
        }
        self.digits[j] += 1;
        work.push(j);
    }

    /// Checks the canonical-form invariants (leading one, no adjacent ones).
    pub fn is_canonical(&self) -> bool {
        if let Some(&last) = self.digits.last() {
            if last != 1 {
                return false;
            }
        }
        self.digits.iter().all(|&d| d <= 1)
            && self.digits.windows(2).all(|w| w[0] * w[1] == 0)
    }
}

impl fmt::Display for ZeckRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.digits.is_empty() {
            return write!(f, "0");
        }
        for &d in self.digits.iter().rev() {
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

/// `[a_k ... a_0]_F` for an arbitrary 0/1 digit word, most significant first.
/// Leading zeros and adjacent ones are allowed.
pub fn eval_digits_msb(digits: &[u8]) -> Result<BigUint> {
    for &d in digits {
        if d > 1 {
            return Err(domain("digits must be 0 or 1"));
        }
    }
    Ok(with_fib_table(|t| {
        let mut acc = BigUint::zero();
        for (pos, &d) in digits.iter().rev().enumerate() {
            if d == 1 {
                acc += t.get(pos);
            }
        }
        acc
    }))
}

/// Parses a string of `0`/`1` characters (most significant first) and
/// evaluates it.
pub fn eval_digit_str(s: &str) -> Result<BigUint> {
    let digits: Vec<u8> = s
        .chars()
        .map(|c| match c {
            '0' => Ok(0u8),
            '1' => Ok(1u8),
            _ => Err(domain(format!("invalid digit {c:?}"))),
        })
        .collect::<Result<_>>()?;
    eval_digits_msb(&digits)
}
