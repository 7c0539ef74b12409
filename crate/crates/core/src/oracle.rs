//! Brute-force ground truth: distinct r-power enumeration over explicit
//! windows, definition-based position sequences, and periodicity scans.
//! Nothing here touches the block machinery or the closed-form tables.

use std::collections::HashMap;

use crate::error::{resource, verification, Result};
use crate::fib::fib;
use crate::spectra::ExponentSpec;
use crate::word::{fib_prefix_capped, Word, DEFAULT_CAP};

/// One distinct power factor: an explicit word of length `length` with
/// period `size`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct PowerFactor {
    pub length: u64,
    pub text: Word,
    pub size: u64,
}

/// `rem[j] =` number of consecutive matches `text[k] = text[k+s]` starting
/// at `k = j` (1-based, length `len - s`).
fn match_tail(text: &[u8], s: usize) -> Vec<u32> {
    let n = text.len();
    if n < s + 1 {
        return Vec::new();
    }
    let mut rem = vec![0u32; n - s];
    for j in (0..n - s).rev() {
        if text[j] == text[j + s] {
            rem[j] = 1 + if j + 1 < n - s { rem[j + 1] } else { 0 };
        }
    }
    rem
}

/// Every distinct r-power factor of `text`, over all sizes `s >= 1` with
/// occupied length within the text. Returns the count and the factors
/// sorted by (length, lexicographic).
///
/// Scans every integer size; finding a power whose size is not a Fibonacci
/// number is reported as a verification failure, since the engines rely on
/// the root-length law.
pub fn oracle_count(text: &Word, spec: ExponentSpec) -> Result<(u64, Vec<PowerFactor>)> {
    if text.len() as u64 > DEFAULT_CAP {
        return Err(resource("oracle window exceeds the materialization cap"));
    }
    let bytes = text.bytes();
    let n = bytes.len();
    let fib_sizes: Vec<u64> = (0..90).map(|m| fib(m) as u64).collect();
    let mut seen: HashMap<&[u8], (u64, u64)> = HashMap::new();
    for s in 1..=n {
        let l = spec.occupied_len(s as u128);
        if l > n as u128 {
            break;
        }
        let l = l as usize;
        let rem = match_tail(&bytes, s);
        let need = (l - s) as u32;
        for i in 0..=n - l {
            if rem[i] >= need {
                let key = &bytes[i..i + l];
                seen.entry(key).or_insert((s as u64, l as u64));
            }
        }
    }
    let mut factors = Vec::with_capacity(seen.len());
    for (key, (size, length)) in seen {
        if !fib_sizes.contains(&size) {
            return Err(verification(format!(
                "found a power of non-Fibonacci size {size} in {text}"
            )));
        }
        factors.push(PowerFactor {
            length,
            text: Word::from_str_unchecked(key),
            size,
        });
    }
    factors.sort();
    Ok((factors.len() as u64, factors))
}

/// `of^{r,m}[1..n]` computed literally from the definition: position `i`
/// carries code `j` when `F[i; 2f_m]` equals the `j`-th anchor square and
/// the occupied-length window at `i` still has period `f_m`.
///
/// Anchors: code `j` is `F[j; 2f_m]` for `1 <= j <= f_{m-1} - 1` and
/// `F[f_{m+1} + j; 2f_m]` for `f_{m-1} <= j <= f_m`.
pub fn oracle_positions(spec: ExponentSpec, m: i64, n: u64) -> Result<Vec<i128>> {
    let fm = fib(m) as usize;
    let l = spec.occupied_len(fm as u128) as usize;
    let need = n as usize + l + fib(m + 2) as usize + 2 * fm;
    let prefix = fib_prefix_capped(need as u64, DEFAULT_CAP.max(need as u64))?;
    let bytes = prefix.bytes();

    let mut anchors: Vec<(i128, Vec<u8>)> = Vec::new();
    for j in 1..=(fib(m - 1) - 1).max(0) {
        anchors.push((j, bytes[j as usize - 1..j as usize - 1 + 2 * fm].to_vec()));
    }
    for j in fib(m - 1).max(1)..=fib(m) {
        let pos = (fib(m + 1) + j) as usize;
        anchors.push((j, bytes[pos - 1..pos - 1 + 2 * fm].to_vec()));
    }
    for a in 0..anchors.len() {
        for b in a + 1..anchors.len() {
            if anchors[a].1 == anchors[b].1 {
                return Err(verification(format!(
                    "anchor squares {} and {} coincide at m = {m}",
                    anchors[a].0, anchors[b].0
                )));
            }
        }
    }

    let rem = match_tail(&bytes, fm);
    let need_run = (l - fm) as u32;
    let mut out = Vec::with_capacity(n as usize);
    for i in 1..=n as usize {
        let periodic = rem[i - 1] >= need_run;
        if !periodic {
            out.push(0);
            continue;
        }
        let window = &bytes[i - 1..i - 1 + 2 * fm];
        let code = anchors
            .iter()
            .find(|(_, w)| w == window)
            .map(|&(j, _)| j)
            .unwrap_or(0);
        out.push(code);
    }
    Ok(out)
}

/// Longest factor of `text` with period `s` (letters `s` apart equal).
/// Factors no longer than `s` satisfy the period vacuously.
pub fn periodicity_scan(text: &Word, s: u64) -> u64 {
    let bytes = text.bytes();
    let s = s as usize;
    if bytes.is_empty() {
        return 0;
    }
    let max_run = match_tail(&bytes, s).iter().copied().max().unwrap_or(0) as u64;
    if max_run > 0 {
        max_run + s as u64
    } else {
        s.min(bytes.len()) as u64
    }
}

/// `D(r, i, n)` for a fixed window start and every `0 <= n <= |text|` in
/// one pass over `text = F[i; n_max]`: each distinct power factor is
/// charged to the end position (within the window) of its first
/// occurrence.
pub fn window_power_counts(text: &Word, spec: ExponentSpec) -> Vec<u64> {
    let bytes = text.bytes();
    let n = bytes.len();
    let mut first_end: HashMap<&[u8], u64> = HashMap::new();
    for s in 1..=n {
        let l = spec.occupied_len(s as u128);
        if l > n as u128 {
            break;
        }
        let l = l as usize;
        let rem = match_tail(&bytes, s);
        let need = (l - s) as u32;
        for i in 0..=n - l {
            if rem[i] >= need {
                let end = (i + l) as u64;
                first_end
                    .entry(&bytes[i..i + l])
                    .and_modify(|e| *e = (*e).min(end))
                    .or_insert(end);
            }
        }
    }
    let mut counts = vec![0u64; n + 1];
    for (_, end) in first_end {
        counts[end as usize] += 1;
    }
    for i in 1..=n {
        counts[i] += counts[i - 1];
    }
    counts
}

/// `D(r, 1, n)` for every `0 <= n <= n_max` in one pass.
pub fn prefix_power_counts(spec: ExponentSpec, n_max: u64) -> Result<Vec<u64>> {
    let prefix = fib_prefix_capped(n_max, DEFAULT_CAP)?;
    Ok(window_power_counts(&prefix, spec))
}

impl Word {
    fn from_str_unchecked(bytes: &[u8]) -> Word {
        use crate::word::Letter;
        Word(
            bytes
                .iter()
                .map(|&b| if b == b'a' { Letter::A } else { Letter::B })
                .collect(),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::window;
    use num_bigint::BigUint;
    use std::str::FromStr;

    #[test]
    fn squares_in_the_two_paper_windows() {
        let w = window(&BigUint::from(2u32), 16).unwrap();
        assert_eq!(w.to_string(), "baababaabaababaa");
        let (count, factors) = oracle_count(&w, ExponentSpec::square()).unwrap();
        assert_eq!(count, 8);
        let words: Vec<String> = factors.iter().map(|f| f.text.to_string()).collect();
        assert_eq!(
            words,
            vec![
                "aa",
                "abab",
                "baba",
                "aabaab",
                "abaaba",
                "baabaa",
                "baababaaba",
                "baababaabaababaa"
            ]
        );

        let w = window(&BigUint::from(7u32), 16).unwrap();
        assert_eq!(w.to_string(), "baabaababaababaa");
        let (count, _) = oracle_count(&w, ExponentSpec::square()).unwrap();
        assert_eq!(count, 11);
    }

    #[test]
    fn single_square() {
        let w = Word::from_str("aa").unwrap();
        let (count, factors) = oracle_count(&w, ExponentSpec::square()).unwrap();
        assert_eq!(count, 1);
        assert_eq!(factors[0].size, 1);
        assert_eq!(factors[0].length, 2);
    }

    #[test]
    fn definition_based_positions() {
        let sq = ExponentSpec::square();
        assert_eq!(
            oracle_positions(sq, 3, 13).unwrap(),
            vec![1, 2, 0, 0, 0, 0, 0, 0, 1, 2, 3, 4, 5]
        );
        assert_eq!(
            oracle_positions(sq, 1, 13).unwrap(),
            vec![0, 0, 0, 1, 2, 0, 0, 0, 0, 0, 0, 1, 2]
        );
        assert!(oracle_positions(ExponentSpec::cube(), 0, 20)
            .unwrap()
            .iter()
            .all(|&v| v == 0));
    }

    #[test]
    fn periodicity_examples() {
        let p = fib_prefix_capped(fib(12) as u64, 1 << 22).unwrap();
        assert_eq!(periodicity_scan(&p, 1), 2);
        assert_eq!(periodicity_scan(&Word::empty(), 3), 0);
        // longest period-3 factor: (aba)^3 at position 6; nothing longer
        // occurs anywhere (the run length is capped by the block shape).
        assert_eq!(periodicity_scan(&p, 3), 9);
    }

    #[test]
    fn prefix_counts_small() {
        let counts = prefix_power_counts(ExponentSpec::square(), 10).unwrap();
        // F[1,6] = abaaba holds aa and (aba)^2; F[1,3] = aba holds none.
        assert_eq!(counts[3], 0);
        assert_eq!(counts[4], 1);
        assert_eq!(counts[6], 2);
    }
}
