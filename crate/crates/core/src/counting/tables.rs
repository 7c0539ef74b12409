//! Run-length tables behind the closed-form counters: for each exponent
//! family and each range of the window length `n`, the block pair whose
//! Fibonacci word lists the windowed count as a function of the start
//! position. Segments are instantiated from `(h, n)` at query time; any
//! segment whose length comes out non-positive is dropped.
//!
//! A few entries deviate from their printed sources; each carries an
//! erratum id, and `TABLE_ERRATA` documents every correction. All rows are
//! validated against the generic engine and the brute-force oracle by the
//! table-fit test and the acceptance sweep.

use crate::block::{Block, RunSegment};
use crate::error::Result;
use crate::fib::fib;

use super::{CubeRange, EpsRange, SquareRange};

fn flat(start: i128, len: i128) -> RunSegment {
    RunSegment::flat(start, len)
}

fn up(start: i128, len: i128) -> RunSegment {
    RunSegment::up(start, len)
}

fn down(start: i128, len: i128) -> RunSegment {
    RunSegment::down(start, len)
}

/// A documented correction to a printed table or formula.
#[derive(Debug, Clone, Copy)]
pub struct Erratum {
    pub id: &'static str,
    pub note: &'static str,
}

pub const TABLE_ERRATA: &[Erratum] = &[
    Erratum {
        id: "sq-range-ii-seg1",
        note: "squares, range II, first segment of R_a: printed length \
               f_{h+2}+f_{h-3}-n makes |R_a| = f_{h+1}+1; corrected to \
               f_{h+2}+f_{h-3}-n-1 (confirmed by sweep against oracle)",
    },
    Erratum {
        id: "eps-range-v-seg4",
        note: "2+eps, range V, fourth segment of R_a: printed length \
               n-f_{h+3}+f_{h-4}-3 is negative over the whole range; \
               corrected to its negation f_{h+3}-f_{h-4}-n+3",
    },
    Erratum {
        id: "eps-range-ii-h3",
        note: "2+eps, range II at h = 3 (n = 11): the printed row's middle \
               plateau does not degenerate correctly (true row has the \
               pattern f_h-1, f_h, f_h-1, f_h, f_h-1 in the middle); the \
               sweep-fitted row is used for this single window length",
    },
    Erratum {
        id: "cube-range-vi",
        note: "cubes, range VI, segments 2-4 of R_a: printed as \
               up(f_{h-1}-2), flat length f_{h+3}-n-2, down from n-3f_h-1 \
               with length n-2f_{h+1}-f_{h-1}+2; the sweep fixes them to \
               up(f_{h-1}-1) (as range VII prints), flat length \
               f_{h+3}-n-1, down from n-3f_h-2 with length \
               n-2f_{h+1}-f_{h-1}+1",
    },
    Erratum {
        id: "cube-range-viii",
        note: "cubes, range VIII, sixth segment of R_a: printed start \
               n-f_{h+2}-f_{h-2}-1 breaks the row at every h; the ascent \
               must continue the preceding plateau, so it starts at \
               n-f_{h+2}-f_{h-1}-1 (confirmed by sweep against oracle)",
    },
    Erratum {
        id: "fig10-iii2-h2",
        note: "per-size rows (squares), m = h-1, range III(2): at h = 2 the \
               third R_b segment instantiates with a negative length, and \
               dropping it leaves R_b too long; the negative length is \
               charged against the final segment instead",
    },
    Erratum {
        id: "cube-constant",
        note: "cube count constant: printed f_{h-1}+h-9 fits the rows only \
               at h = 4; the saturated sizes m <= h-3 contribute \
               sum (f_{m-1}-1) = f_{h-2}-h+1, which fits the rows at \
               every h (confirmed by sweep against oracle)",
    },
    Erratum {
        id: "cube-hat-digits",
        note: "cube count hat index: printed digit lists skip an index \
               (a_{h+2}a_h... resp. a_{h+3}a_{h+1}...); the indexed-access \
               lemma forces the contiguous truncation [a_t...a_0]_F + 1 \
               with f_t = |R_a|",
    },
    Erratum {
        id: "cube-block-lengths",
        note: "cube table caption says |R_a| = f_{h+1} (f_{h+2} in range X); \
               the printed segments sum to f_{h+2} (f_{h+3} in range X), \
               matching the corrected hat rule",
    },
    Erratum {
        id: "extremal-edges",
        note: "the printed one-line extremal equations are off by one at \
               three edge families: the row maximum outside range I misses \
               the value f_h still present at n = 2f_h+f_{h-3}-1 (left end \
               of range II); the range I(1)/I(2) split at 2n < 7f_{h-1} is \
               one off (the true minimum crossover is 2n <= 7f_{h-1}-2, so \
               n = (7f_{h-1}-1)/2 takes the other branch when f_{h-1} is \
               odd); and at h = 2 the branch order flips. Extremal values \
               are taken from the row segment endpoints, which the sweep \
               confirms at every n",
    },
    Erratum {
        id: "shrink-threshold",
        note: "the r-power position sequence of size f_m is a zero sequence \
               already for ceil(r f_m) >= 3f_m+f_{m-1}-1; the printed \
               threshold (zero only for r > 3+(f_{m-1}-1)/f_m) is one letter \
               too generous, so the longest f_m-periodic factor has length \
               3f_m+f_{m-1}-2 (confirmed by periodicity scan)",
    },
];

pub fn erratum_note(id: &str) -> Option<&'static str> {
    TABLE_ERRATA.iter().find(|e| e.id == id).map(|e| e.note)
}

pub struct TablePair {
    pub ra: Block,
    pub rb: Block,
    pub errata: &'static [&'static str],
}

pub fn square_blocks(range: SquareRange, h: i64, n: u64) -> Result<TablePair> {
    let f = |k: i64| fib(h + k);
    let n = n as i128;
    let (ra, rb, errata): (Vec<RunSegment>, Vec<RunSegment>, &'static [&'static str]) = match range
    {
        SquareRange::I => (
            vec![
                down(n - 2 * f(-1), f(1) + f(-1) - n - 1),
                flat(2 * n - f(1) - 3 * f(-1) + 1, n - 3 * f(-1) + 1),
                up(2 * n - f(1) - 3 * f(-1) + 2, f(1) + f(-1) - n - 2),
                flat(n - 2 * f(-1), n - 2 * f(0) + 2),
                up(n - 2 * f(-1) + 1, f(1) + f(-1) - n - 1),
                flat(f(0), n - 2 * f(0) + 1),
                down(f(0) - 1, f(-4)),
                flat(f(0) - f(-4) - 1, f(1) + f(-1) - n - 1),
                up(f(0) - f(-4), f(-4)),
                flat(f(0), n - 2 * f(0) + 1),
                down(f(0) - 1, f(1) + f(-1) - n - 1),
                flat(n - 2 * f(-1), n - 2 * f(0) + 1),
            ],
            vec![
                down(n - 2 * f(-1), f(1) + f(-1) - n - 1),
                flat(2 * n - f(1) - 3 * f(-1) + 1, n - 3 * f(-1) + 1),
                up(2 * n - f(1) - 3 * f(-1) + 2, f(1) + f(-1) - n - 2),
                flat(n - 2 * f(-1), n - f(1) + 2),
            ],
            &[],
        ),
        SquareRange::II => (
            vec![
                flat(n - 2 * f(-1), f(2) + f(-3) - n - 1),
                down(n - 2 * f(-1), n - f(1) - f(-1) + 1),
                flat(f(0), f(-3)),
                down(f(0) - 1, f(1) + 2 * f(-2) - n - 2),
                flat(n - f(0) - f(-2) + 1, n - f(1) - f(-1) + 3),
                up(n - f(0) - f(-2) + 2, f(1) + 2 * f(-2) - n - 2),
                flat(f(0), f(-3)),
                up(f(0), n - f(1) - f(-1) + 1),
                flat(n - 2 * f(-1), f(-3)),
            ],
            vec![flat(n - 2 * f(-1), f(0))],
            &["sq-range-ii-seg1"],
        ),
        SquareRange::III => (
            vec![
                flat(n - 2 * f(-1), f(2) + f(-3) - n - 1),
                down(n - 2 * f(-1), n - f(1) - f(-1) + 1),
                flat(f(0), 3 * f(0) - n - 1),
                up(f(0), n - f(1) - f(-1) + 1),
                flat(n - 2 * f(-1), f(-3)),
            ],
            vec![flat(n - 2 * f(-1), f(0))],
            &[],
        ),
        SquareRange::IV => (
            vec![
                down(f(1) - 1, f(-1)),
                flat(f(0), f(2) + f(-2) - n),
                up(f(0) + 1, n - f(2) + f(-2)),
                flat(n - 2 * f(-1), f(1) + 4 * f(-1) - n),
                down(n - 2 * f(-1) - 1, n - 2 * f(1) + f(-2)),
            ],
            vec![
                down(f(1) - 1, f(-1)),
                flat(f(0), f(2) + f(-2) - n),
                up(f(0) + 1, f(-1) - 2),
                flat(f(1) - 1, n - f(2) + 2),
            ],
            &[],
        ),
        SquareRange::V => (
            vec![
                down(f(1) - 1, f(2) + f(0) - n),
                flat(n - 2 * f(0), n - 3 * f(0)),
                up(n - 2 * f(0) + 1, 2 * f(-2)),
                flat(n - 2 * f(-1), f(2) + f(-1) - n),
                down(n - 2 * f(-1) - 1, n - 3 * f(0)),
                flat(f(0) + 2 * f(-2) - 1, f(2) + f(0) - n - 1),
                up(f(0) + 2 * f(-2), n - 3 * f(0) + 1),
                flat(n - 2 * f(-1), f(2) + f(-1) - n),
                down(n - 2 * f(-1) - 1, n - 2 * f(1) + f(-2)),
            ],
            vec![
                down(f(1) - 1, f(2) + f(0) - n),
                flat(n - 2 * f(0), n - 3 * f(0)),
                up(n - 2 * f(0) + 1, f(2) + f(0) - n - 2),
                flat(f(1) - 1, n - f(2) + 2),
            ],
            &[],
        ),
    };
    Ok(TablePair { ra: Block::new(ra), rb: Block::new(rb), errata })
}

pub fn eps_blocks(range: EpsRange, h: i64, n: u64) -> Result<TablePair> {
    let f = |k: i64| fib(h + k);
    let n = n as i128;
    let shared_rb = vec![flat(n - f(0) - f(-3) - 2, f(0))];
    let (ra, rb, errata): (Vec<RunSegment>, Vec<RunSegment>, &'static [&'static str]) = match range
    {
        EpsRange::I => (
            vec![
                down(n - f(0) - f(-3) - 2, f(1) + f(-1) - n),
                flat(2 * n - f(1) - 3 * f(-1) - 2, n - 3 * f(-1) - 1),
                up(2 * n - f(1) - 3 * f(-1) - 1, f(1) + f(-1) - n - 1),
                flat(n - f(0) - f(-3) - 2, n - 2 * f(0) + 1),
                up(n - f(0) - f(-3) - 1, f(1) + f(-1) - n + 1),
                flat(f(0), n - 2 * f(0) - 1),
                down(f(0) - 1, f(-4) + 1),
                flat(f(-1) + f(-3) - 2, f(1) + f(-1) - n - 1),
                up(f(-1) + f(-3) - 1, f(-4) + 1),
                flat(f(0), n - 2 * f(0) - 1),
                down(f(0) - 1, f(1) + f(-1) - n + 2),
                flat(n - f(0) - f(-3) - 2, n - 2 * f(0) - 1),
            ],
            vec![
                down(n - f(0) - f(-3) - 2, f(1) + f(-1) - n),
                flat(2 * n - f(1) - 3 * f(-1) - 2, n - 3 * f(-1) - 1),
                up(2 * n - f(1) - 3 * f(-1) - 1, f(1) + f(-1) - n - 1),
                flat(n - f(0) - f(-3) - 2, n - f(1) + 2),
            ],
            &[],
        ),
        // The printed row degenerates incorrectly at h = 3 (n = 11, the
        // only member of range II there); see the eps-range-ii-h3 erratum.
        EpsRange::II if h == 3 => (
            vec![
                flat(f(0) - 2, 2),
                flat(f(0) - 1, 1),
                flat(f(0), 1),
                flat(f(0) - 1, 1),
                flat(f(0), 1),
                flat(f(0) - 1, 1),
                flat(f(0) - 2, 1),
            ],
            shared_rb,
            &["eps-range-ii-h3"],
        ),
        EpsRange::II => (
            vec![
                flat(f(0) - 2, f(-1) - 1),
                flat(f(0) - 1, 1),
                flat(f(0), f(-3) - 1),
                down(f(0) - 1, f(-4) - 1),
                flat(f(0) - f(-4), 3),
                up(f(0) - f(-4) + 1, f(-4) - 1),
                flat(f(0), f(-3) - 1),
                flat(f(0) - 1, 1),
                flat(f(0) - 2, f(-3)),
            ],
            shared_rb,
            &[],
        ),
        EpsRange::III => (
            vec![
                flat(n - f(0) - f(-3) - 2, f(1) + 2 * f(-1) - n),
                down(n - f(0) - f(-3) - 2, n - f(1) - f(-1) - 1),
                flat(f(0), f(-3)),
                down(f(0) - 1, 2 * f(0) + f(-2) - n - 1),
                flat(n - f(0) - f(-2), n - f(1) - f(-1) + 3),
                up(n - f(0) - f(-2) + 1, 2 * f(0) + f(-2) - n - 1),
                flat(f(0), f(-3)),
                up(f(0), n - f(1) - f(-1) - 1),
                flat(n - f(0) - f(-3) - 2, f(-3) + 1),
            ],
            shared_rb,
            &[],
        ),
        EpsRange::IV => (
            vec![
                flat(n - f(0) - f(-3) - 2, f(1) + 2 * f(-1) - n),
                down(n - f(0) - f(-3) - 2, n - f(1) - f(-1) - 1),
                flat(f(0), 3 * f(0) - n + 1),
                up(f(0), n - f(1) - f(-1) - 1),
                flat(n - f(0) - f(-3) - 2, f(-3) + 1),
            ],
            shared_rb,
            &[],
        ),
        EpsRange::V => (
            vec![
                down(f(1) - 2, f(-1) - 1),
                flat(f(0), f(2) + f(-2) - n + 1),
                up(f(0), n - f(1) - f(-1) - 2),
                flat(n - f(0) - f(-3) - 2, f(3) - f(-4) - n + 3),
                down(n - f(0) - f(-3) - 3, n - f(2) - f(-3) - 1),
            ],
            vec![
                down(f(1) - 2, f(-1) - 1),
                flat(f(0), f(2) + f(-2) - n + 1),
                up(f(0), f(-1) - 2),
                flat(f(1) - 2, n - f(2) + 2),
            ],
            &["eps-range-v-seg4"],
        ),
        EpsRange::VI => (
            vec![
                down(f(1) - 2, f(2) + f(0) - n),
                flat(n - 2 * f(0) - 2, n - f(2) - f(-2) - 1),
                up(n - 2 * f(0) - 1, 2 * f(-2) - 1),
                flat(n - f(0) - f(-3) - 2, f(2) + f(-1) - n + 3),
                down(n - f(0) - f(-3) - 3, n - f(2) - f(-2) - 1),
                flat(f(1) + f(-4) - 2, f(2) + f(0) - n - 1),
                up(f(1) + f(-4) - 1, n - f(2) - f(-2) - 1),
                flat(n - f(0) - f(-3) - 2, f(2) + f(-1) - n + 3),
                down(n - f(0) - f(-3) - 3, n - f(2) - f(-3) - 1),
            ],
            vec![
                down(f(1) - 2, f(2) + f(0) - n),
                flat(n - 2 * f(0) - 2, n - f(2) - f(-2) - 1),
                up(n - 2 * f(0) - 1, f(2) + f(0) - n - 1),
                flat(f(1) - 2, n - f(2) + 2),
            ],
            &[],
        ),
    };
    Ok(TablePair { ra: Block::new(ra), rb: Block::new(rb), errata })
}

pub fn cube_blocks(range: CubeRange, h: i64, n: u64) -> Result<TablePair> {
    let f = |k: i64| fib(h + k);
    let n = n as i128;
    let ra_i_ii = vec![
        up(n - f(2), f(2) + f(-1) - n - 1),
        flat(f(-1) - 2, n - f(1) - f(-1) + 1),
        down(f(-1) - 2, f(-2)),
        flat(f(-3) - 1, f(2) + f(-1) - n),
        up(f(-3), n - 3 * f(0) + 1),
        flat(n - 3 * f(0) + f(-3), f(2) + f(0) - n - 2),
        down(n - 3 * f(0) + f(-3) - 1, n - 3 * f(0) + 1),
        flat(f(-3) - 1, f(2) + f(-1) - n),
        up(f(-3), n - f(1) - 2 * f(-1)),
    ];
    let ra_iii_iv = vec![
        flat(f(-1) - 2, f(0)),
        down(f(-1) - 2, f(2) + f(0) - n),
        flat(n - 3 * f(0) - 1, n - f(2) - f(-1)),
        up(n - 3 * f(0), f(-3) + 1),
        flat(n - 2 * f(0) - 2 * f(-2), f(2) + f(0) - n - 2),
        down(n - 2 * f(0) - 2 * f(-2) - 1, f(-3) + 1),
        flat(n - 3 * f(0) - 1, n - f(2) - f(-1)),
        up(n - 3 * f(0), f(2) + f(0) - n - 2),
        flat(f(-1) - 2, n - f(2) - f(-1) + 2),
    ];
    let rb_iv_to_ix = vec![flat(f(-1) - 2, f(1))];
    let (ra, rb): (Vec<RunSegment>, Vec<RunSegment>) = match range {
        CubeRange::I => (
            ra_i_ii,
            vec![
                up(n - f(2), f(2) + f(-1) - n - 1),
                flat(f(-1) - 2, n - f(1) - f(-1) + 2),
                down(f(-1) - 3, f(-2) - 2),
                flat(f(-3) - 1, 5 * f(-1) - n + 1),
                up(f(-3), n - 3 * f(0) + f(-4)),
            ],
        ),
        CubeRange::II => (
            ra_i_ii,
            vec![
                up(n - f(2), f(2) + f(-1) - n - 1),
                flat(f(-1) - 2, n - f(1) - f(-1) + 2),
                down(f(-1) - 3, f(1) + 3 * f(-1) - n - 1),
                flat(n - f(1) - 2 * f(-1) - 1, n - 5 * f(-1) - 1),
                up(n - f(1) - 2 * f(-1) - 1, f(-3) + 1),
            ],
        ),
        CubeRange::III => (
            ra_iii_iv,
            vec![
                flat(f(-1) - 2, f(0) + 1),
                down(f(-1) - 3, f(1) + 3 * f(-1) - n - 1),
                flat(n - f(1) - 2 * f(-1) - 1, n - 5 * f(-1) - 1),
                up(n - f(1) - 2 * f(-1) - 1, f(1) + 3 * f(-1) - n - 1),
                flat(f(-1) - 2, n - f(2) - f(-1) + 2),
            ],
        ),
        CubeRange::IV => (ra_iii_iv, rb_iv_to_ix),
        CubeRange::V => (
            vec![
                flat(f(-1) - 2, f(2) + 2 * f(0) - n - 1),
                up(f(-1) - 2, n - f(2) - f(0) + 1),
                flat(n - 3 * f(0) - 1, f(-2)),
                up(n - 3 * f(0), 2 * f(1) + f(-1) - n - 1),
                flat(f(-1) + f(-3) - 2, n - f(2) - f(0) + 2),
                down(f(-1) + f(-3) - 3, 2 * f(1) + f(-1) - n - 1),
                flat(n - 3 * f(0) - 1, f(-2) - 1),
                down(n - 3 * f(0) - 2, n - f(2) - f(0) + 1),
                flat(f(-1) - 2, f(-2)),
            ],
            rb_iv_to_ix,
        ),
        CubeRange::VI => (
            // First four segments corrected; see the cube-range-vi erratum.
            vec![
                flat(f(-1) - 2, f(2) + 2 * f(0) - n),
                up(f(-1) - 1, n - f(2) - f(0)),
                flat(n - 3 * f(0) - 1, f(3) - n - 1),
                down(n - 3 * f(0) - 2, n - 2 * f(1) - f(-1) + 1),
                flat(f(-1) + f(-3) - 2, f(1) + 4 * f(-1) - n),
                up(f(-1) + f(-3) - 1, n - 2 * f(1) - f(-1) + 1),
                flat(n - 3 * f(0) - 1, f(3) - n - 2),
                down(n - 3 * f(0) - 2, n - f(2) - f(0) + 1),
                flat(f(-1) - 2, f(-2)),
            ],
            rb_iv_to_ix,
        ),
        CubeRange::VII => (
            vec![
                flat(f(-1) - 2, f(2) + 2 * f(0) - n),
                up(f(-1) - 1, n - f(2) - f(0)),
                flat(n - 3 * f(0) - 1, f(3) - n - 2),
                down(n - 3 * f(0) - 1, f(-3) + 2),
                flat(n - 2 * f(1) - 2, n - f(1) - 4 * f(-1)),
                up(n - 2 * f(1) - 1, f(-3) + 1),
                flat(n - 3 * f(0) - 1, f(3) - n - 2),
                down(n - 3 * f(0) - 2, n - f(2) - f(0) + 1),
                flat(f(-1) - 2, f(-2)),
            ],
            rb_iv_to_ix,
        ),
        CubeRange::VIII => (
            // Sixth segment start corrected; see the cube-range-viii erratum.
            vec![
                flat(f(-1) - 2, f(2) + 2 * f(0) - n),
                up(f(-1) - 1, f(-1) - 2),
                flat(2 * f(-1) - 3, n - f(3) + 2),
                down(2 * f(-1) - 3, f(2) + 3 * f(-1) - n - 1),
                flat(n - f(2) - f(-1) - 2, n - f(1) - 4 * f(-1) + 1),
                up(n - f(2) - f(-1) - 1, f(3) + f(-3) - n - 2),
                flat(2 * f(-1) - 3, n - f(3) + 3),
                down(2 * f(-1) - 4, f(-1) - 1),
                flat(f(-1) - 2, f(-2)),
            ],
            rb_iv_to_ix,
        ),
        CubeRange::IX => (
            vec![
                flat(f(-1) - 2, f(2) + 2 * f(0) - n),
                up(f(-1) - 1, f(-1) - 2),
                flat(2 * f(-1) - 3, n - f(2) - f(0) + 3),
                down(2 * f(-1) - 4, f(-1) - 1),
                flat(f(-1) - 2, f(-2)),
            ],
            rb_iv_to_ix,
        ),
        CubeRange::X => (
            vec![
                up(n - 4 * f(0) - 1, f(3) + f(0) - n - 2),
                flat(2 * f(-1) - 3, n - f(2) - f(0) + 3),
                down(2 * f(-1) - 4, f(-1) - 2),
                flat(f(-1) - 2, f(1) + 5 * f(0) - n + 1),
                up(f(-1) - 1, n - f(1) - 3 * f(0)),
            ],
            vec![
                up(n - 4 * f(0) - 1, f(3) + f(0) - n - 2),
                flat(2 * f(-1) - 3, n - f(2) - f(0) + 3),
                down(2 * f(-1) - 4, f(-1) - 2),
                flat(f(-1) - 2, 5 * f(0) - n + 1),
                up(f(-1) - 1, n - f(1) - 3 * f(0)),
            ],
        ),
    };
    let errata: &'static [&'static str] = match range {
        CubeRange::VI => &[
            "cube-range-vi",
            "cube-constant",
            "cube-hat-digits",
            "cube-block-lengths",
        ],
        CubeRange::VIII => &[
            "cube-range-viii",
            "cube-constant",
            "cube-hat-digits",
            "cube-block-lengths",
        ],
        _ => &["cube-constant", "cube-hat-digits", "cube-block-lengths"],
    };
    Ok(TablePair { ra: Block::new(ra), rb: Block::new(rb), errata })
}

/// Which of the three unsaturated sizes a per-size row describes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Fig10Size {
    H,
    HMinus1,
    HMinus2,
}

/// The square-family per-size rows (windowed counts for one size), used
/// only as an internal cross-check: the three rows must sum to the
/// combined table above.
pub fn fig10_blocks(size: Fig10Size, range: SquareRange, iii_late: bool, h: i64, n: u64) -> (Block, Block) {
    let f = |k: i64| fib(h + k);
    let n = n as i128;
    let (ra, rb): (Vec<RunSegment>, Vec<RunSegment>) = match size {
        Fig10Size::H => match (range, iii_late) {
            (SquareRange::I | SquareRange::II, _) | (SquareRange::III, false) => (
                vec![
                    flat(n - 2 * f(0) + 1, f(2) - n - 1),
                    down(n - 2 * f(0), n - 2 * f(0)),
                    flat(0, 3 * f(0) - n + 1),
                    up(1, n - 2 * f(0)),
                ],
                vec![flat(n - 2 * f(0) + 1, f(0))],
            ),
            (SquareRange::III, true) | (SquareRange::IV, _) => (
                vec![
                    down(f(-1) - 1, f(-1) - 1),
                    flat(0, 3 * f(0) - n + 1),
                    up(1, n - 2 * f(0)),
                    flat(n - 2 * f(0) + 1, f(2) + f(0) - n - 1),
                    down(n - 2 * f(0), n - f(2) + 1),
                ],
                if matches!(range, SquareRange::III) {
                    vec![
                        down(f(-1) - 1, f(-1) - 1),
                        flat(0, 3 * f(0) - n + 1),
                        up(1, f(-1) - 1),
                        flat(f(-1) - 1, n - f(2) + 1),
                    ]
                } else {
                    vec![
                        down(f(-1) - 1, f(-1) - 1),
                        flat(0, 3 * f(0) - n + 1),
                        up(1, f(-1) - 2),
                        flat(f(-1) - 1, n - f(2) + 2),
                    ]
                },
            ),
            (SquareRange::V, _) => (
                vec![
                    down(f(-1) - 1, f(2) + f(0) - n - 1),
                    flat(n - 3 * f(0), n - 3 * f(0) + 1),
                    up(n - 3 * f(0) + 1, 4 * f(0) - n - 1),
                    flat(f(0), n - 3 * f(0) + f(-1) + 1),
                    down(f(0) - 1, f(-2)),
                ],
                vec![
                    down(f(-1) - 1, f(2) + f(0) - n - 1),
                    flat(n - 3 * f(0), n - 3 * f(0) + 1),
                    up(n - 3 * f(0) + 1, f(2) + f(0) - n - 2),
                    flat(f(-1) - 1, n - f(2) + 2),
                ],
            ),
        },
        Fig10Size::HMinus1 => match (range, iii_late) {
            (SquareRange::I, _) => (
                vec![
                    down(f(-2) - 1, f(1) + f(-1) - n - 1),
                    flat(n - 3 * f(-1), n - 3 * f(-1) + 1),
                    up(n - 3 * f(-1) + 1, 4 * f(-1) - n - 1),
                    flat(f(-1), n - 2 * f(-1) - f(-3) + 1),
                    down(f(-1) - 1, f(-3)),
                ],
                vec![
                    down(f(-2) - 1, f(1) + f(-1) - n - 1),
                    flat(n - 3 * f(-1), n - 3 * f(-1) + 1),
                    up(n - 3 * f(-1) + 1, f(1) + f(-1) - n - 2),
                    flat(f(-2) - 1, n - f(1) + 2),
                ],
            ),
            (SquareRange::II, _) | (SquareRange::III, false) => (
                vec![
                    flat(f(-2) - 1, f(2) - n - 1),
                    up(f(-2), f(-3)),
                    flat(f(-1), n - 2 * f(-1) - f(-3) + 1),
                    down(f(-1) - 1, f(-3)),
                ],
                vec![flat(f(-2) - 1, f(0))],
            ),
            (SquareRange::III, true) => (
                vec![
                    up(n - f(1) - f(-1) + 1, f(2) + f(-3) - n - 1),
                    flat(f(-1), n - 2 * f(-1) - f(-3) + 1),
                    down(f(-1) - 1, f(-3)),
                    flat(f(-2) - 1, f(2) + f(0) - n - 1),
                    up(f(-2), n - f(2) + 1),
                ],
                vec![
                    up(n - f(1) - f(-1) + 1, f(2) + f(-3) - n - 1),
                    flat(f(-1), n - 2 * f(-1) - f(-3) + 1),
                    down(f(-1) - 1, f(2) + f(-3) - n - 2),
                    // a negative third length borrows from the final
                    // segment; see the fig10-iii2-h2 erratum
                    flat(
                        n - f(1) - f(-1) + 1,
                        n - f(2) + 2 + (f(2) + f(-3) - n - 2).min(0),
                    ),
                ],
            ),
            (SquareRange::IV | SquareRange::V, _) => (
                vec![
                    flat(f(-1), f(1) - f(-3)),
                    down(f(-1) - 1, f(-3)),
                    flat(f(-2) - 1, f(2) + f(0) - n - 1),
                    up(f(-2), f(-3)),
                    flat(f(-1), n - f(2) - f(-3) + 1),
                ],
                vec![flat(f(-1), f(1))],
            ),
        },
        Fig10Size::HMinus2 => match (range, iii_late) {
            (SquareRange::I, _) => (
                vec![
                    flat(f(-2), f(-1) + f(-3)),
                    down(f(-2) - 1, f(-4)),
                    flat(f(-3) - 1, f(1) + f(-1) - n - 1),
                    up(f(-3), f(-4)),
                    flat(f(-2), n - f(0) - 2 * f(-2) + 1),
                ],
                vec![flat(f(-2), f(0))],
            ),
            (SquareRange::II, _) => (
                vec![
                    flat(f(-2), f(-1) + f(-3)),
                    down(f(-2) - 1, 2 * f(0) + f(-2) - n - 1),
                    flat(n - 2 * f(0) + 1, n - f(1) - f(-1) + 1),
                    up(n - 2 * f(0) + 1, 2 * f(0) + f(-2) - n - 1),
                    flat(f(-2), n - f(0) - 2 * f(-2) + 1),
                ],
                vec![flat(f(-2), f(0))],
            ),
            (SquareRange::III, false) => (
                vec![flat(f(-2), f(1))],
                vec![flat(f(-2), f(0))],
            ),
            (SquareRange::III, true) | (SquareRange::IV | SquareRange::V, _) => (
                vec![flat(f(-2), f(2))],
                vec![flat(f(-2), f(1))],
            ),
        },
    };
    (Block::new(ra), Block::new(rb))
}
