//! Fits every closed-form table row against the generic engine: for each
//! family and every window length in range, the instantiated row plus the
//! family constant must reproduce the generic count at every position of
//! one full block period. Start positions i below f_{t+1} have hat index i,
//! so the row can be read off directly.

use num_bigint::BigUint;

use fibpow_core::counting::{self, Family};
use fibpow_core::fib::fib;
use fibpow_core::BlockFibWord;

fn check_family(family: Family, n_max: u64) {
    let mut checked = 0u64;
    for n in family.closed_min_n()..=n_max {
        let (pair, class) = counting::table_blocks(family, n).unwrap();
        let word = BlockFibWord::without_prefix(pair.ra, pair.rb).unwrap_or_else(|e| {
            panic!(
                "{} n={n} h={} range {}: bad block lengths: {e}",
                family.label(),
                class.h,
                class.label
            )
        });
        let period = (word.block_a.len() + word.block_b.len()) as usize;
        let row = word.expand(period);
        for (k, &row_value) in row.iter().enumerate() {
            let i = BigUint::from(k as u64 + 1);
            let expected = counting::count_generic(family.spec(), &i, n).unwrap();
            let closed = row_value + family_constant(family, class.h);
            assert_eq!(
                closed,
                expected as i128,
                "{} n={n} h={} range {} position {}: row {} + const {} != generic {}",
                family.label(),
                class.h,
                class.label,
                k + 1,
                row_value,
                family_constant(family, class.h),
                expected
            );
            checked += 1;
        }
    }
    assert!(checked > 0);
}

fn family_constant(family: Family, h: i64) -> i128 {
    match family {
        Family::Squares => fib(h - 1) - 2,
        Family::TwoPlusEps => fib(h - 1) - 4,
        Family::Cubes => fib(h - 2) - h as i128 + 1,
    }
}

#[test]
fn squares_rows_fit_generic() {
    check_family(Family::Squares, 180);
}

#[test]
fn eps_rows_fit_generic() {
    check_family(Family::TwoPlusEps, 180);
}

#[test]
fn cube_rows_fit_generic() {
    check_family(Family::Cubes, 180);
}

#[test]
fn fig10_rows_sum_to_combined_rows() {
    for n in 6..=180 {
        counting::verify_fig10(n).unwrap_or_else(|e| panic!("n = {n}: {e}"));
    }
}
