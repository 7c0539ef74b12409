//! Property tests for the numeration and block layers.

use num_bigint::BigUint;
use num_traits::Zero;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};

use fibpow_core::block::{Block, BlockFibWord, RunSegment};
use fibpow_core::fib::{fib, floor_mult_phi, floor_mult_phi_u64};
use fibpow_core::zeck::ZeckRep;

proptest! {
    #[test]
    fn zeck_round_trip(n in 0u64..u64::MAX) {
        let z = ZeckRep::encode_u64(n);
        prop_assert!(z.is_canonical());
        prop_assert_eq!(z.value(), BigUint::from(n));
    }

    #[test]
    fn zeck_successor(n in 0u64..u64::MAX - 1) {
        let mut z = ZeckRep::encode_u64(n);
        z.succ();
        prop_assert_eq!(z, ZeckRep::encode_u64(n + 1));
    }

    #[test]
    fn eval_accepts_non_canonical(digits in proptest::collection::vec(0u8..=1, 0..24)) {
        let v = fibpow_core::zeck::eval_digits_msb(&digits).unwrap();
        let direct: u128 = digits
            .iter()
            .rev()
            .enumerate()
            .filter(|(_, &d)| d == 1)
            .map(|(j, _)| fib(j as i64) as u128)
            .sum();
        prop_assert_eq!(v, BigUint::from(direct));
    }
}

#[test]
fn zeck_round_trip_big_values() {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..100 {
        let digits: String = (0..300)
            .map(|k| {
                let d = if k == 0 {
                    rng.gen_range(1..=9)
                } else {
                    rng.gen_range(0..=9)
                };
                char::from(b'0' + d)
            })
            .collect();
        let n: BigUint = digits.parse().unwrap();
        let z = ZeckRep::encode(&n);
        assert!(z.is_canonical());
        assert_eq!(z.value(), n);
    }
}

#[test]
fn beatty_complement() {
    // ⌊pφ⌋ + ⌊p(1-φ)⌋ = p - 1 for every p (φ irrational).
    for p in 1..=10_000u64 {
        let a = floor_mult_phi_u64(p);
        let b = {
            // ⌊p(1-φ)⌋ = p - ⌊pφ⌋ - 1
            let t = (5u128 * (p as u128) * (p as u128)).isqrt();
            p as u128 - (t - p as u128) / 2 - 1
        };
        assert_eq!(a as u128 + b, p as u128 - 1, "p = {p}");
    }
}

#[test]
fn beatty_matches_high_precision_decimal() {
    // φ to 60 digits, scaled: isqrt(5 * 10^120) = ⌊√5 * 10^60⌋.
    let scale = BigUint::from(10u32).pow(60);
    let sqrt5 = (BigUint::from(5u32) * &scale * &scale).sqrt();
    let phi_scaled = (&sqrt5 - &scale) / 2u32; // ⌊φ * 10^60⌋
    for p in 1..=10_000u64 {
        let direct = (&phi_scaled * p) / &scale;
        assert_eq!(
            floor_mult_phi(&BigUint::from(p)),
            direct,
            "p = {p}"
        );
    }
}

#[test]
fn beatty_zero_input() {
    assert!(floor_mult_phi(&BigUint::zero()).is_zero());
}

fn arb_block(max_scale: i64) -> impl Strategy<Value = (usize, Vec<i128>, Vec<i128>, Vec<i128>)> {
    (0..=max_scale).prop_flat_map(|t| {
        let la = fib(t) as usize;
        let lb = fib(t - 1) as usize;
        (
            Just(t as usize),
            proptest::collection::vec(-5i128..50, la..=la),
            proptest::collection::vec(-5i128..50, lb..=lb),
            proptest::collection::vec(-5i128..50, 0..6),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]
    #[test]
    fn block_access_matches_expansion((_, a, b, prefix) in arb_block(8)) {
        let w = BlockFibWord::new(
            Block::from_values(&prefix),
            Block::from_values(&a),
            Block::from_values(&b),
        ).unwrap();
        let flat = w.expand(10_000);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(a.len() as u64);
        for _ in 0..64 {
            let i = rng.gen_range(1..=10_000usize);
            prop_assert_eq!(w.value_at(&BigUint::from(i)).unwrap(), flat[i - 1]);
        }
    }
}

#[test]
fn run_segment_values() {
    let s = RunSegment::down(10, 4);
    assert_eq!((1..=4).map(|k| s.value_at(k)).collect::<Vec<_>>(), vec![10, 9, 8, 7]);
    assert!(Block::new(vec![RunSegment::up(3, -2)]).is_empty());
}
