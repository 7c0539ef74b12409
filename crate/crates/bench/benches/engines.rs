use criterion::{black_box, criterion_group, criterion_main, Criterion};
use num_bigint::BigUint;

use fibpow_bench::huge_index;
use fibpow_core::counting::{count_closed, count_generic, Family};
use fibpow_core::oracle::window_power_counts;
use fibpow_core::spectra::ExponentSpec;
use fibpow_core::word::{fib_prefix, window};
use fibpow_core::zeck::ZeckRep;

fn bench_closed(c: &mut Criterion) {
    let i = huge_index(1000, 7);
    c.bench_function("closed D(2, i_1000digits, 10^6)", |b| {
        b.iter(|| count_closed(Family::Squares, black_box(&i), 1_000_000).unwrap().value)
    });
    c.bench_function("closed D(3, i_1000digits, 10^4)", |b| {
        b.iter(|| count_closed(Family::Cubes, black_box(&i), 10_000).unwrap().value)
    });
}

fn bench_generic(c: &mut Criterion) {
    let i = huge_index(1000, 11);
    c.bench_function("generic D(2, i_1000digits, 500)", |b| {
        b.iter(|| count_generic(ExponentSpec::square(), black_box(&i), 500).unwrap())
    });
}

fn bench_oracle(c: &mut Criterion) {
    let text = window(&BigUint::from(1234u32), 250).unwrap();
    c.bench_function("oracle counts over a 250-letter window", |b| {
        b.iter(|| window_power_counts(black_box(&text), ExponentSpec::square()))
    });
}

fn bench_numeration(c: &mut Criterion) {
    let i = huge_index(1000, 13);
    c.bench_function("zeckendorf encode (1000 digits)", |b| {
        b.iter(|| ZeckRep::encode(black_box(&i)))
    });
    c.bench_function("zeckendorf successor walk x1000", |b| {
        let z0 = ZeckRep::encode(&i);
        b.iter(|| {
            let mut z = z0.clone();
            for _ in 0..1000 {
                z.succ();
            }
            z
        })
    });
    c.bench_function("fibonacci word prefix f_20", |b| {
        b.iter(|| fib_prefix(black_box(17711)).unwrap())
    });
}

criterion_group!(benches, bench_closed, bench_generic, bench_oracle, bench_numeration);
criterion_main!(benches);
