use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use num_bigint::BigInt;

use localarith::bernoulli::BernoulliTable;
use localarith::extensions::count_tame_extensions;
use localarith::padic::{sqrt, Padic};
use localarith::poly::{hensel_lift_factors, newton_polygon, slope_factorization, QPoly};
use localarith::ramification::{check_herbrand, cyclotomic_group};
use localarith_bench::exp_truncation;

fn bernoulli(c: &mut Criterion) {
    c.bench_function("bernoulli table to 100", |b| {
        b.iter(|| {
            let mut t = BernoulliTable::new();
            black_box(t.get(100))
        })
    });
}

fn padic(c: &mut Criterion) {
    let x = Padic::from_residue(7, &BigInt::from(2), 64).unwrap();
    c.bench_function("sqrt(2) in Q_7 to 64 digits", |b| b.iter(|| sqrt(black_box(&x)).unwrap()));
}

fn polygons(c: &mut Criterion) {
    let f = exp_truncation(7).to_padic(2, 40).unwrap();
    c.bench_function("newton polygon of exp_7 over Q_2", |b| b.iter(|| newton_polygon(black_box(&f)).unwrap()));
    c.bench_function("slope factorization of exp_7 over Q_2", |b| {
        b.iter(|| slope_factorization(black_box(&f), 32).unwrap())
    });
    let f = QPoly::from_ints(&[1, 0, 0, 0, 1]);
    let g0 = QPoly::from_ints(&[2, 0, 1]);
    let h0 = QPoly::from_ints(&[3, 0, 1]);
    c.bench_function("hensel lift of T^4 + 1 over Z_5 to 5^32", |b| {
        b.iter(|| hensel_lift_factors(5, black_box(&f), &g0, &h0, 0, 32).unwrap())
    });
}

fn ramification(c: &mut Criterion) {
    c.bench_function("cyclotomic group (2, 7) with filtration", |b| {
        b.iter(|| {
            let g = cyclotomic_group(2, 7).unwrap();
            black_box(g.report(1).unwrap())
        })
    });
    let g = cyclotomic_group(3, 3).unwrap();
    let h: Vec<usize> = g.lower_group_int(1);
    c.bench_function("herbrand check on (3, 3) over G_1", |b| b.iter(|| check_herbrand(&g, black_box(&h)).unwrap()));
}

fn extensions(c: &mut Criterion) {
    c.bench_function("tame extension counts, q = 7, e <= 30, f <= 4", |b| {
        b.iter(|| {
            let mut s = 0;
            for e in (1..=30u64).filter(|e| e % 7 != 0) {
                for f in 1..=4 {
                    s += count_tame_extensions(7, e, f).unwrap();
                }
            }
            black_box(s)
        })
    });
}

criterion_group!(benches, bernoulli, padic, polygons, ramification, extensions);
criterion_main!(benches);
