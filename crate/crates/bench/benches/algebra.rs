use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use ehv_core::algebra::jacobi_check;
use ehv_core::{AlgebraSpec, Generator, GeneratorOrder, Normalizer};
use Generator::*;

fn bracket(c: &mut Criterion) {
    let spec = AlgebraSpec::ehv();
    let gens = Generator::window(-6, 6);
    c.bench_function("bracket/window6_all_pairs", |b| {
        b.iter(|| {
            for &x in &gens {
                for &y in &gens {
                    black_box(spec.bracket_gens(x, y).unwrap());
                }
            }
        })
    });
}

fn normalize(c: &mut Criterion) {
    let word = [L(3), G(-2), J(1), L(-3), G(2), J(-1)];
    c.bench_function("normalize/six_letters_cold", |b| {
        b.iter(|| {
            let mut n = Normalizer::new(AlgebraSpec::ehv(), GeneratorOrder::order_31());
            black_box(n.normalize(black_box(&word)).unwrap())
        })
    });
    let mut warm = Normalizer::new(AlgebraSpec::ehv(), GeneratorOrder::order_31());
    c.bench_function("normalize/six_letters_memoized", |b| {
        b.iter(|| black_box(warm.normalize(black_box(&word)).unwrap()))
    });
}

fn jacobi(c: &mut Criterion) {
    let spec = AlgebraSpec::ehv();
    let mut g = c.benchmark_group("jacobi");
    g.sample_size(10);
    g.bench_function("window4", |b| b.iter(|| black_box(jacobi_check(&spec, 4))));
    g.finish();
}

criterion_group!(benches, bracket, normalize, jacobi);
criterion_main!(benches);
