use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use ehv_core::indmod::enumerate_basis;
use ehv_core::{Bindings, Generator, InducedModule, ModuleKind};

fn vacuum_action(c: &mut Criterion) {
    let m = InducedModule::new(ModuleKind::Vacuum, Bindings::new()).unwrap();
    let basis: Vec<_> = enumerate_basis(4).iter().map(|w| m.word_vector(w).unwrap()).collect();
    c.bench_function("vacuum/L1_on_degree4_basis", |b| {
        b.iter(|| {
            for v in &basis {
                black_box(m.act(Generator::L(1), v).unwrap());
            }
        })
    });
}

fn basis(c: &mut Criterion) {
    c.bench_function("vacuum/enumerate_degree8", |b| {
        b.iter(|| black_box(enumerate_basis(black_box(8))))
    });
}

criterion_group!(benches, vacuum_action, basis);
criterion_main!(benches);
