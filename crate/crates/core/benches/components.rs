//! Sequential vs rayon evaluation of the per-component work of the principal
//! reflection check: A⊗A extraction followed by a y→s substitution.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use yangian_core::exec::{par_map, seq_map};
use yangian_core::formal::{substitute, Family, FourierSubstitution};
use yangian_core::relations::engine::{quadruples, Basis, Extractor};
use yangian_core::relations::twisted::reflection_parts;
use yangian_core::tensor::SignVector;

fn components(c: &mut Criterion) {
    let mut group = c.benchmark_group("reflection_components");
    group.sample_size(10);
    for n in [2u32, 3] {
        let s = SignVector::symmetric(n);
        let delta = reflection_parts(&s, Family::Y, Basis::Principal).unwrap().delta;
        let ex = Extractor::new(n);
        let qs = quadruples(n);
        let work = |q: &[u32; 4]| {
            let comp = ex.component2(&delta, *q).unwrap();
            substitute(&comp, FourierSubstitution::y_to_s()).unwrap()
        };
        group.bench_with_input(BenchmarkId::new("seq_map", n), &qs, |b, qs| b.iter(|| black_box(seq_map(qs, work))));
        group.bench_with_input(BenchmarkId::new("par_map", n), &qs, |b, qs| b.iter(|| black_box(par_map(qs, work))));
    }
    group.finish();
}

criterion_group!(benches, components);
criterion_main!(benches);
