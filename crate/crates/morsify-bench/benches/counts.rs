use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use morsify::{
    adjacency_graph, count_components, count_components_naive, egf_column_closed,
    enumerate_components, euler_numbers, pde_residual, Rat, Recurrence,
};

fn bench_euler(c: &mut Criterion) {
    c.bench_function("euler_numbers/200", |b| {
        b.iter(|| euler_numbers(black_box(200)))
    });
}

fn bench_counts(c: &mut Criterion) {
    c.bench_function("count_components/dp 7,6", |b| {
        b.iter(|| count_components(black_box(7), black_box(6)).unwrap())
    });
    c.bench_function("count_components/naive 4,4", |b| {
        b.iter(|| count_components_naive(black_box(4), black_box(4)).unwrap())
    });
    c.bench_function("enumerate_components/3,4", |b| {
        b.iter(|| enumerate_components(black_box(3), black_box(4)).unwrap())
    });
}

fn bench_graph(c: &mut Criterion) {
    c.bench_function("adjacency_graph/3,3", |b| {
        b.iter(|| adjacency_graph(black_box(3), black_box(3)).unwrap())
    });
}

fn bench_table(c: &mut Criterion) {
    c.bench_function("recurrence_table/-10..=12 x 8", |b| {
        b.iter(|| {
            let mut rec = Recurrence::new();
            rec.table(black_box(-10), black_box(12), black_box(8)).unwrap()
        })
    });
}

fn bench_series(c: &mut Criterion) {
    c.bench_function("pde_residual/5,8", |b| {
        b.iter(|| {
            let mut rec = Recurrence::new();
            pde_residual(&mut rec, black_box(5), black_box(8)).unwrap()
        })
    });
    let three = Rat::from_integer(3.into());
    c.bench_function("egf_column_closed/l=4 order 16", |b| {
        b.iter(|| egf_column_closed(black_box(4), black_box(16), &three).unwrap())
    });
}

criterion_group!(
    benches,
    bench_euler,
    bench_counts,
    bench_graph,
    bench_table,
    bench_series
);
criterion_main!(benches);
