use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use cliquecheck::{
    build_network, decide, gen_gnp, hunt, max_clique_exact, max_flow, maximize, BudgetVariant,
    HuntMode, InterdictionSet,
};

fn bench_max_flow(c: &mut Criterion) {
    let g = gen_gnp(40, 0.5, 1).unwrap();
    let net = build_network(&g);
    let none = InterdictionSet::empty();
    let half = InterdictionSet::new((0..g.edge_count()).step_by(2));
    c.bench_function("max_flow/n40_p50_empty", |b| {
        b.iter(|| max_flow(black_box(&net), black_box(&none)).unwrap())
    });
    c.bench_function("max_flow/n40_p50_half_interdicted", |b| {
        b.iter(|| max_flow(black_box(&net), black_box(&half)).unwrap())
    });
}

fn bench_decide(c: &mut Criterion) {
    let g = gen_gnp(200, 0.5, 2).unwrap();
    c.bench_function("decide/n200_p50_k10", |b| {
        b.iter(|| decide(black_box(&g), 10, BudgetVariant::Prose).unwrap())
    });
}

fn bench_maximize(c: &mut Criterion) {
    let g = gen_gnp(60, 0.5, 3).unwrap();
    c.bench_function("maximize/n60_p50", |b| {
        b.iter(|| maximize(black_box(&g), BudgetVariant::Prose))
    });
}

fn bench_max_clique(c: &mut Criterion) {
    let g = gen_gnp(25, 0.5, 4).unwrap();
    c.bench_function("max_clique_exact/n25_p50", |b| {
        b.iter(|| max_clique_exact(black_box(&g)))
    });
}

fn bench_hunt(c: &mut Criterion) {
    c.bench_function("hunt/exhaustive_n4", |b| {
        b.iter(|| hunt(HuntMode::Exhaustive { n_max: 4 }, BudgetVariant::Prose).unwrap())
    });
}

criterion_group!(
    benches,
    bench_max_flow,
    bench_decide,
    bench_maximize,
    bench_max_clique,
    bench_hunt
);
criterion_main!(benches);
