use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;
use wrp_core::geometry::{CanonicalScene, Point};
use wrp_core::{cert, oracle, paths, spm};

fn bench_shortest_path(c: &mut Criterion) {
    let low = CanonicalScene::boundary(0.6, 2.0, f64::INFINITY).unwrap();
    let high = CanonicalScene::boundary(1.2, 0.5, f64::INFINITY).unwrap();
    let targets = [
        Point::new(-1.3, 0.7),
        Point::new(-0.6, -0.4),
        Point::new(-1.1, -1.7),
        Point::new(0.3, -2.2),
        Point::new(0.2, -0.5),
    ];
    c.bench_function("shortest_path/both_regimes", |b| {
        b.iter(|| {
            for &t in &targets {
                let _ = black_box(paths::shortest_path(black_box(&low), t).unwrap().length);
                let _ = black_box(paths::shortest_path(black_box(&high), t).unwrap().length);
            }
        })
    });
}

fn bench_quartic_roots(c: &mut Criterion) {
    let scene = CanonicalScene::boundary(1.2, 1.5, f64::INFINITY).unwrap();
    c.bench_function("solve_w2/bisection", |b| {
        b.iter(|| black_box(paths::solve_w2(black_box(&scene), Point::new(-0.8, -1.7)).unwrap()))
    });
}

fn bench_oracle(c: &mut Criterion) {
    let scene = CanonicalScene::boundary(0.6, 3.0, 6.0).unwrap();
    let t = Point::new(0.0, 3.0);
    c.bench_function("oracle/dijkstra_k100", |b| {
        b.iter(|| black_box(oracle::oracle_shortest(black_box(&scene), t, 100).length))
    });
    c.bench_function("oracle/refined_k100", |b| {
        b.iter(|| {
            let raw = oracle::oracle_shortest(black_box(&scene), t, 100);
            black_box(oracle::refine_path(&scene, &raw.polyline).unwrap().length)
        })
    });
}

fn bench_classification_grid(c: &mut Criterion) {
    let scene = CanonicalScene::boundary(1.2, 0.5, f64::INFINITY).unwrap();
    let bbox = wrp_core::Rect::new(-2.0, -2.0, 1.0, 1.0).unwrap();
    c.bench_function("spm/grid_16x16", |b| {
        b.iter(|| black_box(spm::sample_spm_grid(black_box(&scene), bbox, 16).unwrap()))
    });
}

fn bench_certificate(c: &mut Criterion) {
    c.bench_function("cert/verify", |b| {
        b.iter(|| black_box(cert::verify_certificate().pass))
    });
}

criterion_group!(
    benches,
    bench_shortest_path,
    bench_quartic_roots,
    bench_oracle,
    bench_classification_grid,
    bench_certificate
);
criterion_main!(benches);
