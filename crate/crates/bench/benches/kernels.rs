//! Criterion benchmarks for the hot numerical paths: Airy evaluation,
//! wave-function recurrences, Fredholm determinants, Tracy–Widom
//! evaluation, the Hastings–McLeod build and per-sample Monte-Carlo cost.

use criterion::{criterion_group, criterion_main, BatchSize, Criterion};
use std::hint::black_box;

use softedge::expansion::{eval_expansion, EnsembleKind};
use softedge::fredholm::{det_airy, det_finite, FiniteKernel};
use softedge::painleve::{Beta, TracyWidom};
use softedge::sampler::{sample_batch, stream_rng, EnsembleSpec};
use softedge::special::{airy, wave_pair, WaveFunctionSpec};

fn bench_airy(c: &mut Criterion) {
    c.bench_function("airy_series_region", |b| {
        b.iter(|| black_box(airy(black_box(-3.7))))
    });
    c.bench_function("airy_asymptotic_region", |b| {
        b.iter(|| black_box(airy(black_box(24.0))))
    });
}

fn bench_wave(c: &mut Criterion) {
    c.bench_function("hermite_wave_n100", |b| {
        b.iter(|| black_box(wave_pair(WaveFunctionSpec::hermite(100), black_box(14.0))))
    });
    c.bench_function("laguerre_wave_n100_p400", |b| {
        b.iter(|| {
            black_box(wave_pair(
                WaveFunctionSpec::laguerre_np(100, 400),
                black_box(880.0),
            ))
        })
    });
}

fn bench_fredholm(c: &mut Criterion) {
    c.bench_function("det_airy_at_minus2", |b| {
        b.iter(|| black_box(det_airy(black_box(-2.0)).unwrap().value))
    });
    c.bench_function("det_finite_gue10", |b| {
        let mu = 20f64.sqrt();
        b.iter(|| {
            black_box(
                det_finite(FiniteKernel::HermiteN(10), black_box(mu)).unwrap().value,
            )
        })
    });
}

fn bench_tracy_widom(c: &mut Criterion) {
    c.bench_function("hastings_mcleod_build", |b| {
        b.iter(|| black_box(TracyWidom::build().unwrap()))
    });
    let tw = TracyWidom::build().unwrap();
    c.bench_function("f2_eval", |b| {
        b.iter(|| black_box(tw.f2(black_box(-1.5)).unwrap()))
    });
    c.bench_function("expansion_m3_eval", |b| {
        b.iter(|| {
            black_box(
                eval_expansion(
                    EnsembleKind::Laguerre,
                    Beta::One,
                    10.0,
                    Some(40.0),
                    3,
                    black_box(-1.0),
                    false,
                    &tw,
                )
                .unwrap(),
            )
        })
    });
}

fn bench_sampler(c: &mut Criterion) {
    c.bench_function("gue10_lambda_max_draw", |b| {
        let spec = EnsembleSpec::gaussian(Beta::Two, 10);
        let mut i = 0u64;
        b.iter_batched(
            || {
                i += 1;
                stream_rng(1, i)
            },
            |mut rng| black_box(spec.sample_matrix(&mut rng).largest()),
            BatchSize::SmallInput,
        )
    });
    c.bench_function("gue10_batch_10k", |b| {
        let spec = EnsembleSpec::gaussian(Beta::Two, 10);
        b.iter(|| black_box(sample_batch(spec, 10_000, 5).unwrap().values.len()))
    });
}

criterion_group!(
    benches,
    bench_airy,
    bench_wave,
    bench_fredholm,
    bench_tracy_widom,
    bench_sampler
);
criterion_main!(benches);
