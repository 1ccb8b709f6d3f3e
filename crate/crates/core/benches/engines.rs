//! Benchmarks for the two multiplicity engines and the series assembler.
//!
//! Each benchmark name carries the active iteration mode, so results from
//!
//! ```text
//! cargo bench -p superinv-core                           # parallel
//! cargo bench -p superinv-core --no-default-features     # sequential
//! ```
//!
//! land side by side in `target/criterion` and can be compared directly.
//! The workloads are the headline computations: the character-sum engine,
//! both constant-term routes, and one truncated series assembly.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use superinv_core::characters::Characters;
use superinv_core::multiplicity::{m_large, mbar_large, SuperAlphabets};
use superinv_core::partitions::{HookParams, Partition};
use superinv_core::series::t_series;
use superinv_core::symfunc::hook_schur_eval;

fn mode() -> &'static str {
    if cfg!(feature = "parallel") {
        "parallel"
    } else {
        "sequential"
    }
}

fn big_shape() -> Partition {
    "4,4,4,4,4".parse().unwrap()
}

fn bench_hook_schur_eval(c: &mut Criterion) {
    let sa = SuperAlphabets::new(HookParams::new(2, 1));
    let lam = big_shape();
    c.bench_function(&format!("hook_schur_eval 4,4,4,4,4 at (2,1) [{}]", mode()), |b| {
        b.iter(|| black_box(hook_schur_eval(black_box(&lam), sa.z0(), sa.z1())))
    });
}

fn bench_m_oracle(c: &mut Criterion) {
    let chars = Characters::in_memory();
    let lam = big_shape();
    c.bench_function(&format!("m_oracle 4,4,4,4,4 at (2,1) [{}]", mode()), |b| {
        b.iter(|| black_box(chars.m_oracle(2, 1, black_box(&lam)).unwrap()))
    });
}

fn bench_mbar_oracle(c: &mut Criterion) {
    let chars = Characters::in_memory();
    let lam = big_shape();
    c.bench_function(&format!("mbar_oracle 4,4,4,4,4 at (2,1) [{}]", mode()), |b| {
        b.iter(|| black_box(chars.mbar_oracle(2, 1, black_box(&lam)).unwrap()))
    });
}

fn bench_m_large(c: &mut Criterion) {
    let h = HookParams::new(2, 1);
    let lam = big_shape();
    c.bench_function(&format!("m_large 4,4,4,4,4 at (2,1) [{}]", mode()), |b| {
        b.iter(|| black_box(m_large(black_box(&lam), h).unwrap()))
    });
}

fn bench_mbar_large(c: &mut Criterion) {
    let h = HookParams::new(2, 1);
    let lam = big_shape();
    c.bench_function(&format!("mbar_large 4,4,4,4,4 at (2,1) [{}]", mode()), |b| {
        b.iter(|| black_box(mbar_large(black_box(&lam), h).unwrap()))
    });
}

fn bench_t_series(c: &mut Criterion) {
    let chars = Characters::in_memory();
    let h = HookParams::new(1, 1);
    c.bench_function(&format!("t_series (1,1;2,2) to degree 4 [{}]", mode()), |b| {
        b.iter(|| black_box(t_series(h, 2, 2, 4, &chars).unwrap()))
    });
}

fn configure() -> Criterion {
    Criterion::default().sample_size(10)
}

criterion_group! {
    name = engines;
    config = configure();
    targets = bench_hook_schur_eval,
        bench_m_oracle,
        bench_mbar_oracle,
        bench_m_large,
        bench_mbar_large,
        bench_t_series
}
criterion_main!(engines);
