//! Sweep throughput: the partitioned driver with one worker versus all
//! logical CPUs. Build with `--no-default-features` to measure the plain
//! sequential path without rayon in the binary at all.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use stable_perms::enumerate::{
    census_rank1, sweep_agreement, sweep_family, sweep_t1, RunOptions, SearchSpace,
};

fn opts(jobs: usize) -> RunOptions {
    RunOptions {
        jobs,
        ..RunOptions::default()
    }
}

fn job_variants() -> Vec<(&'static str, usize)> {
    let mut variants = vec![("seq", 1usize)];
    if cfg!(feature = "parallel") {
        variants.push(("par", 0));
    }
    variants
}

fn bench_census_involutions(c: &mut Criterion) {
    let mut group = c.benchmark_group("census_involutions");
    group.sample_size(20);
    for n in [4usize, 5] {
        for (label, jobs) in job_variants() {
            group.bench_with_input(
                BenchmarkId::new(label, n),
                &(n, jobs),
                |b, &(n, jobs)| {
                    b.iter(|| {
                        census_rank1(
                            SearchSpace::TwoTranspositionInvolutions { n },
                            &opts(jobs),
                        )
                        .unwrap()
                    })
                },
            );
        }
    }
    group.finish();
}

fn bench_census_full_s32(c: &mut Criterion) {
    let mut group = c.benchmark_group("census_full_sn2");
    group.sample_size(10);
    for (label, jobs) in job_variants() {
        group.bench_with_input(BenchmarkId::new(label, 3), &jobs, |b, &jobs| {
            b.iter(|| census_rank1(SearchSpace::FullSn2 { n: 3 }, &opts(jobs)).unwrap())
        });
    }
    group.finish();
}

fn bench_agreement_s32(c: &mut Criterion) {
    let mut group = c.benchmark_group("agreement_sn2");
    group.sample_size(10);
    for (label, jobs) in job_variants() {
        group.bench_with_input(BenchmarkId::new(label, 3), &jobs, |b, &jobs| {
            b.iter(|| sweep_agreement(3, &opts(jobs)).unwrap())
        });
    }
    group.finish();
}

fn bench_family_sweep(c: &mut Criterion) {
    let mut group = c.benchmark_group("family_sweep");
    group.sample_size(20);
    for (label, jobs) in job_variants() {
        group.bench_with_input(BenchmarkId::new(label, 4), &jobs, |b, &jobs| {
            b.iter(|| sweep_family(4, &opts(jobs)).unwrap())
        });
    }
    group.finish();
}

fn bench_t1_sweep(c: &mut Criterion) {
    let mut group = c.benchmark_group("t1_sweep");
    group.sample_size(20);
    for (label, jobs) in job_variants() {
        group.bench_with_input(BenchmarkId::new(label, 5), &jobs, |b, &jobs| {
            b.iter(|| sweep_t1(5, &opts(jobs)).unwrap())
        });
    }
    group.finish();
}

criterion_group!(
    benches,
    bench_census_involutions,
    bench_census_full_s32,
    bench_agreement_s32,
    bench_family_sweep,
    bench_t1_sweep
);
criterion_main!(benches);
