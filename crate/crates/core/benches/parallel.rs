//! Compares the data-parallel and sequential execution of representative
//! verification workloads.

use criterion::{criterion_group, criterion_main, Criterion};

use cms_core::exec::ExecMode;
use cms_core::verify::{run_suite, Bounds, Suite};
use cms_core::Context;

fn bench_suites(c: &mut Criterion) {
    let bounds = Bounds { max_weight: Some(3), ..Bounds::default() };
    let mut group = c.benchmark_group("commutators_w3");
    group.sample_size(10);
    for (name, mode) in [("parallel", ExecMode::Parallel), ("sequential", ExecMode::Sequential)] {
        group.bench_function(name, |b| {
            b.iter(|| {
                let ctx = Context::new();
                let report = run_suite(&ctx, Suite::Commutators, bounds, mode).unwrap();
                assert!(report.passed());
            })
        });
    }
    group.finish();

    let mut group = c.benchmark_group("actions_w3");
    group.sample_size(10);
    for (name, mode) in [("parallel", ExecMode::Parallel), ("sequential", ExecMode::Sequential)] {
        group.bench_function(name, |b| {
            b.iter(|| {
                let ctx = Context::new();
                let report = run_suite(&ctx, Suite::Actions, bounds, mode).unwrap();
                assert!(report.passed());
            })
        });
    }
    group.finish();
}

criterion_group!(benches, bench_suites);
criterion_main!(benches);
