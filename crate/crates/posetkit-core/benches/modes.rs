//! Sequential vs rayon execution on the enumeration/verification core.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use posetkit_core::search::{run_search, SearchGoal, SearchSpec};
use posetkit_core::ExecMode;

fn spec(goal: SearchGoal, exec: ExecMode) -> SearchSpec {
    SearchSpec {
        max_size: 7,
        goal,
        seed: 17,
        sample: Some(50),
        exec,
    }
}

fn bench_modes(c: &mut Criterion) {
    let workloads = [
        ("verify-distributivity", SearchGoal::Verify("distributivity-equivalence".into())),
        ("verify-monotonicity", SearchGoal::Verify("monotonicity".into())),
        ("find-nonboolean", SearchGoal::FindAll("uniquely-complemented & !boolean".into())),
    ];
    let mut group = c.benchmark_group("exec-modes");
    group.sample_size(10);
    for (name, goal) in workloads {
        group.bench_with_input(
            BenchmarkId::new("sequential", name),
            &goal,
            |b, goal| {
                b.iter(|| run_search(&spec(goal.clone(), ExecMode::Sequential)).unwrap())
            },
        );
        group.bench_with_input(BenchmarkId::new("parallel", name), &goal, |b, goal| {
            b.iter(|| run_search(&spec(goal.clone(), ExecMode::Parallel)).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, bench_modes);
criterion_main!(benches);
