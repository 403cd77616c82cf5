//! Sequential vs parallel execution of the heavy sweeps.

use chainrep::choquet::choquet_sup_representation_with;
use chainrep::recursion::recursion_step_with;
use chainrep::representation::verify_theorem2_with;
use chainrep::scalar::int;
use chainrep::{Execution, GroundSet, SetFunction, SimpleFunction};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

const MODES: [(&str, Execution); 2] = [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)];

/// Deterministic monotone function that is not submodular.
fn bumpy(m: usize) -> SetFunction {
    SetFunction::from_fn(GroundSet::numbered(m).unwrap(), |a| {
        let k = a.len() as i64;
        let tilt: i64 = a.elements().map(|e| (e as i64 * 7 + 3) % 5).sum();
        int(k * k + 2 * tilt)
    })
    .unwrap()
}

/// Deterministic monotone submodular function.
fn concave(m: usize) -> SetFunction {
    SetFunction::from_fn(GroundSet::numbered(m).unwrap(), |a| {
        let mass: i64 = a.elements().map(|e| 1 + (e as i64 % 3)).sum();
        int(mass.min(2 * m as i64))
    })
    .unwrap()
}

fn recursion(c: &mut Criterion) {
    let mut group = c.benchmark_group("recursion_step");
    for m in [6, 7, 8] {
        let v = bumpy(m);
        for (name, exec) in MODES {
            group.bench_with_input(BenchmarkId::new(name, m), &v, |b, v| {
                b.iter(|| recursion_step_with(v, exec).unwrap())
            });
        }
    }
    group.finish();
}

fn chain_sweep(c: &mut Criterion) {
    let mut group = c.benchmark_group("choquet_sup_sweep");
    group.sample_size(20);
    for m in [6, 7, 8] {
        let v = concave(m);
        let f = SimpleFunction::new(v.ground().clone(), (0..m).map(|i| int((i as i64 * 5) % 7 - 2)).collect()).unwrap();
        for (name, exec) in MODES {
            group.bench_with_input(BenchmarkId::new(name, m), &(&v, &f), |b, (v, f)| {
                b.iter(|| choquet_sup_representation_with(v, f, exec).unwrap())
            });
        }
    }
    group.finish();
}

fn equivalence(c: &mut Criterion) {
    let mut group = c.benchmark_group("verify_equivalence");
    group.sample_size(10);
    for m in [5, 6] {
        let v = concave(m);
        for (name, exec) in MODES {
            group.bench_with_input(BenchmarkId::new(name, m), &v, |b, v| {
                b.iter(|| verify_theorem2_with(v, exec).unwrap())
            });
        }
    }
    group.finish();
}

criterion_group!(benches, recursion, chain_sweep, equivalence);
criterion_main!(benches);
