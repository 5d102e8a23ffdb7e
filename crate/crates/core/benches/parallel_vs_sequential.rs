//! Runs the main parallel workloads on the thread pool and on the calling
//! thread.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use msmb_core::bases::{graver, minimal_markov_bases};
use msmb_core::complex::{b_reduction_closure, distance_reducing_complex};
use msmb_core::distance::{irreducible_sets, is_distance_reducing, universal_distance_reducing};
use msmb_core::{par, MoveSet, SemigroupMatrix};

fn row(entries: &[i64]) -> SemigroupMatrix {
    SemigroupMatrix::from_row(entries).expect("valid matrix")
}

type Workload = (&'static str, Box<dyn Fn()>);

fn workloads() -> Vec<Workload> {
    vec![
        ("graver (14 21 23 29)", Box::new(|| drop(black_box(graver(&row(&[14, 21, 23, 29])).unwrap())))),
        (
            "minimal markov (8 31 33 53)",
            Box::new(|| drop(black_box(minimal_markov_bases(&row(&[8, 31, 33, 53])).unwrap()))),
        ),
        ("irreducibles (8 31 33 53)", Box::new(|| drop(black_box(irreducible_sets(&row(&[8, 31, 33, 53])).unwrap())))),
        (
            "graver test (14 21 23 29)",
            Box::new(|| {
                let a = row(&[14, 21, 23, 29]);
                for b in minimal_markov_bases(&a).unwrap() {
                    black_box(is_distance_reducing(&a, &b).unwrap());
                }
            }),
        ),
        (
            "universal reducing (3 5 8 11)",
            Box::new(|| drop(black_box(universal_distance_reducing(&row(&[3, 5, 8, 11]), None).unwrap()))),
        ),
        (
            "reduction complex (2 3 4)",
            Box::new(|| {
                let a = row(&[2, 3, 4]);
                let basis = MoveSet::from_vectors([vec![3, -2, 0], vec![2, 0, -1]]).unwrap();
                let s: Vec<_> = graver(&a).unwrap().iter().cloned().collect();
                let s = b_reduction_closure(&basis, &s, 3).unwrap();
                black_box(distance_reducing_complex(&basis, &s, 3).unwrap());
            }),
        ),
    ]
}

fn compare(c: &mut Criterion) {
    let mut group = c.benchmark_group("parallel_vs_sequential");
    group.sample_size(10);
    for (name, work) in workloads() {
        par::set_sequential(false);
        group.bench_function(BenchmarkId::new("parallel", name), |b| b.iter(&work));
        group.bench_function(BenchmarkId::new("sequential", name), |b| b.iter(|| par::with_sequential(&work)));
    }
    group.finish();
}

criterion_group!(benches, compare);
criterion_main!(benches);
