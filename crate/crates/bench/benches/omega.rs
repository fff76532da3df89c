use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use pathchain::{
    gen_family, homology_report, inductive_tower, omega_basis, random_digraph, Direction, Family, Ring,
    DEFAULT_MUTATION_CAP,
};

fn omega(c: &mut Criterion) {
    let mut group = c.benchmark_group("omega_basis");
    for t in [2, 3, 4] {
        let g = gen_family(Family::Trapezohedron, t).unwrap();
        group.bench_with_input(BenchmarkId::new("trapezohedron", t), &g, |b, g| {
            b.iter(|| (0..=t + 1).map(|n| omega_basis(g, n, Ring::Rationals).len()).sum::<usize>())
        });
    }
    let g = random_digraph(9, 1, 3, 7);
    group.bench_function("random_9", |b| b.iter(|| omega_basis(&g, 3, Ring::Integers).len()));
    group.finish();
}

fn homology(c: &mut Criterion) {
    let mut group = c.benchmark_group("homology_report");
    for (name, ring) in [("q", Ring::Rationals), ("z", Ring::Integers), ("z3", Ring::prime_field(3).unwrap())] {
        let g = gen_family(Family::Euler, 3).unwrap();
        group.bench_function(BenchmarkId::new("euler_3", name), |b| {
            b.iter(|| homology_report(&g, None, ring).unwrap().betti)
        });
    }
    group.finish();
}

fn tower(c: &mut Criterion) {
    let mut group = c.benchmark_group("inductive_tower");
    group.sample_size(10);
    let g = gen_family(Family::Multiplicity, 2).unwrap();
    group.bench_function("multiplicity_2", |b| {
        b.iter(|| inductive_tower(&g, 4, Ring::Integers, Direction::Upper, DEFAULT_MUTATION_CAP).unwrap().len())
    });
    let g = gen_family(Family::Euler, 3).unwrap();
    group.bench_function("euler_3_z3", |b| {
        b.iter(|| {
            inductive_tower(&g, 4, Ring::prime_field(3).unwrap(), Direction::Upper, DEFAULT_MUTATION_CAP).unwrap().len()
        })
    });
    group.finish();
}

criterion_group!(benches, omega, homology, tower);
criterion_main!(benches);
