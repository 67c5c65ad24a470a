use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use gtbracket::sweep::{
    identities_random, invariance_random, oracle_exhaustive, oracle_random, Exec,
};
use gtbracket::Letter;

const EXECS: [(&str, Exec); 2] = [
    ("sequential", Exec::Sequential),
    ("parallel", Exec::Parallel),
];

fn oracle(c: &mut Criterion) {
    let mut group = c.benchmark_group("oracle");
    group.sample_size(10);
    let alphabet = Letter::alphabet(2);
    for (name, exec) in EXECS {
        group.bench_with_input(
            BenchmarkId::new("exhaustive_len5", name),
            &exec,
            |b, &exec| b.iter(|| oracle_exhaustive(&alphabet, 2, 5, exec)),
        );
        group.bench_with_input(BenchmarkId::new("random_1000", name), &exec, |b, &exec| {
            b.iter(|| oracle_random(1, 1_000, 12, 3, exec))
        });
    }
    group.finish();
}

fn bialgebra(c: &mut Criterion) {
    let mut group = c.benchmark_group("bialgebra");
    group.sample_size(10);
    for (name, exec) in EXECS {
        group.bench_with_input(
            BenchmarkId::new("invariance_1000", name),
            &exec,
            |b, &exec| b.iter(|| invariance_random(1, 1_000, 8, 3, exec)),
        );
        group.bench_with_input(
            BenchmarkId::new("identities_1000", name),
            &exec,
            |b, &exec| b.iter(|| identities_random(1, 1_000, 5, 2, exec)),
        );
    }
    group.finish();
}

criterion_group!(benches, oracle, bialgebra);
criterion_main!(benches);
