use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use qtest_core::{boolfunc, pipeline, statevec, BasisKet, BitString, Sign};

fn bench_hadamard(c: &mut Criterion) {
    let mut group = c.benchmark_group("hadamard_all");
    for k in [8usize, 12, 16] {
        let ket = BasisKet::new(Sign::Plus, BitString::new(k, 1).unwrap());
        let v = statevec::ket_to_vector(&ket).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(k), &v, |b, v| {
            b.iter(|| statevec::hadamard_all(black_box(v)))
        });
    }
    group.finish();
}

fn bench_run_vs_predict(c: &mut Criterion) {
    let f = boolfunc::parse_function("$6996").unwrap();
    let input: BasisKet = "-10111".parse().unwrap();
    c.bench_function("run_n4", |b| {
        b.iter(|| pipeline::run(black_box(&f), black_box(&input)))
    });
    c.bench_function("predict_n4", |b| {
        b.iter(|| pipeline::predict(black_box(&f), black_box(&input)))
    });
}

fn bench_generate_and_verify(c: &mut Criterion) {
    c.bench_function("generate_functions_8", |b| {
        b.iter(|| boolfunc::generate_functions(black_box(8)))
    });
    c.bench_function("verify_all_4", |b| {
        b.iter(|| pipeline::verify_all(black_box(4)))
    });
}

criterion_group!(
    benches,
    bench_hadamard,
    bench_run_vs_predict,
    bench_generate_and_verify
);
criterion_main!(benches);
