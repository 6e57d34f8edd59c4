use criterion::{criterion_group, criterion_main, BatchSize, Criterion};
use std::hint::black_box;

use ringstore_core::{
    build_cauchy_mds, build_ed_matrix, check_weak_column_mds, encode, execute_reconstruction,
    execute_repair, make_scheme, plan_reconstruction, plan_repair, validate_ordss, FieldSpec,
    Lcg, Matrix, Scheme,
};

fn big_ed_scheme() -> Scheme {
    // n=8, alpha=4, M=25
    make_scheme(build_ed_matrix(25, 32).unwrap(), 8, 4).unwrap()
}

fn bench_construct(c: &mut Criterion) {
    c.bench_function("build_ed_matrix 89x233", |b| {
        b.iter(|| build_ed_matrix(black_box(89), black_box(233)).unwrap())
    });
    c.bench_function("build_cauchy_mds 16x64 GF(67)", |b| {
        let field = FieldSpec::new(67).unwrap();
        b.iter(|| build_cauchy_mds(black_box(16), black_box(64), field).unwrap())
    });
    c.bench_function("check_weak_column_mds ED 24x63", |b| {
        let g = build_ed_matrix(24, 63).unwrap();
        b.iter(|| check_weak_column_mds(black_box(&g)).unwrap())
    });
}

fn bench_algebra(c: &mut Criterion) {
    let field = FieldSpec::new(257).unwrap();
    let mut rng = Lcg::new(99);
    let rows: Vec<Vec<u64>> = (0..64).map(|_| rng.vector_mod(257, 64)).collect();
    let a = Matrix::from_rows(field, &rows).unwrap();
    c.bench_function("rank 64x64 GF(257)", |b| {
        b.iter(|| black_box(&a).rank())
    });
    c.bench_function("inverse 64x64 GF(257)", |b| {
        b.iter_batched(
            || a.clone(),
            |m| m.inverse().map(|inv| inv.rows()).unwrap_or(0),
            BatchSize::SmallInput,
        )
    });
}

fn bench_protocol(c: &mut Criterion) {
    let s = big_ed_scheme();
    let x = Lcg::new(5).vector_mod(2, s.data_len());
    let st = encode(&s, &x).unwrap();
    c.bench_function("validate_ordss n=8 alpha=4 M=25", |b| {
        b.iter(|| validate_ordss(black_box(&s)).is_ordss)
    });
    c.bench_function("plan+execute reconstruction n=8 alpha=4 M=25", |b| {
        b.iter(|| {
            let plan = plan_reconstruction(&s, 1).unwrap();
            execute_reconstruction(&s, &st, &plan).unwrap().1
        })
    });
    c.bench_function("plan+execute repair n=8 alpha=4 M=25", |b| {
        b.iter(|| {
            let plan = plan_repair(&s, 3).unwrap();
            execute_repair(&s, &st, &plan).unwrap().1
        })
    });
}

criterion_group!(benches, bench_construct, bench_algebra, bench_protocol);
criterion_main!(benches);
