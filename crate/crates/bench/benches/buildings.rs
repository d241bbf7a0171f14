use buildings_core::bruhat::build_gb_building;
use buildings_core::building::check_b2;
use buildings_core::coxeter::{enumerate_group, CoxeterMatrix, DEFAULT_CAP};
use buildings_core::flag::build_flag_building;
use buildings_core::symplectic::build_sp_building;
use criterion::{black_box, criterion_group, criterion_main, Criterion};

fn construction(c: &mut Criterion) {
    c.bench_function("enumerate H3", |b| {
        let h3 = CoxeterMatrix::h3();
        b.iter(|| enumerate_group(black_box(&h3), DEFAULT_CAP).unwrap())
    });
    c.bench_function("flag building GF(3)^3", |b| b.iter(|| build_flag_building(3, black_box(3)).unwrap()));
    c.bench_function("G/B building GL3(2)", |b| b.iter(|| build_gb_building(3, black_box(2)).unwrap()));
    c.bench_function("Sp4(F2) building", |b| b.iter(|| build_sp_building(2, black_box(2)).unwrap()));
}

fn axioms(c: &mut Criterion) {
    let flag = build_flag_building(3, 3).unwrap();
    c.bench_function("B2 on flag GF(3)^3", |b| b.iter(|| check_b2(black_box(flag.building()))));
}

criterion_group! {
    name = benches;
    config = Criterion::default().sample_size(10);
    targets = construction, axioms
}
criterion_main!(benches);
