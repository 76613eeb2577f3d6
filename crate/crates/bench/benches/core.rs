use criterion::{black_box, criterion_group, criterion_main, Criterion};
use vstab::corpus::connected_multigraphs;
use vstab::limits::BetaTable;
use vstab::posets::{deg_poset, enumerate_orbits, enumerate_window, normal_form, qdeg_scan};
use vstab::sheaves::{EnumerateOptions, SheafStability, Supports};
use vstab::{is_classical, VStability};
use vstab_bench::{banana, cycle5, k4};

fn validation(c: &mut Criterion) {
    let window = enumerate_window(&k4());
    c.bench_function("validate/k4-window", |b| {
        b.iter(|| window.iter().filter(|s| black_box(s).validate().is_ok()).count())
    });
    c.bench_function("validate_via_union/k4-window", |b| {
        b.iter(|| window.iter().filter(|s| black_box(s).validate_via_union().is_ok()).count())
    });
}

fn orbits(c: &mut Criterion) {
    let g = k4();
    c.bench_function("enumerate_orbits/k4", |b| b.iter(|| enumerate_orbits(black_box(&g))));
    c.bench_function("enumerate_orbits/cycle5", |b| b.iter(|| enumerate_orbits(black_box(&cycle5()))));
    let reps = enumerate_orbits(&g);
    c.bench_function("normal_form/k4-reps", |b| {
        b.iter(|| reps.iter().map(|s| normal_form(black_box(s)).unwrap()).collect::<Vec<_>>())
    });
}

fn posets(c: &mut Criterion) {
    c.bench_function("deg_poset/k4", |b| b.iter(|| deg_poset(black_box(&k4())).unwrap()));
    c.bench_function("qdeg_scan/cycle5", |b| b.iter(|| qdeg_scan(black_box(&cycle5()))));
    let corpus = connected_multigraphs(4, 6);
    c.bench_function("qdeg_scan/corpus-4-6", |b| b.iter(|| corpus.iter().map(qdeg_scan).count()));
}

fn classical(c: &mut Criterion) {
    let reps = enumerate_orbits(&k4());
    c.bench_function("is_classical/k4-reps", |b| {
        b.iter(|| reps.iter().filter(|s| is_classical(black_box(s)).unwrap().is_some()).count())
    });
}

fn sheaves(c: &mut Criterion) {
    let reps = enumerate_orbits(&k4());
    let opts = EnumerateOptions { supports: Supports::All, degree_window: Some((-3, 3)) };
    c.bench_function("enumerate_semistable/k4-first-rep", |b| {
        b.iter(|| SheafStability::new(black_box(&reps[0])).unwrap().enumerate_semistable(&opts))
    });
}

fn limits(c: &mut Criterion) {
    let s = VStability::checked(banana(), 0, vec![0, 0]).unwrap();
    let table = BetaTable::new(&s).unwrap();
    c.bench_function("limit/banana", |b| b.iter(|| table.limit(black_box(&[5, -5])).unwrap()));
    let g = cycle5();
    let reps = enumerate_orbits(&g);
    let tables: Vec<BetaTable> = reps.iter().map(|s| BetaTable::new(s).unwrap()).collect();
    let d = [4, -3, 2, -2, 0];
    c.bench_function("limit/cycle5-reps", |b| {
        b.iter(|| tables.iter().map(|t| t.limit(black_box(&d)).unwrap()).collect::<Vec<_>>())
    });
}

criterion_group!(benches, validation, orbits, posets, classical, sheaves, limits);
criterion_main!(benches);
