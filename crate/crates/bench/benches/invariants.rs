use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use secant_bench::{minor_system, params, DEGREE_INSTANCES, H_INSTANCES};
use secant_core::complex::Complex;
use secant_core::counting::degree;
use secant_core::groebner::{is_groebner, GroebnerBudget};
use secant_core::shelling::{h_vector, HBudget, HMethod};
use std::hint::black_box;

fn bench_degree(c: &mut Criterion) {
    let mut group = c.benchmark_group("degree");
    for (a, b, t) in DEGREE_INSTANCES {
        group.bench_with_input(
            BenchmarkId::from_parameter(format!("{a}-{b}-{t}")),
            &params(a, b, t),
            |bench, &p| bench.iter(|| degree(black_box(p)).unwrap()),
        );
    }
    group.finish();
}

fn bench_facets(c: &mut Criterion) {
    let complex = Complex::new(params(4, 4, 2)).unwrap();
    c.bench_function("facet-stream/4-4-2", |bench| {
        bench.iter(|| complex.facets().sets().count())
    });
}

fn bench_h(c: &mut Criterion) {
    let mut group = c.benchmark_group("h-vector");
    group.sample_size(10);
    for (a, b, t) in H_INSTANCES {
        for method in HMethod::ALL {
            let id = BenchmarkId::new(method.name(), format!("{a}-{b}-{t}"));
            group.bench_with_input(id, &params(a, b, t), |bench, &p| {
                bench.iter(|| h_vector(p, method, HBudget::default()).unwrap())
            });
        }
    }
    group.finish();
}

fn bench_groebner(c: &mut Criterion) {
    let mut group = c.benchmark_group("is-groebner");
    group.sample_size(10);
    for (a, b, t) in [(2, 3, 1), (3, 3, 2)] {
        let (ring, gens) = minor_system(a, b, t);
        group.bench_function(format!("{a}-{b}-{t}"), |bench| {
            bench.iter(|| {
                is_groebner(&ring, &gens, GroebnerBudget::default())
                    .unwrap()
                    .is_groebner()
            })
        });
    }
    group.finish();
}

criterion_group!(benches, bench_degree, bench_facets, bench_h, bench_groebner);
criterion_main!(benches);
