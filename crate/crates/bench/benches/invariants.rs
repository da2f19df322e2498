use criterion::{criterion_group, criterion_main, Criterion};
use cusp_floer::oracle::v_s_oracle;
use cusp_floer::{check, rm_bound_equivalence, CountingFunction};
use cusp_floer_bench::{cusp_functions, fg27, triple_product};
use std::hint::black_box;

fn oracle(c: &mut Criterion) {
    let complex = triple_product();
    c.bench_function("snf_triple_product_v0", |b| b.iter(|| v_s_oracle(black_box(&complex), 0).unwrap()));
}

fn convolution(c: &mut Criterion) {
    let fns = cusp_functions();
    c.bench_function("convolve_five_cusps", |b| b.iter(|| CountingFunction::convolve_all(black_box(&fns))));
}

fn obstruction(c: &mut Criterion) {
    let config = fg27();
    c.bench_function("check_fg27", |b| b.iter(|| check(black_box(&config)).unwrap()));
}

fn rm_sweep(c: &mut Criterion) {
    c.bench_function("rm_bound_sweep_d40", |b| {
        b.iter(|| {
            let mut mismatches = 0;
            for eta in 0..=60 {
                for g in 0..=60 {
                    if let Ok((direct, closed)) = rm_bound_equivalence(black_box(40), eta, g) {
                        mismatches += usize::from(direct != closed);
                    }
                }
            }
            mismatches
        })
    });
}

criterion_group!(benches, oracle, convolution, obstruction, rm_sweep);
criterion_main!(benches);
