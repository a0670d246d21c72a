use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use linkinv::diagram::{braid_closure, parse_braid, SliceDiagram};
use linkinv::quantumrep::eval_closed_rt;
use linkinv::schur::eval_closed_schur;
use linkinv::skein::{EvalOptions, SkeinEngine};
use std::hint::black_box;

fn closure(word: &str, strands: usize) -> SliceDiagram {
    braid_closure(&parse_braid(word, strands).unwrap())
}

fn skein(c: &mut Criterion) {
    let cases = [
        ("s1^8", closure("1 1 1 1 1 1 1 1", 2)),
        ("(s1 s2^-1)^5", closure("1 -2 1 -2 1 -2 1 -2 1 -2", 3)),
        ("s1 s2 s3 s1^-1 s2 s3^-1", closure("1 2 3 -1 2 -3", 4)),
    ];
    let mut g = c.benchmark_group("skein");
    g.sample_size(10);
    for (name, d) in &cases {
        for (label, opts) in [
            ("sequential", EvalOptions { memo: true, parallel: false }),
            ("parallel", EvalOptions { memo: true, parallel: true }),
            ("no-memo", EvalOptions { memo: false, parallel: false }),
        ] {
            g.bench_with_input(BenchmarkId::new(label, name), d, |b, d| {
                b.iter(|| SkeinEngine::new(opts).eval_closed(black_box(d)).unwrap())
            });
        }
    }
    g.finish();
}

// RT and ladder evaluation parallelize at compile time; run with
// --no-default-features for the sequential numbers.
fn matrix_engines(c: &mut Criterion) {
    let d = closure("1 -2 1 -2 1 -2", 3);
    let mut g = c.benchmark_group("matrix");
    g.sample_size(10);
    g.bench_function("rt(2,0)", |b| b.iter(|| eval_closed_rt(black_box(&d), 2, 0).unwrap()));
    g.bench_function("rt(2,1)", |b| b.iter(|| eval_closed_rt(black_box(&d), 2, 1).unwrap()));
    g.bench_function("schur(2)", |b| b.iter(|| eval_closed_schur(black_box(&d), 2).unwrap()));
    g.bench_function("schur(3)", |b| b.iter(|| eval_closed_schur(black_box(&d), 3).unwrap()));
    g.finish();
}

criterion_group!(benches, skein, matrix_engines);
criterion_main!(benches);
