//! The acceptance suite shared by `--selftest` and the integration tests.

use linkinv::diagram::*;
use linkinv::hecke::{antisymmetrizer, hecke_mul, schur_weyl_rank, HeckeElem};
use linkinv::quantumrep::{alexander_rt, eval_closed_rt, QGroupData, RtGenerators};
use linkinv::ring::{qint, quantum_int, Exponent, RationalQ};
use linkinv::schur::{self, algebra, check_relations, eval_closed_schur, schur_crossing, tangle_to_ladder, weights};
use linkinv::skein::{self, EvalOptions, Reduced, SkeinEngine};
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::fmt;
use std::time::{Duration, Instant};

pub const TREFOIL: &str = include_str!("../data/trefoil.slice");
pub const HOPF: &str = include_str!("../data/hopf.tangle");

#[derive(Clone, Debug)]
pub struct Outcome {
    pub id: String,
    pub name: &'static str,
    pub pass: bool,
    pub detail: String,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:<10} {} {}: {}", self.id, if self.pass { "PASS" } else { "FAIL" }, self.name, self.detail)
    }
}

type Check = Result<String, String>;

fn outcome(id: impl Into<String>, name: &'static str, r: Check) -> Outcome {
    let (pass, detail) = match r {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    Outcome { id: id.into(), name, pass, detail }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err<E: fmt::Display>(e: E) -> String {
    e.to_string()
}

fn qi(n: i32) -> RationalQ {
    RationalQ::from_laurent(qint(n))
}

fn closure(w: &str, n: usize) -> SliceDiagram {
    braid_closure(&parse_braid(w, n).expect("valid braid"))
}

pub fn unknot() -> SliceDiagram {
    deserialize("source: -\nslice 0 cup-\nslice 0 cap-\ntarget: -\n").expect("valid")
}

pub fn hopf() -> SliceDiagram {
    deserialize(HOPF).expect("valid")
}

pub fn trefoil() -> SliceDiagram {
    deserialize(TREFOIL).expect("valid")
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_braid(r: &mut impl Rng, max_strands: usize, max_len: usize) -> BraidWord {
    let n = r.gen_range(1..=max_strands);
    let len = if n == 1 { 0 } else { r.gen_range(0..=max_len) };
    let letters = (0..len)
        .map(|_| {
            let k = r.gen_range(1..n as i32);
            if r.gen_bool(0.5) {
                k
            } else {
                -k
            }
        })
        .collect();
    BraidWord::new(n, letters).expect("letters in range")
}

/// One random framed move, biased towards deletions, R3 and commutes.
pub fn random_move(r: &mut impl Rng, d: &SliceDiagram) -> SliceDiagram {
    let ms = applicable_moves(d);
    let rare: Vec<_> = ms
        .iter()
        .filter(|m| !matches!(m, MoveSpec::R2Insert { .. } | MoveSpec::ZigzagInsert { .. } | MoveSpec::R1PairInsert { .. }))
        .collect();
    let m = if !rare.is_empty() && r.gen_bool(0.6) { *rare[r.gen_range(0..rare.len())] } else { ms[r.gen_range(0..ms.len())] };
    apply_move(d, &m).expect("applicable")
}

pub fn c1_trefoil_jones() -> Check {
    let d = trefoil();
    let expect: RationalQ = "-q^3 + q^-1 + q^-3 + q^-5".parse().map_err(err)?;
    let s = skein::jones(&d).map_err(err)?;
    let r = eval_closed_rt(&d, 2, 0).map_err(err)?;
    let l = eval_closed_schur(&d, 2).map_err(err)?;
    ensure(s == expect && r == expect && l == expect, || format!("skein {}, rt {}, schur {}", s, r, l))?;
    Ok(format!("{} from skein, rt(2,0), schur(2)", expect))
}

pub fn c2_unknot_family() -> Check {
    let d = unknot();
    let g = skein::eval_closed(&d).map_err(err)?;
    ensure(g == quantum_int(Exponent::beta()), || format!("skein gives {}", g))?;
    for (m, n) in [(1, 0), (2, 0), (3, 0), (1, 1), (2, 1)] {
        let v = eval_closed_rt(&d, m, n).map_err(err)?;
        ensure(v == qi(m as i32 - n as i32), || format!("rt({},{}) gives {}", m, n, v))?;
    }
    for m in 1..=4 {
        let v = eval_closed_schur(&d, m).map_err(err)?;
        ensure(v == qi(m as i32), || format!("schur({}) gives {}", m, v))?;
    }
    Ok("[beta]; [m-n] on 5 pairs; [m] for m = 1..4".into())
}

pub fn c3_hopf() -> Check {
    let d = hopf();
    for m in [2usize, 3] {
        let mi = m as i32;
        let word = tangle_to_ladder(&d, m).map_err(err)?;
        let want = format!("E1 F3 (q^-1 - F2E2)^2 E3 F1 1_[{m},0,0,{m}]");
        ensure(word.to_string() == want, || format!("ladder word {}", word))?;
        let v = schur::eval_ladder(&word, m).map_err(err)?.entry(0, 0);
        let formula = &qi(mi) * &(&(&RationalQ::q_pow(1) * &qi(mi - 1)) + &RationalQ::q_pow(-mi - 1));
        let s = skein::rt_sln(&d, mi).map_err(err)?;
        let r = eval_closed_rt(&d, m, 0).map_err(err)?;
        ensure(v == formula && s == formula && r == formula, || format!("m={}: schur {}, skein {}, rt {}", m, v, s, r))?;
    }
    Ok("ladder word and [m](q[m-1]+q^(-m-1)) for m = 2, 3".into())
}

pub fn c4_scalar_principle() -> Check {
    let mut r = rng(4);
    let mut done = 0;
    while done < 20 {
        let d = braid_closure(&random_braid(&mut r, 4, 8));
        for ((m1, n1), (m2, n2)) in [((2, 1), (1, 0)), ((3, 1), (2, 0))] {
            let a = eval_closed_rt(&d, m1, n1).map_err(err)?;
            let b = eval_closed_rt(&d, m2, n2).map_err(err)?;
            let s = skein::rt_sln(&d, m1 as i32 - n1 as i32).map_err(err)?;
            ensure(a == b && b == s, || format!("{}: rt({},{}) {} rt({},{}) {} skein {}", serialize(&d), m1, n1, a, m2, n2, b, s))?;
        }
        done += 1;
    }
    Ok("20 random closures with at most 8 crossings".into())
}

pub fn c5_alexander() -> Check {
    let links = [("unknot", unknot()), ("trefoil", trefoil()), ("4-crossing", closure("1 -2 1 -2", 3)), ("hopf", hopf())];
    let mut cuts = 0;
    for (name, d) in &links {
        let s = skein::reduced(d, Reduced::Alexander).map_err(err)?.specialize_beta(0);
        let r = alexander_rt(d).map_err(err)?;
        ensure(s == r, || format!("{}: skein {} vs gl(1|1) {}", name, s, r))?;
        if *name == "unknot" {
            ensure(s.is_one(), || format!("unknot gives {}", s))?;
        }
        let comps = Walker::new(d, &d.levels().map_err(err)?).components().len();
        for c in 0..comps {
            for p in cut_points(d, c).map_err(err)? {
                let t = cut_open_at(d, p).map_err(err)?;
                let v = linkinv::quantumrep::eval_tangle_rt(&t, 1, 1).map_err(err)?.scalar();
                ensure(v.as_ref() == Some(&r), || format!("{}: cut at {:?} gives {:?}", name, p, v))?;
                cuts += 1;
            }
        }
    }
    Ok(format!("4 links agree; {} cut points give the same scalar", cuts))
}

pub fn c6_reidemeister() -> Check {
    let mut r = rng(6);
    for k in 0..200 {
        let d0 = braid_closure(&random_braid(&mut r, 3, 5));
        let s0 = skein::eval_closed(&d0).map_err(err)?;
        let r0 = eval_closed_rt(&d0, 2, 1).map_err(err)?;
        let l0 = eval_closed_schur(&d0, 2).map_err(err)?;
        let mut d = d0.clone();
        for _ in 0..r.gen_range(1..=3) {
            d = random_move(&mut r, &d);
        }
        let s = skein::eval_closed(&d).map_err(err)?;
        let v = eval_closed_rt(&d, 2, 1).map_err(err)?;
        let l = eval_closed_schur(&d, 2).map_err(err)?;
        ensure(s == s0 && v == r0 && l == l0, || format!("perturbation {} changed a value: {}", k, serialize(&d)))?;
    }
    Ok("200 perturbations; skein, rt(2,1), schur(2) unchanged".into())
}

pub fn c7_algebra() -> Check {
    let z = &RationalQ::q_pow(-1) - &RationalQ::q_pow(1);
    for n in 2..=4 {
        for i in 1..n {
            let t = HeckeElem::t(n, i);
            let tt = hecke_mul(&t, &t).map_err(err)?;
            let want = t.scale(&z).add(&HeckeElem::one(n)).map_err(err)?;
            ensure(tt == want, || format!("quadratic T{} in H{}", i, n))?;
            for j in 1..n {
                let tj = HeckeElem::t(n, j);
                let ok = if i.abs_diff(j) == 1 {
                    let a = hecke_mul(&hecke_mul(&t, &tj).map_err(err)?, &t).map_err(err)?;
                    let b = hecke_mul(&hecke_mul(&tj, &t).map_err(err)?, &tj).map_err(err)?;
                    a == b
                } else {
                    hecke_mul(&t, &tj).map_err(err)? == hecke_mul(&tj, &t).map_err(err)?
                };
                ensure(ok, || format!("braid/commutation T{} T{} in H{}", i, j, n))?;
            }
        }
    }
    for l in 1..=4 {
        let p = antisymmetrizer(l);
        ensure(hecke_mul(&p, &p).map_err(err)? == p, || format!("antisymmetrizer {} not idempotent", l))?;
    }
    let x = BigRational::new(2.into(), 3.into());
    for n in 1..=4usize {
        let fact: usize = (1..=n).product();
        let rank = schur_weyl_rank(n, n, &x);
        ensure(rank == fact, || format!("Schur-Weyl rank {} for N = m = {}", rank, n))?;
    }
    for (m, n) in [(3, 0), (1, 1), (2, 1)] {
        let g = QGroupData::new(m, n);
        use Orientation::*;
        for word in [vec![Up], vec![Down], vec![Up, Up], vec![Up, Down]] {
            let bad: Vec<String> = g.check_relations(&word).into_iter().filter(|r| !r.1).map(|r| r.0).collect();
            ensure(bad.is_empty(), || format!("({},{}) on {:?}: {:?}", m, n, word, bad))?;
        }
        let gens = RtGenerators::new(m, n);
        ensure(gens.yang_baxter() && gens.skein_identity(), || format!("R fails for ({},{})", m, n))?;
    }
    Ok("Hecke relations, idempotents, Schur-Weyl ranks, quantum group relations, YBE".into())
}

pub fn c8_schur_anchor() -> Check {
    for m in [2usize, 3] {
        let x = schur_crossing(&schur::SchurWeight::new(vec![1, 1]), 1, 1, m).map_err(err)?.to_mat();
        ensure(x == RtGenerators::new(m, 0).r, || format!("q^-1 - FE differs from R for m = {}", m))?;
    }
    let mut n_checks = 0;
    for m in 1..=4usize {
        algebra(m).map_err(err)?;
        for l in 2..=4 {
            for n in 0..=4 {
                for w in weights(l, n, m) {
                    for (name, ok) in check_relations(&w, m).map_err(err)? {
                        ensure(ok, || format!("{} fails on {} for m = {}", name, w, m))?;
                        n_checks += 1;
                    }
                }
            }
        }
    }
    Ok(format!("anchor holds for m = 2, 3; {} relation instances on l, N, m <= 4", n_checks))
}

pub struct MemoTiming {
    pub diagram: &'static str,
    pub with: Duration,
    pub without: Duration,
    pub nodes_with: u64,
    pub nodes_without: u64,
}

impl MemoTiming {
    pub fn speedup(&self) -> f64 {
        self.without.as_secs_f64() / self.with.as_secs_f64().max(1e-9)
    }
}

fn timed(opts: EvalOptions, d: &SliceDiagram, runs: usize) -> (Duration, u64) {
    let mut best = Duration::MAX;
    let mut nodes = 0;
    for _ in 0..runs {
        let e = SkeinEngine::new(opts);
        let t = Instant::now();
        let _ = e.eval_closed(d).expect("closed");
        best = best.min(t.elapsed());
        nodes = e.stats().nodes;
    }
    (best, nodes)
}

/// Best-of-five timings of the 8-crossing benchmark with and without the cache.
pub fn memo_timing() -> MemoTiming {
    let d = closure("1 1 1 1 1 1 1 1", 2);
    let (with, nodes_with) = timed(EvalOptions { memo: true, parallel: false }, &d, 5);
    let (without, nodes_without) = timed(EvalOptions { memo: false, parallel: false }, &d, 5);
    MemoTiming { diagram: "closure of s1^8", with, without, nodes_with, nodes_without }
}

pub fn c9_performance() -> Check {
    let d = closure("1 -2 1 -2 1 -2 1 -2 1 -2", 3);
    let t = Instant::now();
    skein::eval_closed(&d).map_err(err)?;
    let big = t.elapsed();
    ensure(big < Duration::from_secs(30), || format!("10 crossings took {:?}", big))?;
    let m = memo_timing();
    ensure(m.speedup() >= 5.0, || format!("memo speedup only {:.1}x", m.speedup()))?;
    Ok(format!("10 crossings in {:.1} ms; memo speedup {:.1}x on s1^8", big.as_secs_f64() * 1e3, m.speedup()))
}

pub const CRITERIA: [(&str, fn() -> Check); 9] = [
    ("trefoil jones value", c1_trefoil_jones),
    ("unknot family", c2_unknot_family),
    ("hopf link", c3_hopf),
    ("scalar principle", c4_scalar_principle),
    ("alexander cross-engine", c5_alexander),
    ("reidemeister invariance", c6_reidemeister),
    ("algebra suites", c7_algebra),
    ("schur normalization anchor", c8_schur_anchor),
    ("performance sanity", c9_performance),
];

pub fn criterion(k: usize) -> Outcome {
    let (name, f) = CRITERIA[k - 1];
    outcome(format!("criterion {}", k), name, f())
}

pub fn all() -> Vec<Outcome> {
    (1..=CRITERIA.len()).map(criterion).collect()
}

/// A corrupted R-matrix constant must break the Yang-Baxter check.
pub fn mutation_detected() -> Outcome {
    let mut g = RtGenerators::new(2, 0);
    let good = g.yang_baxter();
    g.r[(0, 0)] = RationalQ::q_pow(-2);
    let broken = !g.yang_baxter();
    let r = if good && broken {
        Ok("corrupted R(0,0) = q^-2 fails the Yang-Baxter check".to_string())
    } else {
        Err(format!("intact YBE {}, corrupted YBE {}", good, !broken))
    };
    outcome("mutation", "R-matrix hook", r)
}
