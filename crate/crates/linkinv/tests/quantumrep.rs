mod common;

use common::*;
use linkinv::diagram::*;
use linkinv::quantumrep::*;
use linkinv::ring::{qint, RationalQ};
use linkinv::skein;
use proptest::prelude::*;

const GRID: [(usize, usize); 5] = [(1, 0), (2, 0), (3, 0), (1, 1), (2, 1)];

fn qp(k: i32) -> RationalQ {
    RationalQ::q_pow(k)
}

#[test]
fn k_actions() {
    let g = QGroupData::new(2, 0);
    let k = g.on_v(Gen::K(1));
    assert_eq!((k[(0, 0)].clone(), k[(1, 1)].clone()), (qp(1), qp(-1)));
    let g = QGroupData::new(1, 1);
    let k = g.on_v(Gen::K(1));
    assert_eq!((k[(0, 0)].clone(), k[(1, 1)].clone()), (qp(1), qp(1)));
    let e = g.action(Gen::E(1), &[Orientation::Up, Orientation::Up]);
    assert!(e.mul(&e).is_zero());
    assert!(!e.is_zero());
}

#[test]
fn dual_actions() {
    let g = QGroupData::new(2, 0);
    assert_eq!(g.on_dual(Gen::E(1))[(1, 0)], -&qp(-1));
    assert_eq!(g.on_dual(Gen::K(1))[(0, 0)], qp(-1));
    for (m, n) in [(2, 0), (3, 0), (1, 1), (2, 1), (1, 2), (2, 2)] {
        let g = QGroupData::new(m, n);
        for i in 1..m + n {
            for x in [Gen::E(i), Gen::K(i)] {
                assert_eq!(g.on_dual(x), g.dual_formulas(x).unwrap(), "({},{}) {:?}", m, n, x);
            }
        }
    }
}

#[test]
fn defining_relations() {
    use Orientation::*;
    for (m, n) in [(2, 0), (3, 0), (1, 1), (2, 1), (2, 2)] {
        let g = QGroupData::new(m, n);
        for word in [vec![Up], vec![Down], vec![Up, Up], vec![Up, Down]] {
            let report = g.check_relations(&word);
            assert!(!report.is_empty());
            let bad: Vec<_> = report.iter().filter(|r| !r.1).collect();
            assert!(bad.is_empty(), "({},{}) on {:?}: {:?}", m, n, word, bad);
        }
    }
    assert!(QGroupData::new(3, 0).check_relations(&[Up]).iter().any(|r| r.0.starts_with("serre")));
    assert!(QGroupData::new(2, 2).check_relations(&[Up]).iter().any(|r| r.0.starts_with("quartic")));
}

#[test]
fn generator_identities() {
    for (m, n) in GRID {
        let r = RtGenerators::new(m, n);
        assert!(r.yang_baxter(), "ybe ({},{})", m, n);
        assert!(r.skein_identity());
        assert_eq!(r.r.mul(&r.r_inv), Mat::identity((m + n) * (m + n)));
        let fails = r.intertwiner_failures(&QGroupData::new(m, n));
        assert!(fails.is_empty(), "({},{}) {:?}", m, n, fails);
    }
    let r = RtGenerators::new(2, 0);
    assert_eq!(r.r[(0, 0)], qp(-1));
    let r = RtGenerators::new(1, 1);
    assert_eq!(r.r[(3, 3)], -&qp(1));
}

#[test]
fn circles_and_zigzags() {
    use Generator::*;
    for (m, n) in GRID {
        let expect = RationalQ::from_laurent(qint(m as i32 - n as i32));
        for (c, k) in [(CupCw, CapCw), (CupCcw, CapCcw)] {
            let d = SliceDiagram::closed(vec![Slice::new(0, c), Slice::new(0, k)]).unwrap();
            assert_eq!(eval_closed_rt(&d, m, n).unwrap(), expect);
        }
        for o in [Orientation::Up, Orientation::Down] {
            for right in [true, false] {
                let id = SliceDiagram::identity(BoundaryObject(vec![o]));
                let z = apply_move(&id, &MoveSpec::ZigzagInsert { slice: 0, position: 0, right }).unwrap();
                assert_eq!(eval_tangle_rt(&z, m, n).unwrap().scalar(), Some(RationalQ::one()));
            }
        }
    }
}

#[test]
fn closed_examples() {
    let u = closure("", 1);
    assert_eq!(eval_closed_rt(&u, 3, 0).unwrap(), q("q^2 + 1 + q^-2"));
    assert_eq!(eval_closed_rt(&u, 1, 1).unwrap(), RationalQ::zero());
    assert_eq!(eval_closed_rt(&closure("1 1 1", 2), 2, 0).unwrap(), q("-q^3 + q^-1 + q^-3 + q^-5"));
    let h = hopf();
    for m in 2..4 {
        assert_eq!(eval_closed_rt(&h, m, 0).unwrap(), skein::rt_sln(&h, m as i32).unwrap());
    }
}

#[test]
fn alexander_examples() {
    let u = closure("", 1);
    assert_eq!(alexander_rt(&u).unwrap(), RationalQ::one());
    assert_eq!(alexander_rt(&closure("1", 2)).unwrap(), RationalQ::one());
    for d in [closure("1 1 1", 2), closure("1 -2 1 -2", 3), hopf(), closure("1 1", 2)] {
        let sk = skein::reduced(&d, skein::Reduced::Alexander).unwrap();
        assert_eq!(linkinv::ring::GroundElem::from_rational(alexander_rt(&d).unwrap()), sk);
    }
}

#[test]
fn mixed_endomorphism_rank() {
    // End(↑↓) is spanned by the identity and cup∘cap
    use Generator::*;
    let obj = BoundaryObject(vec![Orientation::Up, Orientation::Down]);
    let id = eval_tangle_rt(&SliceDiagram::identity(obj.clone()), 2, 1).unwrap();
    let cc = eval_tangle_rt(&SliceDiagram::from_slices(obj, vec![Slice::new(0, CapCw), Slice::new(0, CupCw)]).unwrap(), 2, 1).unwrap();
    let x = num_rational::BigRational::new(2.into(), 3.into());
    let x = &x;
    let flat = |r: &RepMatrix| {
        let w: Vec<Vec<u8>> = (0..3u8).flat_map(|a| (0..3u8).map(move |b| vec![a, b])).collect();
        w.iter().flat_map(|a| w.iter().map(move |b| r.entry(a, b).eval(x).unwrap())).collect::<Vec<_>>()
    };
    assert_eq!(rank(&[flat(&id), flat(&cc)]), 2);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(20))]

    #[test]
    fn scalar_principle(seed in any::<u64>()) {
        let mut r = rng(seed);
        let d = braid_closure(&random_braid(&mut r, 3, 6));
        let v = skein::eval_closed(&d).unwrap();
        prop_assert_eq!(eval_closed_rt(&d, 2, 1).unwrap(), v.specialize_beta(1));
        prop_assert_eq!(eval_closed_rt(&d, 1, 0).unwrap(), v.specialize_beta(1));
        prop_assert_eq!(eval_closed_rt(&d, 2, 0).unwrap(), v.specialize_beta(2));
    }

    #[test]
    fn rt_reidemeister(seed in any::<u64>()) {
        let mut r = rng(seed);
        let d = braid_closure(&random_braid(&mut r, 3, 5));
        let mut e = d.clone();
        for _ in 0..3 {
            e = random_move(&mut r, &e);
        }
        prop_assert_eq!(eval_closed_rt(&e, 2, 0).unwrap(), eval_closed_rt(&d, 2, 0).unwrap());
        prop_assert_eq!(eval_closed_rt(&e, 1, 1).unwrap(), eval_closed_rt(&d, 1, 1).unwrap());
    }
}
