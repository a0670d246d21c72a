use linkinv::diagram::*;
use proptest::prelude::*;

const HOPF: &str = "source: -\nslice 0 cup+\nslice 2 cup-\nslice 1 x+\nslice 1 x+\nslice 2 cap-\nslice 0 cap+\ntarget: -\n";

fn cycles_oracle(n: usize, letters: &[i32]) -> usize {
    // compose transpositions as a permutation of labels
    let mut perm: Vec<usize> = (0..n).collect();
    for &k in letters {
        let i = k.unsigned_abs() as usize - 1;
        perm.swap(i, i + 1);
    }
    let mut seen = vec![false; n];
    let mut c = 0;
    for s in 0..n {
        let mut x = s;
        if seen[x] {
            continue;
        }
        c += 1;
        while !seen[x] {
            seen[x] = true;
            x = perm[x];
        }
    }
    c
}

fn braid_strategy() -> impl Strategy<Value = BraidWord> {
    (1usize..5).prop_flat_map(|n| {
        let letter = if n == 1 {
            Just(0i32).boxed()
        } else {
            (1..n as i32, any::<bool>()).prop_map(|(k, s)| if s { k } else { -k }).boxed()
        };
        let len = if n == 1 { 0..1usize } else { 0..9usize };
        proptest::collection::vec(letter, len).prop_map(move |l| BraidWord::new(n, l).unwrap())
    })
}

#[test]
fn braid_examples() {
    let b = parse_braid("1 1 1", 2).unwrap();
    assert_eq!(b.letters, vec![1, 1, 1]);
    assert_eq!(parse_braid("-1", 2).unwrap().letters, vec![-1]);
    assert!(matches!(parse_braid("3", 2), Err(DiagramError::IndexOutOfRange { .. })));
    assert!(matches!(parse_braid("0", 2), Err(DiagramError::IndexOutOfRange { .. }) | Err(DiagramError::BraidParse { .. })));
    assert!(matches!(parse_braid("1 x", 2), Err(DiagramError::BraidParse { pos: 1, .. })));

    let s = braid_closure(&parse_braid("1", 2).unwrap()).validate().unwrap();
    assert_eq!((s.components, s.crossings), (1, 1));
    let s = braid_closure(&b).validate().unwrap();
    assert_eq!((s.components, s.crossings, s.writhe), (1, 3, 3));
    let u = braid_closure(&parse_braid("", 1).unwrap());
    assert_eq!(u.slices.len(), 2);
    assert_eq!(u.validate().unwrap().components, 1);
}

#[test]
fn hopf_slicing_roundtrip() {
    let d = deserialize(HOPF).unwrap();
    assert_eq!(serialize(&d), HOPF);
    let s = d.validate().unwrap();
    assert_eq!((s.components, s.writhe, s.crossings), (2, 2, 2));
}

#[test]
fn cut_open_examples() {
    let u = braid_closure(&parse_braid("", 1).unwrap());
    let c = cut_open(&u, 0).unwrap();
    assert_eq!(c.source, BoundaryObject::ups(1));
    assert_eq!(c.target, BoundaryObject::ups(1));
    assert_eq!(c.validate().unwrap().writhe, 0);
    let t = cut_open(&braid_closure(&parse_braid("1 1 1", 2).unwrap()), 0).unwrap();
    assert_eq!(t.validate().unwrap().components, 1);
    assert!(matches!(cut_open(&u, 1), Err(DiagramError::ComponentNotFound(1))));
    assert!(matches!(cut_open(&c, 0), Err(DiagramError::NotClosed)));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn closure_validates_with_cycle_components(b in braid_strategy()) {
        let d = braid_closure(&b);
        let s = d.validate().unwrap();
        prop_assert_eq!(s.components, cycles_oracle(b.strands, &b.letters));
        prop_assert_eq!(s.crossings, b.letters.len());
        prop_assert_eq!(s.writhe, b.letters.iter().map(|k| k.signum()).sum::<i32>());
    }

    #[test]
    fn serialize_roundtrip(b in braid_strategy()) {
        let d = braid_closure(&b);
        let text = serialize(&d);
        let e = deserialize(&text).unwrap();
        prop_assert_eq!(serialize(&e), text);
        prop_assert_eq!(e, d);
    }

    #[test]
    fn moves_preserve_stats(b in braid_strategy(), pick in any::<prop::sample::Index>(), steps in 1usize..4) {
        let mut d = braid_closure(&b);
        let s0 = d.validate().unwrap();
        for i in 0..steps {
            let ms = applicable_moves(&d);
            let m = ms[(pick.index(ms.len()) + i * 7) % ms.len()];
            d = apply_move(&d, &m).unwrap();
            let s = d.validate().unwrap();
            prop_assert_eq!(s.components, s0.components);
            prop_assert_eq!(s.writhe, s0.writhe);
        }
    }

    #[test]
    fn upright_and_cut_keep_stats(b in braid_strategy(), pick in any::<prop::sample::Index>()) {
        let mut d = braid_closure(&b);
        let ms = applicable_moves(&d);
        d = apply_move(&d, &ms[pick.index(ms.len())]).unwrap();
        let s = d.validate().unwrap();
        let u = upright(&d).unwrap();
        prop_assert_eq!(u.validate().unwrap(), DiagramStats { crossings: u.crossing_count(), ..s });
        let c = cut_open(&d, 0).unwrap();
        let cs = c.validate().unwrap();
        prop_assert_eq!(cs.components, s.components);
        prop_assert_eq!(cs.writhe, s.writhe);
        let m = mirror(&d).validate().unwrap();
        prop_assert_eq!(m.writhe, -s.writhe);
    }
}

#[test]
fn curl_pair_has_net_zero_writhe() {
    for o in [Orientation::Up, Orientation::Down] {
        let mut sl = curl(o, 0, 1);
        let a = SliceDiagram::from_slices(BoundaryObject(vec![o]), sl.clone()).unwrap();
        assert_eq!(a.writhe().unwrap(), 1);
        sl.extend(curl(o, 0, -1));
        let b = SliceDiagram::from_slices(BoundaryObject(vec![o]), sl).unwrap();
        assert_eq!(b.writhe().unwrap(), 0);
        assert_eq!(b.crossing_count(), 2);
    }
}
