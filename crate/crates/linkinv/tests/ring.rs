use linkinv::ring::*;
use proptest::prelude::*;

fn laurent(terms: &[(i32, i64)]) -> LaurentQ {
    LaurentQ::from_terms(terms.iter().map(|&(e, c)| (e, Coeff::from_int(c))))
}

fn arb_laurent() -> impl Strategy<Value = LaurentQ> {
    prop::collection::vec((-3i32..=3, -3i64..=3), 0..4).prop_map(|t| laurent(&t))
}

fn arb_den() -> impl Strategy<Value = LaurentQ> {
    prop_oneof![
        Just(LaurentQ::one()),
        Just(q_minus_qinv()),
        Just(&q_minus_qinv() * &qint(2)),
        (1i32..3).prop_map(|e| &LaurentQ::q_pow(e) + &LaurentQ::from_int(1)),
    ]
}

fn arb_rational() -> impl Strategy<Value = RationalQ> {
    (arb_laurent(), arb_den()).prop_map(|(n, d)| RationalQ::new(n, d).unwrap())
}

fn arb_ground() -> impl Strategy<Value = GroundElem> {
    prop::collection::vec((-2i32..=2, arb_rational()), 0..3).prop_map(GroundElem::from_terms)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn ring_laws(x in arb_ground(), y in arb_ground(), z in arb_ground()) {
        prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert_eq!(&x + &y, &y + &x);
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert!((&x + &(-&x)).is_zero());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn canonical_equality(x in arb_ground(), y in arb_ground()) {
        prop_assert_eq!(x == y, (&x - &y).terms().is_empty());
    }

    #[test]
    fn specialize_is_a_morphism(x in arb_ground(), y in arb_ground(), n in -3i32..=4) {
        prop_assert_eq!((&x * &y).specialize_beta(n), &x.specialize_beta(n) * &y.specialize_beta(n));
        prop_assert_eq!((&x + &y).specialize_beta(n), &x.specialize_beta(n) + &y.specialize_beta(n));
    }

    #[test]
    fn qint_is_odd(a in -6i32..=6, b in -3i32..=3) {
        let x = Exponent::new(a, b);
        prop_assert_eq!(quantum_int(x), -quantum_int(-x));
    }

    #[test]
    fn division_by_beta_inverts(x in arb_ground()) {
        let b = quantum_int(Exponent::beta());
        let e = &x * &b;
        let d = e.divide_by_qint_beta().unwrap();
        prop_assert_eq!(&d * &b, e);
        if let Ok(d2) = x.divide_by_qint_beta() {
            prop_assert_eq!(&d2 * &b, x);
        }
    }

    #[test]
    fn render_parse_roundtrip(x in arb_ground()) {
        let s = x.to_string();
        let back: GroundElem = s.parse().unwrap();
        prop_assert_eq!(back, x);
    }

    #[test]
    fn rational_inverse(x in arb_rational()) {
        if !x.is_zero() {
            prop_assert!((&x * &x.inv().unwrap()).is_one());
        }
    }
}

#[test]
fn quantum_int_examples() {
    assert_eq!(quantum_int(Exponent::int(2)).to_string(), "q + q^-1");
    assert!(quantum_int(Exponent::int(0)).is_zero());
    let b = quantum_int(Exponent::beta());
    let qmq = RationalQ::from_laurent(q_minus_qinv());
    assert_eq!(b.coeff(1), RationalQ::one().div(&qmq).unwrap());
    assert_eq!(b.coeff(-1), (-RationalQ::one()).div(&qmq).unwrap());
    assert_eq!(b.terms().len(), 2);
}

#[test]
fn quantum_factorial_examples() {
    assert!(quantum_factorial(0).is_one());
    assert_eq!(quantum_factorial(2).to_string(), "q + q^-1");
    // schoolbook expansion of (q + q^-1)(q^2 + 1 + q^-2)
    let expect = laurent(&[(3, 1), (1, 2), (-1, 2), (-3, 1)]);
    assert_eq!(quantum_factorial(3), GroundElem::from_laurent(expect));
}

#[test]
fn specialize_examples() {
    let b = quantum_int(Exponent::beta());
    assert_eq!(b.specialize_beta(2), RationalQ::from_laurent(qint(2)));
    assert!(b.specialize_beta(0).is_zero());
    assert_eq!(GroundElem::q_pow(Exponent::new(2, 2)).specialize_beta(3), RationalQ::q_pow(8));
    assert_eq!(b.specialize_beta(-2), RationalQ::from_laurent(-qint(2)));
}

#[test]
fn divide_examples() {
    let b = quantum_int(Exponent::beta());
    assert!(b.divide_by_qint_beta().unwrap().is_one());
    assert_eq!((&b * &b).divide_by_qint_beta().unwrap(), b);
    let p = GroundElem::from_laurent(laurent(&[(-4, 1), (0, 1), (2, -1)]));
    assert_eq!((&b * &p).divide_by_qint_beta().unwrap(), p);
    assert_eq!(GroundElem::from_int(3).divide_by_qint_beta(), Err(RingError::NotDivisible));
}

#[test]
fn field_examples() {
    let x = RationalQ::from_laurent(q_minus_qinv());
    assert!((&x * &x.inv().unwrap()).is_one());
    assert_eq!(RationalQ::zero().inv(), Err(RingError::DivisionByZero));
    assert_eq!(GroundElem::zero().try_inv(), Err(RingError::DivisionByZero));
    let two = quantum_int(Exponent::int(2));
    let r = &(&(&two * &two) - &quantum_int(Exponent::int(1))) - &quantum_int(Exponent::int(3));
    assert!(r.is_zero());
}
