use super::coeff::Coeff;
use super::laurent::LaurentQ;
use super::{poly, RingError};
use num_rational::BigRational;
use num_traits::Zero;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Rational function in `q` in canonical form: the denominator is monic with
/// lowest exponent 0 and shares no factor with the numerator.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalQ {
    num: LaurentQ,
    den: LaurentQ,
}

impl RationalQ {
    pub fn zero() -> Self {
        RationalQ { num: LaurentQ::zero(), den: LaurentQ::one() }
    }

    pub fn one() -> Self {
        Self::from_laurent(LaurentQ::one())
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_laurent(LaurentQ::from_int(n))
    }

    pub fn from_coeff(c: Coeff) -> Self {
        Self::from_laurent(LaurentQ::constant(c))
    }

    pub fn q_pow(e: i32) -> Self {
        Self::from_laurent(LaurentQ::q_pow(e))
    }

    pub fn from_laurent(num: LaurentQ) -> Self {
        RationalQ { num, den: LaurentQ::one() }
    }

    pub fn new(num: LaurentQ, den: LaurentQ) -> Result<Self, RingError> {
        if den.is_zero() {
            return Err(RingError::DivisionByZero);
        }
        Ok(Self::normalize(num, den))
    }

    fn normalize(num: LaurentQ, den: LaurentQ) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        if den.is_monomial() {
            let c = den.dense()[0].inv();
            return Self::from_laurent(num.scale(&c).shift(-den.low()));
        }
        let shift = num.low() - den.low();
        let mut n = num.dense().to_vec();
        let mut d = den.dense().to_vec();
        let g = poly::gcd(&n, &d);
        if g.len() > 1 {
            n = poly::divrem(&n, &g).0;
            d = poly::divrem(&d, &g).0;
        }
        let lead = d.last().unwrap().clone();
        if !lead.is_one() {
            let inv = lead.inv();
            n = n.iter().map(|x| x.mul(&inv)).collect();
            d = d.iter().map(|x| x.mul(&inv)).collect();
        }
        let num = LaurentQ::from_dense(shift, n);
        let den = LaurentQ::from_dense(0, d);
        if den.is_one() {
            return Self::from_laurent(num);
        }
        RationalQ { num, den }
    }

    pub fn num(&self) -> &LaurentQ {
        &self.num
    }

    pub fn den(&self) -> &LaurentQ {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when the value is a Laurent polynomial.
    pub fn is_laurent(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_laurent(&self) -> Option<&LaurentQ> {
        if self.den.is_one() {
            Some(&self.num)
        } else {
            None
        }
    }

    pub fn inv(&self) -> Result<Self, RingError> {
        if self.is_zero() {
            return Err(RingError::DivisionByZero);
        }
        Ok(Self::normalize(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, o: &Self) -> Result<Self, RingError> {
        Ok(self * &o.inv()?)
    }

    pub fn scale(&self, c: &Coeff) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RationalQ { num: self.num.scale(c), den: self.den.clone() }
    }

    pub fn shift(&self, k: i32) -> Self {
        RationalQ { num: self.num.shift(k), den: self.den.clone() }
    }

    pub fn pow(&self, k: i32) -> Result<Self, RingError> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let mut acc = Self::one();
        for _ in 0..k.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    /// Exact value at a rational point; `None` at a pole.
    pub fn eval(&self, x: &BigRational) -> Option<BigRational> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(x) / d)
    }

    /// Substitution `q ↦ q^k` for nonzero k.
    pub fn substitute_power(&self, k: i32) -> Self {
        Self::normalize(self.num.substitute_power(k), self.den.substitute_power(k))
    }
}

impl Add<&RationalQ> for &RationalQ {
    type Output = RationalQ;
    fn add(self, o: &RationalQ) -> RationalQ {
        if o.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return o.clone();
        }
        if self.den == o.den {
            if self.den.is_one() {
                return RationalQ::from_laurent(&self.num + &o.num);
            }
            return RationalQ::normalize(&self.num + &o.num, self.den.clone());
        }
        RationalQ::normalize(&(&self.num * &o.den) + &(&o.num * &self.den), &self.den * &o.den)
    }
}

impl Sub<&RationalQ> for &RationalQ {
    type Output = RationalQ;
    fn sub(self, o: &RationalQ) -> RationalQ {
        self + &(-o)
    }
}

impl Mul<&RationalQ> for &RationalQ {
    type Output = RationalQ;
    fn mul(self, o: &RationalQ) -> RationalQ {
        if self.is_zero() || o.is_zero() {
            return RationalQ::zero();
        }
        if self.den.is_one() && o.den.is_one() {
            return RationalQ::from_laurent(&self.num * &o.num);
        }
        RationalQ::normalize(&self.num * &o.num, &self.den * &o.den)
    }
}

impl Neg for &RationalQ {
    type Output = RationalQ;
    fn neg(self) -> RationalQ {
        RationalQ { num: -&self.num, den: self.den.clone() }
    }
}

macro_rules! owned_ops {
    ($t:ty) => {
        impl Add for $t {
            type Output = $t;
            fn add(self, o: $t) -> $t {
                &self + &o
            }
        }
        impl Sub for $t {
            type Output = $t;
            fn sub(self, o: $t) -> $t {
                &self - &o
            }
        }
        impl Mul for $t {
            type Output = $t;
            fn mul(self, o: $t) -> $t {
                &self * &o
            }
        }
        impl Neg for $t {
            type Output = $t;
            fn neg(self) -> $t {
                -&self
            }
        }
        impl Add<&$t> for $t {
            type Output = $t;
            fn add(self, o: &$t) -> $t {
                &self + o
            }
        }
        impl Sub<&$t> for $t {
            type Output = $t;
            fn sub(self, o: &$t) -> $t {
                &self - o
            }
        }
        impl Mul<&$t> for $t {
            type Output = $t;
            fn mul(self, o: &$t) -> $t {
                &self * o
            }
        }
    };
}
pub(crate) use owned_ops;

owned_ops!(RationalQ);

impl From<LaurentQ> for RationalQ {
    fn from(l: LaurentQ) -> Self {
        RationalQ::from_laurent(l)
    }
}

impl fmt::Display for RationalQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}
