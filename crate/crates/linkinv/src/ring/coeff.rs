use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{CheckedAdd, CheckedDiv, CheckedMul, CheckedSub, One, Signed, ToPrimitive, Zero};
use std::cmp::Ordering;
use std::fmt;

/// Exact rational number. Small values stay on machine words and are
/// promoted to arbitrary precision only when an operation would overflow.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Coeff {
    Small(Ratio<i64>),
    Big(BigRational),
}

impl Coeff {
    pub fn zero() -> Self {
        Coeff::Small(Ratio::from_integer(0))
    }

    pub fn one() -> Self {
        Coeff::Small(Ratio::from_integer(1))
    }

    pub fn from_int(n: i64) -> Self {
        Coeff::Small(Ratio::from_integer(n))
    }

    /// `num/den`; panics on a zero denominator.
    pub fn frac(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        norm_big(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn from_big(r: BigRational) -> Self {
        norm_big(r)
    }

    pub fn to_big(&self) -> BigRational {
        match self {
            Coeff::Small(r) => BigRational::new_raw(BigInt::from(*r.numer()), BigInt::from(*r.denom())),
            Coeff::Big(r) => r.clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Coeff::Small(r) => r.is_zero(),
            Coeff::Big(r) => r.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Coeff::Small(r) => r.is_one(),
            Coeff::Big(r) => r.is_one(),
        }
    }

    pub fn is_negative(&self) -> bool {
        match self {
            Coeff::Small(r) => r.is_negative(),
            Coeff::Big(r) => r.is_negative(),
        }
    }

    pub fn is_integer(&self) -> bool {
        match self {
            Coeff::Small(r) => r.is_integer(),
            Coeff::Big(r) => r.is_integer(),
        }
    }

    pub fn abs(&self) -> Self {
        if self.is_negative() {
            self.neg()
        } else {
            self.clone()
        }
    }

    pub fn neg(&self) -> Self {
        match self {
            Coeff::Small(r) => match r.numer().checked_neg() {
                Some(n) => Coeff::Small(Ratio::new_raw(n, *r.denom())),
                None => norm_big(-self.to_big()),
            },
            Coeff::Big(r) => norm_big(-r),
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        if let (Coeff::Small(a), Coeff::Small(b)) = (self, o) {
            if let Some(c) = a.checked_add(b) {
                return Coeff::Small(c);
            }
        }
        norm_big(self.to_big() + o.to_big())
    }

    pub fn sub(&self, o: &Self) -> Self {
        if let (Coeff::Small(a), Coeff::Small(b)) = (self, o) {
            if let Some(c) = a.checked_sub(b) {
                return Coeff::Small(c);
            }
        }
        norm_big(self.to_big() - o.to_big())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if let (Coeff::Small(a), Coeff::Small(b)) = (self, o) {
            if a.is_integer() && b.is_integer() {
                if let Some(c) = a.numer().checked_mul(b.numer()) {
                    return Coeff::from_int(c);
                }
            } else if let Some(c) = a.checked_mul(b) {
                return Coeff::Small(c);
            }
        }
        norm_big(self.to_big() * o.to_big())
    }

    /// Division; panics on zero divisor (callers check).
    pub fn div(&self, o: &Self) -> Self {
        assert!(!o.is_zero(), "division by zero coefficient");
        if let (Coeff::Small(a), Coeff::Small(b)) = (self, o) {
            if let Some(c) = a.checked_div(b) {
                return Coeff::Small(c);
            }
        }
        norm_big(self.to_big() / o.to_big())
    }

    pub fn inv(&self) -> Self {
        Coeff::one().div(self)
    }

    pub fn cmp_value(&self, o: &Self) -> Ordering {
        match (self, o) {
            (Coeff::Small(a), Coeff::Small(b)) => a.cmp(b),
            _ => self.to_big().cmp(&o.to_big()),
        }
    }

    /// Integer numerator and denominator as big integers.
    pub fn parts(&self) -> (BigInt, BigInt) {
        let b = self.to_big();
        (b.numer().clone(), b.denom().clone())
    }
}

fn norm_big(r: BigRational) -> Coeff {
    match (r.numer().to_i64(), r.denom().to_i64()) {
        (Some(n), Some(d)) if n != i64::MIN && d != i64::MIN => Coeff::Small(Ratio::new_raw(n, d)),
        _ => Coeff::Big(r),
    }
}

impl fmt::Display for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coeff::Small(r) => write!(f, "{}", r),
            Coeff::Big(r) => write!(f, "{}", r),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn overflow_promotes() {
        let big = Coeff::from_int(i64::MAX);
        let s = big.add(&Coeff::one());
        assert!(matches!(s, Coeff::Big(_)));
        let back = s.sub(&Coeff::one());
        assert_eq!(back, Coeff::from_int(i64::MAX));
        assert!(matches!(back, Coeff::Small(_)));
    }

    #[test]
    fn fractions_reduce() {
        assert_eq!(Coeff::frac(2, 4), Coeff::frac(1, 2));
        assert_eq!(Coeff::frac(1, 2).mul(&Coeff::from_int(2)), Coeff::one());
        assert_eq!(Coeff::frac(-3, -6), Coeff::frac(1, 2));
        assert_eq!(Coeff::frac(1, 3).div(&Coeff::frac(1, 6)), Coeff::from_int(2));
    }

    #[test]
    fn neg_min_is_exact() {
        let m = Coeff::from_int(i64::MIN + 1).sub(&Coeff::one());
        let n = m.neg();
        assert_eq!(n.add(&m), Coeff::zero());
    }
}
