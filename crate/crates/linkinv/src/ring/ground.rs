use super::coeff::Coeff;
use super::laurent::{q_mono, write_terms, LaurentQ};
use super::rational::{owned_ops, RationalQ};
use super::RingError;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// `a + bβ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Exponent {
    pub a: i32,
    pub b: i32,
}

impl Exponent {
    pub fn new(a: i32, b: i32) -> Self {
        Exponent { a, b }
    }

    pub fn int(a: i32) -> Self {
        Exponent { a, b: 0 }
    }

    pub fn beta() -> Self {
        Exponent { a: 0, b: 1 }
    }
}

impl Neg for Exponent {
    type Output = Exponent;
    fn neg(self) -> Exponent {
        Exponent { a: -self.a, b: -self.b }
    }
}

/// Laurent polynomial in `u = q^β` with coefficients in ℚ(q).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct GroundElem {
    terms: BTreeMap<i32, RationalQ>,
}

impl GroundElem {
    pub fn zero() -> Self {
        GroundElem { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::from_rational(RationalQ::one())
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(RationalQ::from_int(n))
    }

    pub fn from_rational(r: RationalQ) -> Self {
        Self::u_term(0, r)
    }

    pub fn from_laurent(l: LaurentQ) -> Self {
        Self::from_rational(RationalQ::from_laurent(l))
    }

    /// `r · u^k`.
    pub fn u_term(k: i32, r: RationalQ) -> Self {
        let mut terms = BTreeMap::new();
        if !r.is_zero() {
            terms.insert(k, r);
        }
        GroundElem { terms }
    }

    /// `q^{a + bβ}`.
    pub fn q_pow(x: Exponent) -> Self {
        Self::u_term(x.b, RationalQ::q_pow(x.a))
    }

    pub fn from_terms<I: IntoIterator<Item = (i32, RationalQ)>>(it: I) -> Self {
        let mut g = Self::zero();
        for (k, r) in it {
            g.add_term(k, &r);
        }
        g
    }

    fn add_term(&mut self, k: i32, r: &RationalQ) {
        if r.is_zero() {
            return;
        }
        match self.terms.get_mut(&k) {
            Some(v) => {
                let s = &*v + r;
                if s.is_zero() {
                    self.terms.remove(&k);
                } else {
                    *v = s;
                }
            }
            None => {
                self.terms.insert(k, r.clone());
            }
        }
    }

    pub fn terms(&self) -> &BTreeMap<i32, RationalQ> {
        &self.terms
    }

    pub fn coeff(&self, k: i32) -> RationalQ {
        self.terms.get(&k).cloned().unwrap_or_else(RationalQ::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|r| r.is_one())
    }

    /// The u-free part when there is no other.
    pub fn as_rational(&self) -> Option<RationalQ> {
        match self.terms.len() {
            0 => Some(RationalQ::zero()),
            1 => self.terms.get(&0).cloned(),
            _ => None,
        }
    }

    pub fn scale(&self, r: &RationalQ) -> Self {
        if r.is_zero() {
            return Self::zero();
        }
        GroundElem { terms: self.terms.iter().map(|(k, v)| (*k, v * r)).collect() }
    }

    /// Multiplication by `u^k`.
    pub fn shift_u(&self, k: i32) -> Self {
        GroundElem { terms: self.terms.iter().map(|(e, v)| (e + k, v.clone())).collect() }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Inverse of a unit `r·u^k`.
    pub fn try_inv(&self) -> Result<Self, RingError> {
        match self.terms.len() {
            0 => Err(RingError::DivisionByZero),
            1 => {
                let (k, r) = self.terms.iter().next().unwrap();
                Ok(Self::u_term(-k, r.inv()?))
            }
            _ => Err(RingError::NotInvertible),
        }
    }

    pub fn try_div(&self, o: &Self) -> Result<Self, RingError> {
        Ok(self * &o.try_inv()?)
    }

    /// Substitutes `u ↦ q^n`.
    pub fn specialize_beta(&self, n: i32) -> RationalQ {
        let mut acc = RationalQ::zero();
        // group numerators over common denominators first
        let mut by_den: Vec<(LaurentQ, LaurentQ)> = Vec::new();
        for (k, r) in &self.terms {
            let shifted = r.num().shift(k * n);
            match by_den.iter_mut().find(|(d, _)| d == r.den()) {
                Some((_, s)) => *s = &*s + &shifted,
                None => by_den.push((r.den().clone(), shifted)),
            }
        }
        for (d, s) in by_den {
            acc = &acc + &RationalQ::new(s, d).expect("nonzero denominator");
        }
        acc
    }

    /// Exact division by `[β] = (u - u^-1)/(q - q^-1)`.
    pub fn divide_by_qint_beta(&self) -> Result<Self, RingError> {
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let lo = *self.terms.keys().next().unwrap();
        let hi = *self.terms.keys().next_back().unwrap();
        let deg = (hi - lo) as usize;
        if deg < 2 {
            return Err(RingError::NotDivisible);
        }
        // u·e = u^{lo+1} · f(u), f_j = coeff of u^{lo+j}; divide f by u^2 - 1
        let mut f: Vec<RationalQ> = (0..=deg).map(|j| self.coeff(lo + j as i32)).collect();
        let mut g = vec![RationalQ::zero(); deg - 1];
        for j in (2..=deg).rev() {
            let t = f[j].clone();
            if t.is_zero() {
                continue;
            }
            f[j - 2] = &f[j - 2] + &t;
            g[j - 2] = t;
        }
        if !f[0].is_zero() || !f[1].is_zero() {
            return Err(RingError::NotDivisible);
        }
        let qmq = RationalQ::from_laurent(&LaurentQ::q_pow(1) - &LaurentQ::q_pow(-1));
        Ok(Self::from_terms(g.into_iter().enumerate().map(|(j, r)| (lo + 1 + j as i32, &r * &qmq))))
    }

    /// True when every u-coefficient is a Laurent polynomial in q.
    pub fn is_laurent(&self) -> bool {
        self.terms.values().all(|r| r.is_laurent())
    }
}

/// `[x] = (q^x - q^-x)/(q - q^-1)`.
pub fn quantum_int(x: Exponent) -> GroundElem {
    if x.b == 0 {
        return GroundElem::from_laurent(qint(x.a));
    }
    let qmq = &LaurentQ::q_pow(1) - &LaurentQ::q_pow(-1);
    let plus = RationalQ::new(LaurentQ::q_pow(x.a), qmq.clone()).unwrap();
    let minus = RationalQ::new(-LaurentQ::q_pow(-x.a), qmq).unwrap();
    GroundElem::from_terms([(x.b, plus), (-x.b, minus)])
}

/// `[n]` as a Laurent polynomial: q^{n-1} + q^{n-3} + … + q^{1-n}, odd in n.
pub fn qint(n: i32) -> LaurentQ {
    let sign = if n < 0 { -1 } else { 1 };
    let k = n.abs();
    LaurentQ::from_terms((0..k).map(|j| (k - 1 - 2 * j, Coeff::from_int(sign))))
}

/// `[n]! = [1][2]…[n]`.
pub fn quantum_factorial(n: u32) -> GroundElem {
    GroundElem::from_laurent(qfact(n))
}

pub fn qfact(n: u32) -> LaurentQ {
    (1..=n as i32).fold(LaurentQ::one(), |acc, k| &acc * &qint(k))
}

impl Add<&GroundElem> for &GroundElem {
    type Output = GroundElem;
    fn add(self, o: &GroundElem) -> GroundElem {
        let mut r = self.clone();
        for (k, v) in &o.terms {
            r.add_term(*k, v);
        }
        r
    }
}

impl Sub<&GroundElem> for &GroundElem {
    type Output = GroundElem;
    fn sub(self, o: &GroundElem) -> GroundElem {
        self + &(-o)
    }
}

impl Mul<&GroundElem> for &GroundElem {
    type Output = GroundElem;
    fn mul(self, o: &GroundElem) -> GroundElem {
        let mut r = GroundElem::zero();
        for (a, x) in &self.terms {
            for (b, y) in &o.terms {
                r.add_term(a + b, &(x * y));
            }
        }
        r
    }
}

impl Neg for &GroundElem {
    type Output = GroundElem;
    fn neg(self) -> GroundElem {
        GroundElem { terms: self.terms.iter().map(|(k, v)| (*k, -v)).collect() }
    }
}

owned_ops!(GroundElem);

impl From<RationalQ> for GroundElem {
    fn from(r: RationalQ) -> Self {
        GroundElem::from_rational(r)
    }
}

impl From<LaurentQ> for GroundElem {
    fn from(l: LaurentQ) -> Self {
        GroundElem::from_laurent(l)
    }
}

fn u_mono(k: i32) -> String {
    match k {
        0 => String::new(),
        1 => "u".to_string(),
        _ => format!("u^{}", k),
    }
}

impl fmt::Display for GroundElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(r) = self.as_rational() {
            return write!(f, "{}", r);
        }
        if self.is_laurent() {
            let mut terms = Vec::new();
            for (k, r) in self.terms.iter().rev() {
                for (e, c) in r.num().terms().rev() {
                    let mono = match (u_mono(*k), q_mono(e)) {
                        (u, q) if q.is_empty() => u,
                        (u, q) if u.is_empty() => q,
                        (u, q) => format!("{}*{}", u, q),
                    };
                    terms.push((c.clone(), mono));
                }
            }
            return write_terms(f, &terms);
        }
        for (i, (k, r)) in self.terms.iter().rev().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            let u = u_mono(*k);
            if u.is_empty() {
                write!(f, "({})", r)?;
            } else {
                write!(f, "{}*({})", u, r)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn qint_values() {
        assert_eq!(qint(2).to_string(), "q + q^-1");
        assert!(qint(0).is_zero());
        assert_eq!(qint(-3), -qint(3));
        assert_eq!(qint(3).to_string(), "q^2 + 1 + q^-2");
    }

    #[test]
    fn beta_int_render() {
        let b = quantum_int(Exponent::beta());
        assert_eq!(b.to_string(), "u*((q)/(q^2 - 1)) + u^-1*((-q)/(q^2 - 1))");
        assert_eq!(b.specialize_beta(2).to_string(), "q + q^-1");
        assert!(b.specialize_beta(0).is_zero());
    }

    #[test]
    fn expanded_render() {
        let g = &GroundElem::q_pow(Exponent::new(2, 2)) - &GroundElem::q_pow(Exponent::new(0, -1));
        assert_eq!(g.to_string(), "u^2*q^2 - u^-1");
        assert_eq!(GroundElem::q_pow(Exponent::new(2, 2)).specialize_beta(3).to_string(), "q^8");
    }

    #[test]
    fn divide_by_beta() {
        let b = quantum_int(Exponent::beta());
        assert!(b.divide_by_qint_beta().unwrap().is_one());
        assert_eq!((&b * &b).divide_by_qint_beta().unwrap(), b);
        assert_eq!(GroundElem::one().divide_by_qint_beta(), Err(RingError::NotDivisible));
        let u = GroundElem::q_pow(Exponent::new(0, 1));
        assert_eq!(u.divide_by_qint_beta(), Err(RingError::NotDivisible));
    }
}
