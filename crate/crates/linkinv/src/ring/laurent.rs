use super::coeff::Coeff;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Laurent polynomial in `q` with exact rational coefficients.
///
/// Stored densely from the lowest exponent; the first and last stored
/// coefficients are nonzero, and zero is the empty vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LaurentQ {
    low: i32,
    c: Vec<Coeff>,
}

impl LaurentQ {
    pub fn zero() -> Self {
        LaurentQ { low: 0, c: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Coeff::one())
    }

    pub fn constant(c: Coeff) -> Self {
        Self::monomial(c, 0)
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(Coeff::from_int(n))
    }

    pub fn monomial(c: Coeff, e: i32) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentQ { low: e, c: vec![c] }
    }

    /// `q^e`.
    pub fn q_pow(e: i32) -> Self {
        Self::monomial(Coeff::one(), e)
    }

    pub fn from_terms<I: IntoIterator<Item = (i32, Coeff)>>(terms: I) -> Self {
        let terms: Vec<(i32, Coeff)> = terms.into_iter().collect();
        if terms.is_empty() {
            return Self::zero();
        }
        let lo = terms.iter().map(|t| t.0).min().unwrap();
        let hi = terms.iter().map(|t| t.0).max().unwrap();
        let mut c = vec![Coeff::zero(); (hi - lo + 1) as usize];
        for (e, v) in terms {
            let slot = &mut c[(e - lo) as usize];
            *slot = slot.add(&v);
        }
        Self::trimmed(lo, c)
    }

    /// Builds from a dense coefficient vector starting at exponent `low`.
    pub fn from_dense(low: i32, c: Vec<Coeff>) -> Self {
        Self::trimmed(low, c)
    }

    fn trimmed(mut low: i32, mut c: Vec<Coeff>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        let lead = c.iter().take_while(|x| x.is_zero()).count();
        if lead == c.len() {
            return Self::zero();
        }
        if lead > 0 {
            c.drain(..lead);
            low += lead as i32;
        }
        LaurentQ { low, c }
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.low == 0 && self.c.len() == 1 && self.c[0].is_one()
    }

    /// Lowest exponent with nonzero coefficient (0 for the zero polynomial).
    pub fn low(&self) -> i32 {
        self.low
    }

    /// Highest exponent with nonzero coefficient (0 for the zero polynomial).
    pub fn high(&self) -> i32 {
        if self.c.is_empty() {
            0
        } else {
            self.low + self.c.len() as i32 - 1
        }
    }

    pub fn dense(&self) -> &[Coeff] {
        &self.c
    }

    pub fn coeff(&self, e: i32) -> Coeff {
        let i = e - self.low;
        if i < 0 || i as usize >= self.c.len() {
            Coeff::zero()
        } else {
            self.c[i as usize].clone()
        }
    }

    pub fn leading(&self) -> Coeff {
        self.c.last().cloned().unwrap_or_else(Coeff::zero)
    }

    /// Nonzero terms in increasing exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i32, &Coeff)> + '_ {
        let low = self.low;
        self.c
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(move |(i, v)| (low + i as i32, v))
    }

    pub fn term_count(&self) -> usize {
        self.c.iter().filter(|v| !v.is_zero()).count()
    }

    pub fn is_monomial(&self) -> bool {
        self.c.len() == 1
    }

    pub fn is_constant(&self) -> bool {
        self.is_zero() || (self.low == 0 && self.c.len() == 1)
    }

    /// Multiplication by `q^k`.
    pub fn shift(&self, k: i32) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        LaurentQ { low: self.low + k, c: self.c.clone() }
    }

    pub fn scale(&self, s: &Coeff) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        LaurentQ { low: self.low, c: self.c.iter().map(|x| x.mul(s)).collect() }
    }

    /// Substitution `q ↦ q^k` (k ≠ 0).
    pub fn substitute_power(&self, k: i32) -> Self {
        assert!(k != 0);
        Self::from_terms(self.terms().map(|(e, v)| (e * k, v.clone())))
    }

    /// Exact evaluation at a nonzero rational point.
    pub fn eval(&self, x: &BigRational) -> BigRational {
        if self.is_zero() {
            return BigRational::zero();
        }
        let mut acc = BigRational::zero();
        for v in self.c.iter().rev() {
            acc = acc * x + v.to_big();
        }
        let p = if self.low >= 0 { pow(x, self.low as u32) } else { BigRational::one() / pow(x, (-self.low) as u32) };
        acc * p
    }

    fn combine(&self, o: &Self, neg: bool) -> Self {
        if o.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return if neg { -o } else { o.clone() };
        }
        let lo = self.low.min(o.low);
        let hi = self.high().max(o.high());
        let mut c = vec![Coeff::zero(); (hi - lo + 1) as usize];
        for (i, v) in self.c.iter().enumerate() {
            c[(self.low - lo) as usize + i] = v.clone();
        }
        for (i, v) in o.c.iter().enumerate() {
            let slot = &mut c[(o.low - lo) as usize + i];
            *slot = if neg { slot.sub(v) } else { slot.add(v) };
        }
        Self::trimmed(lo, c)
    }

    fn product(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        if o.c.len() == 1 {
            let mut r = self.scale(&o.c[0]);
            r.low += o.low;
            return r;
        }
        if self.c.len() == 1 {
            let mut r = o.scale(&self.c[0]);
            r.low += self.low;
            return r;
        }
        let mut c = vec![Coeff::zero(); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                c[i + j] = c[i + j].add(&a.mul(b));
            }
        }
        Self::trimmed(self.low + o.low, c)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Exact quotient when `self` is divisible by `d` as Laurent polynomials.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        assert!(!d.is_zero());
        if self.is_zero() {
            return Some(Self::zero());
        }
        let (q, r) = super::poly::divrem(&self.c, &d.c);
        if r.iter().any(|x| !x.is_zero()) {
            return None;
        }
        Some(Self::trimmed(self.low - d.low, q))
    }
}

fn pow(x: &BigRational, k: u32) -> BigRational {
    let mut acc = BigRational::one();
    for _ in 0..k {
        acc *= x;
    }
    acc
}

macro_rules! binop {
    ($tr:ident, $m:ident, $body:expr) => {
        impl $tr<&LaurentQ> for &LaurentQ {
            type Output = LaurentQ;
            fn $m(self, o: &LaurentQ) -> LaurentQ {
                let f: fn(&LaurentQ, &LaurentQ) -> LaurentQ = $body;
                f(self, o)
            }
        }
        impl $tr<LaurentQ> for LaurentQ {
            type Output = LaurentQ;
            fn $m(self, o: LaurentQ) -> LaurentQ {
                (&self).$m(&o)
            }
        }
        impl $tr<&LaurentQ> for LaurentQ {
            type Output = LaurentQ;
            fn $m(self, o: &LaurentQ) -> LaurentQ {
                (&self).$m(o)
            }
        }
    };
}

binop!(Add, add, |a, b| a.combine(b, false));
binop!(Sub, sub, |a, b| a.combine(b, true));
binop!(Mul, mul, |a, b| a.product(b));

impl Neg for &LaurentQ {
    type Output = LaurentQ;
    fn neg(self) -> LaurentQ {
        LaurentQ { low: self.low, c: self.c.iter().map(|x| x.neg()).collect() }
    }
}

impl Neg for LaurentQ {
    type Output = LaurentQ;
    fn neg(self) -> LaurentQ {
        -&self
    }
}

/// Renders a monomial `q^e` (empty string for e = 0).
pub(crate) fn q_mono(e: i32) -> String {
    match e {
        0 => String::new(),
        1 => "q".to_string(),
        _ => format!("q^{}", e),
    }
}

/// Writes `sign`-aware terms: `(coefficient, monomial)` pairs in display order.
pub(crate) fn write_terms(f: &mut fmt::Formatter<'_>, terms: &[(Coeff, String)]) -> fmt::Result {
    if terms.is_empty() {
        return write!(f, "0");
    }
    for (k, (c, mono)) in terms.iter().enumerate() {
        let neg = c.is_negative();
        if k == 0 {
            if neg {
                write!(f, "-")?;
            }
        } else {
            write!(f, "{}", if neg { " - " } else { " + " })?;
        }
        let a = c.abs();
        if mono.is_empty() {
            write!(f, "{}", a)?;
        } else if a.is_one() {
            write!(f, "{}", mono)?;
        } else {
            write!(f, "{}*{}", a, mono)?;
        }
    }
    Ok(())
}

impl fmt::Display for LaurentQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<(Coeff, String)> = self.terms().rev().map(|(e, c)| (c.clone(), q_mono(e))).collect();
        write_terms(f, &terms)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l(t: &[(i32, i64)]) -> LaurentQ {
        LaurentQ::from_terms(t.iter().map(|&(e, c)| (e, Coeff::from_int(c))))
    }

    #[test]
    fn render_matches_canonical_style() {
        let p = l(&[(3, -1), (-1, 1), (-3, 1), (-5, 1)]);
        assert_eq!(p.to_string(), "-q^3 + q^-1 + q^-3 + q^-5");
        assert_eq!(l(&[(1, 2), (0, -3)]).to_string(), "2*q - 3");
        assert_eq!(LaurentQ::zero().to_string(), "0");
    }

    #[test]
    fn cancellation_trims() {
        let a = l(&[(2, 1), (-1, 4)]);
        let b = l(&[(2, 1), (0, 1)]);
        let d = &a - &b;
        assert_eq!(d, l(&[(-1, 4), (0, -1)]));
        assert!((&a - &a).is_zero());
    }

    #[test]
    fn product_and_exact_division() {
        let a = l(&[(1, 1), (-1, -1)]);
        let b = l(&[(2, 1), (0, 1), (-2, 1)]);
        let p = &a * &b;
        assert_eq!(p, l(&[(3, 1), (-3, -1)]));
        assert_eq!(p.div_exact(&a).unwrap(), b);
        assert!(b.div_exact(&a).is_none());
    }
}
