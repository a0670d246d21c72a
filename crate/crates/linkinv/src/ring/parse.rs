//! Parser for the canonical rendering.
//!
//! ```text
//! expr  := term (('+' | '-') term)*
//! term  := unary (('*' | '/') unary)*
//! unary := '-' unary | power
//! power := atom ('^' ['-'] int)?
//! atom  := int | 'q' | 'u' | '(' expr ')'
//! ```
//! `u` stands for `q^β`. Division is allowed by units only.

use super::coeff::Coeff;
use super::ground::GroundElem;
use super::laurent::LaurentQ;
use super::rational::RationalQ;
use super::RingError;
use num_bigint::BigInt;
use num_rational::BigRational;
use std::str::FromStr;

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

fn err(pos: usize, msg: &str) -> RingError {
    RingError::Parse { pos, msg: msg.to_string() }
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn int(&mut self) -> Result<BigInt, RingError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(err(start, "expected integer"));
        }
        let txt = std::str::from_utf8(&self.s[start..self.pos]).unwrap();
        Ok(BigInt::from_str(txt).unwrap())
    }

    fn expr(&mut self) -> Result<GroundElem, RingError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<GroundElem, RingError> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = &acc * &self.unary()?;
                }
                Some(b'/') => {
                    self.pos += 1;
                    let at = self.pos;
                    let d = self.unary()?;
                    acc = acc.try_div(&d).map_err(|e| err(at, &e.to_string()))?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<GroundElem, RingError> {
        if self.peek() == Some(b'-') {
            self.pos += 1;
            return Ok(-self.unary()?);
        }
        self.power()
    }

    fn power(&mut self) -> Result<GroundElem, RingError> {
        let base = self.atom()?;
        if self.peek() != Some(b'^') {
            return Ok(base);
        }
        self.pos += 1;
        let neg = if self.peek() == Some(b'-') {
            self.pos += 1;
            true
        } else {
            false
        };
        let at = self.pos;
        let k: i32 = self.int()?.try_into().map_err(|_| err(at, "exponent too large"))?;
        let b = if neg { base.try_inv().map_err(|e| err(at, &e.to_string()))? } else { base };
        Ok(b.pow(k as u32))
    }

    fn atom(&mut self) -> Result<GroundElem, RingError> {
        match self.peek() {
            Some(b'q') => {
                self.pos += 1;
                Ok(GroundElem::from_laurent(LaurentQ::q_pow(1)))
            }
            Some(b'u') => {
                self.pos += 1;
                Ok(GroundElem::u_term(1, RationalQ::one()))
            }
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(err(self.pos, "expected ')'"));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.int()?;
                Ok(GroundElem::from_rational(RationalQ::from_coeff(Coeff::from_big(BigRational::from_integer(n)))))
            }
            Some(_) => Err(err(self.pos, "unexpected character")),
            None => Err(err(self.pos, "unexpected end of input")),
        }
    }
}

pub fn parse_ground(text: &str) -> Result<GroundElem, RingError> {
    let mut p = Parser { s: text.as_bytes(), pos: 0 };
    let e = p.expr()?;
    if p.peek().is_some() {
        return Err(err(p.pos, "trailing input"));
    }
    Ok(e)
}

impl FromStr for GroundElem {
    type Err = RingError;
    fn from_str(s: &str) -> Result<Self, RingError> {
        parse_ground(s)
    }
}

impl FromStr for RationalQ {
    type Err = RingError;
    fn from_str(s: &str) -> Result<Self, RingError> {
        parse_ground(s)?.as_rational().ok_or_else(|| err(0, "unexpected u term"))
    }
}

impl FromStr for LaurentQ {
    type Err = RingError;
    fn from_str(s: &str) -> Result<Self, RingError> {
        let r: RationalQ = s.parse()?;
        r.as_laurent().cloned().ok_or_else(|| err(0, "not a Laurent polynomial"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{quantum_int, Exponent};

    #[test]
    fn roundtrips() {
        for s in ["-q^3 + q^-1 + q^-3 + q^-5", "0", "1/2*q - 3", "u^2*q^2 - u^-1"] {
            let g: GroundElem = s.parse().unwrap();
            assert_eq!(g.to_string(), s);
        }
        let b = quantum_int(Exponent::beta());
        assert_eq!(b.to_string().parse::<GroundElem>().unwrap(), b);
    }

    #[test]
    fn errors_have_positions() {
        match "q + * 2".parse::<GroundElem>() {
            Err(RingError::Parse { pos, .. }) => assert_eq!(pos, 4),
            other => panic!("{:?}", other),
        }
        assert!("1/(q - q)".parse::<GroundElem>().is_err());
        assert!("u".parse::<RationalQ>().is_err());
    }
}
