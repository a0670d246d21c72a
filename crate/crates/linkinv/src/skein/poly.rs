use crate::ring::{quantum_int, Exponent, GroundElem, LaurentQ, RationalQ};
use std::collections::BTreeMap;

/// Σ c(q)·δ^i·u^k with δ = [β], u = q^β. Skein evaluation stays inside
/// this subring until the very end.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub(crate) struct SkeinPoly(BTreeMap<(u32, i32), LaurentQ>);

impl SkeinPoly {
    pub fn zero() -> Self {
        SkeinPoly(BTreeMap::new())
    }

    pub fn monomial(delta: u32, u: i32) -> Self {
        let mut m = BTreeMap::new();
        m.insert((delta, u), LaurentQ::one());
        SkeinPoly(m)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn add_term(&mut self, k: (u32, i32), c: &LaurentQ) {
        if c.is_zero() {
            return;
        }
        match self.0.get_mut(&k) {
            Some(v) => {
                let s = &*v + c;
                if s.is_zero() {
                    self.0.remove(&k);
                } else {
                    *v = s;
                }
            }
            None => {
                self.0.insert(k, c.clone());
            }
        }
    }

    pub fn add_assign(&mut self, o: &Self) {
        for (k, c) in &o.0 {
            self.add_term(*k, c);
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut out = SkeinPoly::zero();
        for (&(d1, u1), c1) in &self.0 {
            for (&(d2, u2), c2) in &o.0 {
                out.add_term((d1 + d2, u1 + u2), &(c1 * c2));
            }
        }
        out
    }

    pub fn scale(&self, l: &LaurentQ) -> Self {
        let mut out = SkeinPoly::zero();
        for (k, c) in &self.0 {
            out.add_term(*k, &(c * l));
        }
        out
    }

    pub fn to_ground(&self) -> GroundElem {
        let delta = quantum_int(Exponent::beta());
        let mut powers = vec![GroundElem::one()];
        let mut acc = GroundElem::zero();
        for (&(d, u), c) in &self.0 {
            while powers.len() <= d as usize {
                let next = powers.last().unwrap() * &delta;
                powers.push(next);
            }
            let t = powers[d as usize].shift_u(u).scale(&RationalQ::from_laurent(c.clone()));
            acc = &acc + &t;
        }
        acc
    }
}
