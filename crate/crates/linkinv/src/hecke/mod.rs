//! The Hecke algebra H_N in the permutation basis.
//!
//! Normal form: `T_i·T_w = T_{s_i w}` when `ℓ(s_i w) > ℓ(w)`, otherwise
//! `T_{s_i w} + (q^-1 - q)·T_w`. Here `s_i w` swaps the values `i, i+1` in
//! the one-line notation of `w`.

use crate::diagram::BraidWord;
use crate::quantumrep::{rank_sparse, Mat, RtGenerators};
use crate::ring::{qfact, skein_z, LaurentQ, RationalQ};
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::collections::{BTreeMap, HashMap};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HeckeError {
    #[error("strand counts differ: {0} and {1}")]
    StrandMismatch(usize, usize),
    #[error("coefficient has a pole at q = 1")]
    PoleAtOne,
}

/// A permutation in one-line notation on `0..N`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    one_line: Vec<u8>,
    length: u32,
}

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm { one_line: (0..n as u8).collect(), length: 0 }
    }

    pub fn from_one_line(v: Vec<u8>) -> Self {
        let length = inversions(&v);
        Perm { one_line: v, length }
    }

    pub fn one_line(&self) -> &[u8] {
        &self.one_line
    }

    pub fn len(&self) -> u32 {
        self.length
    }

    pub fn size(&self) -> usize {
        self.one_line.len()
    }

    /// Whether `ℓ(s_i w) > ℓ(w)`, i.e. `i` appears before `i+1`; `i` from 1.
    pub fn left_ascent(&self, i: usize) -> bool {
        let a = self.one_line.iter().position(|&v| v as usize == i - 1).unwrap();
        let b = self.one_line.iter().position(|&v| v as usize == i).unwrap();
        a < b
    }

    /// `s_i w`.
    pub fn left_mul(&self, i: usize) -> Perm {
        let up = self.left_ascent(i);
        let one_line = self
            .one_line
            .iter()
            .map(|&v| match v as usize {
                x if x == i - 1 => i as u8,
                x if x == i => (i - 1) as u8,
                _ => v,
            })
            .collect();
        Perm { one_line, length: if up { self.length + 1 } else { self.length - 1 } }
    }

    /// A reduced word `i_1 … i_k` with `w = s_{i_1}⋯s_{i_k}`.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = self.clone();
        let mut out = Vec::new();
        while w.length > 0 {
            let i = (1..w.size()).find(|&i| !w.left_ascent(i)).unwrap();
            out.push(i);
            w = w.left_mul(i);
        }
        out
    }

    /// All of S_N, by length then lexicographically.
    pub fn all(n: usize) -> Vec<Perm> {
        let mut out = vec![Vec::new()];
        for k in 0..n as u8 {
            let mut next = Vec::new();
            for p in &out {
                for pos in 0..=p.len() {
                    let mut q: Vec<u8> = p.clone();
                    q.insert(pos, k);
                    next.push(q);
                }
            }
            out = next;
        }
        let mut ps: Vec<Perm> = out.into_iter().map(Perm::from_one_line).collect();
        ps.sort_by(|a, b| (a.length, &a.one_line).cmp(&(b.length, &b.one_line)));
        ps
    }
}

fn inversions(v: &[u8]) -> u32 {
    let mut c = 0;
    for i in 0..v.len() {
        for j in i + 1..v.len() {
            if v[i] > v[j] {
                c += 1;
            }
        }
    }
    c
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeckeElem {
    n: usize,
    terms: BTreeMap<Perm, RationalQ>,
}

impl HeckeElem {
    pub fn zero(n: usize) -> Self {
        HeckeElem { n, terms: BTreeMap::new() }
    }

    pub fn one(n: usize) -> Self {
        Self::basis(Perm::identity(n))
    }

    pub fn basis(w: Perm) -> Self {
        let n = w.size();
        let mut terms = BTreeMap::new();
        terms.insert(w, RationalQ::one());
        HeckeElem { n, terms }
    }

    /// `T_i`, i from 1.
    pub fn t(n: usize, i: usize) -> Self {
        Self::basis(Perm::identity(n).left_mul(i))
    }

    pub fn strands(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<Perm, RationalQ> {
        &self.terms
    }

    pub fn coeff(&self, w: &Perm) -> RationalQ {
        self.terms.get(w).cloned().unwrap_or_else(RationalQ::zero)
    }

    fn add_term(&mut self, w: Perm, c: &RationalQ) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(w.clone()).or_insert_with(RationalQ::zero);
        *e = &*e + c;
        if e.is_zero() {
            self.terms.remove(&w);
        }
    }

    pub fn add(&self, o: &Self) -> Result<Self, HeckeError> {
        if self.n != o.n {
            return Err(HeckeError::StrandMismatch(self.n, o.n));
        }
        let mut out = self.clone();
        for (w, c) in &o.terms {
            out.add_term(w.clone(), c);
        }
        Ok(out)
    }

    pub fn scale(&self, c: &RationalQ) -> Self {
        let mut out = Self::zero(self.n);
        for (w, v) in &self.terms {
            out.add_term(w.clone(), &(v * c));
        }
        out
    }

    /// `T_i · self`.
    pub fn left_t(&self, i: usize) -> Self {
        let z = RationalQ::from_laurent(skein_z());
        let mut out = Self::zero(self.n);
        for (w, c) in &self.terms {
            let up = w.left_ascent(i);
            out.add_term(w.left_mul(i), c);
            if !up {
                out.add_term(w.clone(), &(c * &z));
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

/// Product in H_N.
pub fn hecke_mul(a: &HeckeElem, b: &HeckeElem) -> Result<HeckeElem, HeckeError> {
    if a.n != b.n {
        return Err(HeckeError::StrandMismatch(a.n, b.n));
    }
    let mut out = HeckeElem::zero(a.n);
    for (w, c) in &a.terms {
        let mut x = b.clone();
        for &i in w.reduced_word().iter().rev() {
            x = x.left_t(i);
        }
        out = out.add(&x.scale(c))?;
    }
    Ok(out)
}

/// `σ_i ↦ T_i`, `σ_i^-1 ↦ T_i + (q - q^-1)`.
pub fn braid_to_hecke(b: &BraidWord) -> HeckeElem {
    let n = b.strands;
    let shift = RationalQ::from_laurent(-skein_z());
    let mut acc = HeckeElem::one(n);
    for &k in b.letters.iter().rev() {
        let i = k.unsigned_abs() as usize;
        let t = acc.left_t(i);
        acc = if k > 0 { t } else { t.add(&acc.scale(&shift)).unwrap() };
    }
    acc
}

/// `p = (1/[l]!) Σ_w (-1)^{ℓ(w)} q^{ℓ(w) - l(l-1)/2} T_w`, an idempotent
/// with `T_i·p = -q·p`.
pub fn antisymmetrizer(l: usize) -> HeckeElem {
    let top = (l * l.saturating_sub(1) / 2) as i32;
    let norm = RationalQ::from_laurent(qfact(l as u32)).inv().unwrap();
    let mut out = HeckeElem::zero(l);
    for w in Perm::all(l) {
        let len = w.len() as i32;
        let sign = if len % 2 == 0 { 1 } else { -1 };
        let c = RationalQ::from_laurent(LaurentQ::q_pow(len - top).scale(&crate::ring::Coeff::from_int(sign)));
        out.add_term(w, &(&c * &norm));
    }
    out
}

/// An element of ℚ[S_N].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupElem(pub BTreeMap<Vec<u8>, BigRational>);

impl fmt::Display for GroupElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|(w, c)| format!("{}*{:?}", c, w)).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Substitutes q = 1, landing in the group algebra.
pub fn symmetric_group_specialize(h: &HeckeElem) -> Result<GroupElem, HeckeError> {
    let one = BigRational::one();
    let mut out = BTreeMap::new();
    for (w, c) in &h.terms {
        let v = c.eval(&one).ok_or(HeckeError::PoleAtOne)?;
        if !v.is_zero() {
            out.insert(w.one_line.clone(), v);
        }
    }
    Ok(GroupElem(out))
}

/// Product in ℚ[S_N] with `(uv)(k) = u(v(k))`.
pub fn group_mul(a: &GroupElem, b: &GroupElem) -> GroupElem {
    let mut out: BTreeMap<Vec<u8>, BigRational> = BTreeMap::new();
    for (u, x) in &a.0 {
        for (v, y) in &b.0 {
            let w: Vec<u8> = v.iter().map(|&k| u[k as usize]).collect();
            let e = out.entry(w.clone()).or_insert_with(BigRational::zero);
            *e += x * y;
            if e.is_zero() {
                out.remove(&w);
            }
        }
    }
    GroupElem(out)
}

pub(crate) type Vector = HashMap<Vec<u8>, RationalQ>;

fn apply_r(v: &Vector, i: usize, r: &Mat, m: usize) -> Vector {
    let mut out = Vector::new();
    for (w, c) in v {
        let col = w[i - 1] as usize * m + w[i] as usize;
        for row in 0..m * m {
            let e = &r[(row, col)];
            if e.is_zero() {
                continue;
            }
            let mut nw = w.clone();
            nw[i - 1] = (row / m) as u8;
            nw[i] = (row % m) as u8;
            let t = out.entry(nw).or_insert_with(RationalQ::zero);
            *t = &*t + &(c * e);
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

fn words(m: usize, n: usize) -> Vec<Vec<u8>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out.into_iter().flat_map(|w| (0..m as u8).map(move |k| [w.clone(), vec![k]].concat())).collect();
    }
    out
}

fn index(w: &[u8], m: usize) -> usize {
    w.iter().fold(0, |acc, &k| acc * m + k as usize)
}

/// `h·x_w` on V^{⊗N} for a single basis word `w`.
pub(crate) fn apply_to_word(h: &HeckeElem, w: &[u8], r: &Mat, m: usize) -> Vector {
    let mut acc = Vector::new();
    for (perm, c) in &h.terms {
        let mut v = Vector::new();
        v.insert(w.to_vec(), c.clone());
        for &i in perm.reduced_word().iter().rev() {
            v = apply_r(&v, i, r, m);
        }
        for (k, x) in v {
            let t = acc.entry(k).or_insert_with(RationalQ::zero);
            *t = &*t + &x;
        }
    }
    acc.retain(|_, c| !c.is_zero());
    acc
}

/// Columns of the image of `h` on V^{⊗N}, V = ℚ(q)^m, as sparse vectors.
fn image_columns(h: &HeckeElem, m: usize) -> Vec<Vector> {
    let g = RtGenerators::new(m, 0);
    words(m, h.n).into_iter().map(|w| apply_to_word(h, &w, &g.r, m)).collect()
}

/// Image on V^{⊗N} for V = ℚ(q)^m: `T_i` acts by R on factors i, i+1.
pub fn schur_weyl_rep(h: &HeckeElem, m: usize) -> Mat {
    let dim = m.pow(h.n as u32);
    let mut out = Mat::zeros(dim, dim);
    for (col, v) in image_columns(h, m).into_iter().enumerate() {
        for (w, c) in v {
            out[(index(&w, m), col)] = c;
        }
    }
    out
}

/// Dimension of the span of the images of all `T_w`, evaluated at `q = x`.
pub fn schur_weyl_rank(n: usize, m: usize, x: &BigRational) -> usize {
    let dim = m.pow(n as u32);
    let vs = Perm::all(n)
        .into_iter()
        .map(|w| {
            let mut flat = BTreeMap::new();
            for (col, v) in image_columns(&HeckeElem::basis(w), m).into_iter().enumerate() {
                for (word, c) in v {
                    flat.insert(index(&word, m) * dim + col, c.eval(x).expect("no poles"));
                }
            }
            flat
        })
        .collect();
    rank_sparse(vs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduced_words_rebuild() {
        for w in Perm::all(4) {
            let mut x = Perm::identity(4);
            for &i in w.reduced_word().iter().rev() {
                x = x.left_mul(i);
            }
            assert_eq!(x, w);
            assert_eq!(w.reduced_word().len() as u32, w.len());
        }
        assert_eq!(Perm::all(4).len(), 24);
    }
}
