use crate::hecke::{antisymmetrizer, apply_to_word, Perm};
use crate::quantumrep::{Mat, RtGenerators};
use crate::ring::RationalQ;
use dashmap::DashMap;
use std::collections::HashMap;
use std::sync::{Arc, OnceLock};

/// The quantum exterior power ∧^a of V = ℚ(q)^m, realized as the image of
/// the antisymmetrizer on V^{⊗a}.
///
/// Basis vectors are strictly increasing index sequences (0-based). `ι` sends
/// `e_I` to `p·x_I` rescaled so its `x_I` coefficient is 1; `π` reads off
/// the `x_I` coefficients of `p·v`.
#[derive(Clone, Debug)]
pub struct WedgeSpace {
    m: usize,
    a: i32,
    basis: Vec<Vec<u8>>,
    index: HashMap<Vec<u8>, usize>,
    iota: Vec<Vec<(Vec<u8>, RationalQ)>>,
    pi: HashMap<Vec<u8>, (usize, RationalQ)>,
}

fn subsets(m: usize, a: usize) -> Vec<Vec<u8>> {
    fn go(start: u8, m: u8, left: usize, cur: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for k in start..m {
            cur.push(k);
            go(k + 1, m, left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, m as u8, a, &mut Vec::new(), &mut out);
    out
}

impl WedgeSpace {
    pub fn new(m: usize, a: i32) -> Self {
        assert!(m >= 1, "rank must be positive");
        let mut w = WedgeSpace { m, a, basis: Vec::new(), index: HashMap::new(), iota: Vec::new(), pi: HashMap::new() };
        if a < 0 || a as usize > m {
            return w;
        }
        let a = a as usize;
        w.basis = subsets(m, a);
        w.index = w.basis.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect();
        if a == 0 {
            w.iota = vec![vec![(Vec::new(), RationalQ::one())]];
            w.pi.insert(Vec::new(), (0, RationalQ::one()));
            return w;
        }
        let p = antisymmetrizer(a);
        let r = RtGenerators::new(m, 0).r;
        let perms = Perm::all(a);
        for (k, s) in w.basis.iter().enumerate() {
            let v = apply_to_word(&p, s, &r, m);
            let lead = v[s].inv().expect("antisymmetrizer is nonzero on distinct indices");
            let mut col: Vec<(Vec<u8>, RationalQ)> = v.into_iter().map(|(word, c)| (word, &c * &lead)).collect();
            col.sort_by(|x, y| x.0.cmp(&y.0));
            w.iota.push(col);
            for perm in &perms {
                let word: Vec<u8> = perm.one_line().iter().map(|&j| s[j as usize]).collect();
                let u = apply_to_word(&p, &word, &r, m);
                if let Some(c) = u.get(s) {
                    w.pi.insert(word, (k, c.clone()));
                }
            }
        }
        w
    }

    pub fn rank(&self) -> usize {
        self.m
    }

    pub fn degree(&self) -> i32 {
        self.a
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[Vec<u8>] {
        &self.basis
    }

    pub fn index_of(&self, s: &[u8]) -> Option<usize> {
        self.index.get(s).copied()
    }

    /// `ι(e_k)` as a sparse vector in V^{⊗a}.
    pub fn iota_col(&self, k: usize) -> &[(Vec<u8>, RationalQ)] {
        &self.iota[k]
    }

    /// `π(x_w)`: zero unless `w` permutes a basis sequence.
    pub fn pi_word(&self, w: &[u8]) -> Option<&(usize, RationalQ)> {
        self.pi.get(w)
    }

    fn ambient(&self) -> usize {
        if self.is_zero() {
            0
        } else {
            self.m.pow(self.a as u32)
        }
    }

    fn flat(&self, w: &[u8]) -> usize {
        w.iter().fold(0, |acc, &k| acc * self.m + k as usize)
    }

    pub fn iota_mat(&self) -> Mat {
        let mut out = Mat::zeros(self.ambient(), self.dim());
        for (k, col) in self.iota.iter().enumerate() {
            for (w, c) in col {
                out[(self.flat(w), k)] = c.clone();
            }
        }
        out
    }

    pub fn pi_mat(&self) -> Mat {
        let mut out = Mat::zeros(self.dim(), self.ambient());
        for (w, (k, c)) in &self.pi {
            out[(*k, self.flat(w))] = c.clone();
        }
        out
    }
}

/// Shared, lazily built wedge spaces.
pub fn wedge(m: usize, a: i32) -> Arc<WedgeSpace> {
    static CACHE: OnceLock<DashMap<(usize, i32), Arc<WedgeSpace>>> = OnceLock::new();
    let cache = CACHE.get_or_init(DashMap::new);
    if let Some(w) = cache.get(&(m, a)) {
        return w.clone();
    }
    cache.entry((m, a)).or_insert_with(|| Arc::new(WedgeSpace::new(m, a))).clone()
}

pub fn build_wedge(m: usize, a: i32) -> WedgeSpace {
    (*wedge(m, a)).clone()
}

/// `(π_a ⊗ π_b)∘ι_{a+b}`.
pub fn split(m: usize, a: i32, b: i32) -> Mat {
    let (wa, wb, wab) = (wedge(m, a), wedge(m, b), wedge(m, a + b));
    let mut out = Mat::zeros(wa.dim() * wb.dim(), wab.dim());
    if wa.is_zero() || wb.is_zero() {
        return out;
    }
    for k in 0..wab.dim() {
        for (w, c) in wab.iota_col(k) {
            let (w1, w2) = w.split_at(a as usize);
            if let (Some((i, x)), Some((j, y))) = (wa.pi_word(w1), wb.pi_word(w2)) {
                let e = &mut out[(i * wb.dim() + j, k)];
                *e = &*e + &(&(c * x) * y);
            }
        }
    }
    out
}

/// `π_{a+b}∘(ι_a ⊗ ι_b)`.
pub fn merge(m: usize, a: i32, b: i32) -> Mat {
    let (wa, wb, wab) = (wedge(m, a), wedge(m, b), wedge(m, a + b));
    let mut out = Mat::zeros(wab.dim(), wa.dim() * wb.dim());
    if wab.is_zero() {
        return out;
    }
    for i in 0..wa.dim() {
        for j in 0..wb.dim() {
            for (w1, x) in wa.iota_col(i) {
                for (w2, y) in wb.iota_col(j) {
                    let w = [w1.as_slice(), w2.as_slice()].concat();
                    if let Some((k, z)) = wab.pi_word(&w) {
                        let e = &mut out[(*k, i * wb.dim() + j)];
                        *e = &*e + &(&(x * y) * z);
                    }
                }
            }
        }
    }
    out
}
