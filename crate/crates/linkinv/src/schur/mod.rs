//! The idempotented q-Schur algebra acting on tensor products of quantum
//! exterior powers, and ladder evaluation of tangles.

mod ladder;
mod wedge;

pub use ladder::{eval_closed_schur, eval_tangle_schur, tangle_to_ladder};
pub use wedge::{build_wedge, merge, split, wedge, WedgeSpace};

use crate::diagram::DiagramError;
use crate::quantumrep::{Mat, RtGenerators};
use crate::ring::{qfact, qint, RationalQ};
use dashmap::DashMap;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, OnceLock};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SchurError {
    #[error("no normalization satisfies the relations for m = {m} at weight ({a}, {b})")]
    InconsistentNormalization { m: usize, a: i32, b: i32 },
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error("malformed diagram: {0}")]
    MalformedDiagram(String),
    #[error("crossing needs weight (1, 1), found ({0}, {1})")]
    CrossingWeight(i32, i32),
    #[error("letter index {index} outside a weight with {parts} parts")]
    IndexOutOfRange { index: usize, parts: usize },
    #[error("rank must be positive")]
    ZeroRank,
    #[error("terms end in different weights")]
    WeightMismatch,
}

/// A weight `1_[a_1,…,a_l]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SchurWeight(pub Vec<i32>);

impl SchurWeight {
    pub fn new(parts: Vec<i32>) -> Self {
        SchurWeight(parts)
    }

    pub fn parts(&self) -> &[i32] {
        &self.0
    }

    pub fn l(&self) -> usize {
        self.0.len()
    }

    pub fn n(&self) -> i32 {
        self.0.iter().sum()
    }

    pub fn admissible(&self, m: usize) -> bool {
        self.0.iter().all(|&a| a >= 0 && a as usize <= m)
    }

    /// Dimension of ∧^{a_1} ⊗ … ⊗ ∧^{a_l}.
    pub fn dim(&self, m: usize) -> usize {
        self.0.iter().map(|&a| wedge(m, a).dim()).product()
    }
}

impl fmt::Display for SchurWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p: Vec<String> = self.0.iter().map(|a| a.to_string()).collect();
        write!(f, "1_[{}]", p.join(","))
    }
}

/// Ladder letters. Indices are 1-based: `E(i)` moves a box from column
/// i+1 to column i.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Letter {
    E(usize),
    F(usize),
    /// Divided power `E_i^k / [k]!`.
    EDiv(usize, u32),
    FDiv(usize, u32),
    Scalar(RationalQ),
    /// `q^{∓1}·1 − F_i E_i` on a (1, 1) pair.
    Crossing(usize, i32),
}

impl Letter {
    pub fn index(&self) -> Option<usize> {
        match *self {
            Letter::E(i) | Letter::F(i) | Letter::EDiv(i, _) | Letter::FDiv(i, _) | Letter::Crossing(i, _) => Some(i),
            Letter::Scalar(_) => None,
        }
    }

    fn boxes(&self) -> i32 {
        match *self {
            Letter::E(_) => 1,
            Letter::F(_) => -1,
            Letter::EDiv(_, k) => k as i32,
            Letter::FDiv(_, k) => -(k as i32),
            _ => 0,
        }
    }

    pub(crate) fn with_index(&self, i: usize) -> Letter {
        match self {
            Letter::E(_) => Letter::E(i),
            Letter::F(_) => Letter::F(i),
            Letter::EDiv(_, k) => Letter::EDiv(i, *k),
            Letter::FDiv(_, k) => Letter::FDiv(i, *k),
            Letter::Crossing(_, s) => Letter::Crossing(i, *s),
            Letter::Scalar(c) => Letter::Scalar(c.clone()),
        }
    }

    /// Weight after the letter acts on `w`.
    pub fn shift(&self, w: &SchurWeight) -> Result<SchurWeight, SchurError> {
        let mut v = w.0.clone();
        if let Some(i) = self.index() {
            if i == 0 || i >= v.len() {
                return Err(SchurError::IndexOutOfRange { index: i, parts: v.len() });
            }
            let k = self.boxes();
            v[i - 1] += k;
            v[i] -= k;
        }
        Ok(SchurWeight(v))
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Letter::E(i) => write!(f, "E{}", i),
            Letter::F(i) => write!(f, "F{}", i),
            Letter::EDiv(i, k) => write!(f, "E{}^({})", i, k),
            Letter::FDiv(i, k) => write!(f, "F{}^({})", i, k),
            Letter::Scalar(c) => write!(f, "({})", c),
            Letter::Crossing(i, s) => write!(f, "({} - F{}E{})", if *s > 0 { "q^-1" } else { "q" }, i, i),
        }
    }
}

/// A composite of letters applied to `start`, first letter first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LadderWord {
    pub start: SchurWeight,
    pub letters: Vec<Letter>,
}

impl LadderWord {
    pub fn new(start: SchurWeight, letters: Vec<Letter>) -> Self {
        LadderWord { start, letters }
    }

    pub fn weights(&self) -> Result<Vec<SchurWeight>, SchurError> {
        let mut out = vec![self.start.clone()];
        for l in &self.letters {
            let next = l.shift(out.last().unwrap())?;
            out.push(next);
        }
        Ok(out)
    }

    pub fn end(&self) -> Result<SchurWeight, SchurError> {
        Ok(self.weights()?.pop().unwrap())
    }
}

/// Written in algebra order: the last letter applied comes first.
impl fmt::Display for LadderWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        let mut i = self.letters.len();
        while i > 0 {
            let l = &self.letters[i - 1];
            let mut j = i - 1;
            while j > 0 && &self.letters[j - 1] == l {
                j -= 1;
            }
            let run = i - j;
            parts.push(if run > 1 { format!("{}^{}", l, run) } else { l.to_string() });
            i = j;
        }
        parts.push(self.start.to_string());
        write!(f, "{}", parts.join(" "))
    }
}

/// A linear map between weight spaces, indexed by flat mixed-radix basis
/// positions (last column fastest).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchurMap {
    pub m: usize,
    pub source: SchurWeight,
    pub target: SchurWeight,
    pub rows: usize,
    pub cols: usize,
    pub entries: BTreeMap<(usize, usize), RationalQ>,
}

impl SchurMap {
    pub fn zero(source: SchurWeight, target: SchurWeight, m: usize) -> Self {
        let (rows, cols) = (target.dim(m), source.dim(m));
        SchurMap { m, source, target, rows, cols, entries: BTreeMap::new() }
    }

    pub fn identity(w: SchurWeight, m: usize) -> Self {
        let mut out = Self::zero(w.clone(), w, m);
        for k in 0..out.rows {
            out.entries.insert((k, k), RationalQ::one());
        }
        out
    }

    pub fn entry(&self, r: usize, c: usize) -> RationalQ {
        self.entries.get(&(r, c)).cloned().unwrap_or_else(RationalQ::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// `Some(c)` when the map is `c` times the identification of source
    /// and target that ignores columns of degree 0 or m.
    pub fn scalar(&self) -> Option<RationalQ> {
        let core = |w: &SchurWeight| -> Vec<i32> { w.0.iter().copied().filter(|&a| a != 0 && a != self.m as i32).collect() };
        if self.rows != self.cols || core(&self.source) != core(&self.target) {
            return None;
        }
        let c = self.entry(0, 0);
        let ok = self.entries.iter().all(|(&(r, k), v)| r == k && *v == c);
        let diag = c.is_zero() || self.entries.len() == self.rows;
        (ok && diag).then_some(c)
    }

    pub fn to_mat(&self) -> Mat {
        let mut out = Mat::zeros(self.rows, self.cols);
        for (&(r, c), v) in &self.entries {
            out[(r, c)] = v.clone();
        }
        out
    }

    pub fn add(&self, o: &SchurMap) -> Result<SchurMap, SchurError> {
        if self.source != o.source || self.target != o.target {
            return Err(SchurError::WeightMismatch);
        }
        let mut out = self.clone();
        for (k, v) in &o.entries {
            let e = out.entries.entry(*k).or_insert_with(RationalQ::zero);
            *e = &*e + v;
            if e.is_zero() {
                out.entries.remove(k);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &RationalQ) -> SchurMap {
        let mut out = self.clone();
        out.entries = if c.is_zero() {
            BTreeMap::new()
        } else {
            self.entries.iter().map(|(k, v)| (*k, v * c)).collect()
        };
        out
    }
}

/// A local operator on two adjacent columns, stored by sparse columns.
#[derive(Debug)]
pub(crate) struct LocalOp {
    pub(crate) mat: Mat,
    pub(crate) out_right: usize,
    pub(crate) in_right: usize,
    pub(crate) cols: Vec<Vec<(usize, RationalQ)>>,
}

impl LocalOp {
    fn new(mat: Mat, out_right: usize, in_right: usize) -> Self {
        let cols = (0..mat.cols())
            .map(|c| (0..mat.rows()).filter(|&r| !mat[(r, c)].is_zero()).map(|r| (r, mat[(r, c)].clone())).collect())
            .collect();
        LocalOp { mat, out_right, in_right, cols }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
enum LocalKey {
    E(i32, i32, u32),
    F(i32, i32, u32),
    Crossing(i32),
}

/// Generator matrices of the Schur quotient for a fixed rank m, with the
/// normalizations solved from the defining relations.
#[derive(Debug)]
pub struct SchurAlgebra {
    m: usize,
    mu: HashMap<(i32, i32), RationalQ>,
    local: DashMap<LocalKey, Option<Arc<LocalOp>>>,
}

fn qi(n: i32) -> RationalQ {
    RationalQ::from_laurent(qint(n))
}

fn proportional(a: &Mat, b: &Mat) -> Option<RationalQ> {
    let mut c: Option<RationalQ> = None;
    for r in 0..a.rows() {
        for k in 0..a.cols() {
            let (x, y) = (&a[(r, k)], &b[(r, k)]);
            if y.is_zero() {
                if !x.is_zero() {
                    return None;
                }
                continue;
            }
            let ratio = x.div(y).ok()?;
            match &c {
                None => c = Some(ratio),
                Some(c0) if *c0 != ratio => return None,
                _ => {}
            }
        }
    }
    c
}

impl SchurAlgebra {
    pub fn new(m: usize) -> Result<Self, SchurError> {
        if m == 0 {
            return Err(SchurError::ZeroRank);
        }
        let mut alg = SchurAlgebra { m, mu: HashMap::new(), local: DashMap::new() };
        alg.solve()?;
        alg.check_anchor()?;
        Ok(alg)
    }

    pub fn rank(&self) -> usize {
        self.m
    }

    fn dim(&self, a: i32) -> usize {
        wedge(self.m, a).dim()
    }

    fn in_range(&self, a: i32) -> bool {
        a >= 0 && a as usize <= self.m
    }

    /// Unnormalized `(merge_{a,1} ⊗ 1)∘(1 ⊗ split_{1,b−1})`.
    pub fn raw_e(&self, a: i32, b: i32) -> Option<Mat> {
        if !(self.in_range(a) && self.in_range(b) && self.in_range(a + 1) && self.in_range(b - 1)) {
            return None;
        }
        let m = self.m;
        let down = Mat::identity(self.dim(a)).kron(&split(m, 1, b - 1));
        let up = merge(m, a, 1).kron(&Mat::identity(self.dim(b - 1)));
        Some(up.mul(&down))
    }

    /// Unnormalized `(1 ⊗ merge_{1,b})∘(split_{a−1,1} ⊗ 1)`.
    pub fn raw_f(&self, a: i32, b: i32) -> Option<Mat> {
        if !(self.in_range(a) && self.in_range(b) && self.in_range(a - 1) && self.in_range(b + 1)) {
            return None;
        }
        let m = self.m;
        let down = split(m, a - 1, 1).kron(&Mat::identity(self.dim(b)));
        let up = Mat::identity(self.dim(a - 1)).kron(&merge(m, 1, b));
        Some(up.mul(&down))
    }

    /// Solves `μ(a,b) = λ_E(a,b)·λ_F(a+1,b−1)` weight by weight from
    /// `EF − FE = [a−b]` on `1_[a,b]`.
    fn solve(&mut self) -> Result<(), SchurError> {
        let m = self.m as i32;
        for s in 0..=2 * m {
            for a in 0..=m {
                let b = s - a;
                if !(0..=m).contains(&b) {
                    continue;
                }
                let bad = SchurError::InconsistentNormalization { m: self.m, a, b };
                let d = self.dim(a) * self.dim(b);
                let mut lhs = Mat::identity(d).scale(&qi(a - b));
                if let Some(f) = self.raw_f(a, b) {
                    let ef = self.raw_e(a - 1, b + 1).expect("E inverts F").mul(&f);
                    lhs = lhs.sub(&ef.scale(&self.mu[&(a - 1, b + 1)]));
                }
                match self.raw_e(a, b) {
                    Some(e) => {
                        let fe = self.raw_f(a + 1, b - 1).expect("F inverts E").mul(&e);
                        let c = proportional(&lhs, &fe.scale(&-&RationalQ::one())).ok_or(bad)?;
                        self.mu.insert((a, b), c);
                    }
                    None if !lhs.is_zero() => return Err(bad),
                    None => {}
                }
            }
        }
        Ok(())
    }

    fn check_anchor(&self) -> Result<(), SchurError> {
        let r = RtGenerators::new(self.m, 0).r;
        let x = self.crossing_mat(1).ok_or(SchurError::InconsistentNormalization { m: self.m, a: 1, b: 1 })?;
        if x != r {
            return Err(SchurError::InconsistentNormalization { m: self.m, a: 1, b: 1 });
        }
        Ok(())
    }

    /// The solved product `λ_E(a,b)·λ_F(a+1,b−1)`.
    pub fn mu(&self, a: i32, b: i32) -> Option<RationalQ> {
        self.mu.get(&(a, b)).cloned()
    }

    pub fn lambda_e(&self, a: i32, _b: i32) -> RationalQ {
        qi(a + 1)
    }

    pub fn lambda_f(&self, a: i32, b: i32) -> Option<RationalQ> {
        Some(self.mu(a - 1, b + 1)?.div(&qi(a)).expect("[a] is nonzero"))
    }

    fn e_mat(&self, a: i32, b: i32) -> Option<Mat> {
        Some(self.raw_e(a, b)?.scale(&self.lambda_e(a, b)))
    }

    fn f_mat(&self, a: i32, b: i32) -> Option<Mat> {
        Some(self.raw_f(a, b)?.scale(&self.lambda_f(a, b)?))
    }

    fn crossing_mat(&self, sign: i32) -> Option<Mat> {
        if !self.in_range(1) {
            return None;
        }
        let id = Mat::identity(self.dim(1) * self.dim(1)).scale(&RationalQ::q_pow(-sign));
        Some(match (self.e_mat(1, 1), self.f_mat(2, 0)) {
            (Some(e), Some(f)) => id.sub(&f.mul(&e)),
            _ => id,
        })
    }

    fn power(&self, mut a: i32, mut b: i32, k: u32, raise: bool) -> Option<Mat> {
        let mut acc = Mat::identity(self.dim(a) * self.dim(b));
        for _ in 0..k {
            let step = if raise { self.e_mat(a, b)? } else { self.f_mat(a, b)? };
            acc = step.mul(&acc);
            if raise {
                a += 1;
                b -= 1;
            } else {
                a -= 1;
                b += 1;
            }
        }
        let norm = RationalQ::from_laurent(qfact(k)).inv().expect("[k]! is nonzero");
        Some(acc.scale(&norm))
    }

    fn build(&self, key: LocalKey) -> Option<LocalOp> {
        let (mat, in_b, out_b) = match key {
            LocalKey::E(a, b, k) => (self.power(a, b, k, true)?, b, b - k as i32),
            LocalKey::F(a, b, k) => (self.power(a, b, k, false)?, b, b + k as i32),
            LocalKey::Crossing(s) => (self.crossing_mat(s)?, 1, 1),
        };
        Some(LocalOp::new(mat, self.dim(out_b), self.dim(in_b)))
    }

    /// The local operator of a letter on columns of degrees (a, b); `None`
    /// for the zero map.
    pub(crate) fn local(&self, l: &Letter, a: i32, b: i32) -> Result<Option<Arc<LocalOp>>, SchurError> {
        if !(self.in_range(a) && self.in_range(b)) {
            return Ok(None);
        }
        let key = match *l {
            Letter::E(_) => LocalKey::E(a, b, 1),
            Letter::F(_) => LocalKey::F(a, b, 1),
            Letter::EDiv(_, k) => LocalKey::E(a, b, k),
            Letter::FDiv(_, k) => LocalKey::F(a, b, k),
            Letter::Crossing(_, s) => {
                if (a, b) != (1, 1) {
                    return Err(SchurError::CrossingWeight(a, b));
                }
                LocalKey::Crossing(s.signum())
            }
            Letter::Scalar(_) => unreachable!("scalars act globally"),
        };
        if let Some(op) = self.local.get(&key) {
            return Ok(op.clone());
        }
        let op = self.build(key).map(Arc::new);
        Ok(self.local.entry(key).or_insert(op).clone())
    }

    /// Letters swapping columns of degrees (a, b) at `i`, i+1 when one of
    /// them is 0 or m: a divided power rescaled to the plain swap of
    /// tensor factors.
    pub(crate) fn swap_letter(&self, i: usize, a: i32, b: i32) -> Result<Vec<Letter>, SchurError> {
        let letter = match b - a {
            0 => return Ok(Vec::new()),
            k if k > 0 => Letter::EDiv(i, k as u32),
            k => Letter::FDiv(i, (-k) as u32),
        };
        let op = self.local(&letter, a, b)?.ok_or(SchurError::InconsistentNormalization { m: self.m, a, b })?;
        let (da, db) = (self.dim(a), self.dim(b));
        let mut flip = Mat::zeros(db * da, da * db);
        for x in 0..da {
            for y in 0..db {
                flip[(y * da + x, x * db + y)] = RationalQ::one();
            }
        }
        let c = proportional(&op.mat, &flip).ok_or(SchurError::InconsistentNormalization { m: self.m, a, b })?;
        let mut out = vec![letter];
        if !c.is_one() {
            out.push(Letter::Scalar(c.inv().expect("nonzero")));
        }
        Ok(out)
    }
}

/// Shared algebra for rank m.
pub fn algebra(m: usize) -> Result<Arc<SchurAlgebra>, SchurError> {
    static CACHE: OnceLock<DashMap<usize, Arc<SchurAlgebra>>> = OnceLock::new();
    let cache = CACHE.get_or_init(DashMap::new);
    if let Some(a) = cache.get(&m) {
        return Ok(a.clone());
    }
    let alg = Arc::new(SchurAlgebra::new(m)?);
    Ok(cache.entry(m).or_insert(alg).clone())
}

type State = HashMap<Vec<u16>, RationalQ>;

fn apply_letter(alg: &SchurAlgebra, l: &Letter, w: &SchurWeight, st: State) -> Result<State, SchurError> {
    if let Letter::Scalar(c) = l {
        if c.is_zero() {
            return Ok(State::new());
        }
        return Ok(st.into_iter().map(|(k, v)| (k, &v * c)).collect());
    }
    let i = l.index().unwrap();
    let (a, b) = (w.0[i - 1], w.0[i]);
    let op = match alg.local(l, a, b)? {
        Some(op) => op,
        None => return Ok(State::new()),
    };
    let mut out = State::new();
    for (key, v) in st {
        let col = key[i - 1] as usize * op.in_right + key[i] as usize;
        for (row, c) in &op.cols[col] {
            let mut nk = key.clone();
            nk[i - 1] = (row / op.out_right) as u16;
            nk[i] = (row % op.out_right) as u16;
            let e = out.entry(nk).or_insert_with(RationalQ::zero);
            *e = &*e + &(&v * c);
        }
    }
    out.retain(|_, v| !v.is_zero());
    Ok(out)
}

fn radix(w: &SchurWeight, m: usize) -> Vec<usize> {
    w.0.iter().map(|&a| wedge(m, a).dim()).collect()
}

fn decode(mut k: usize, radix: &[usize]) -> Vec<u16> {
    let mut out = vec![0u16; radix.len()];
    for j in (0..radix.len()).rev() {
        out[j] = (k % radix[j]) as u16;
        k /= radix[j];
    }
    out
}

fn encode(key: &[u16], radix: &[usize]) -> usize {
    key.iter().zip(radix).fold(0, |acc, (&k, &r)| acc * r + k as usize)
}

/// Multiplies out a ladder word as a map between weight spaces.
pub fn eval_ladder(word: &LadderWord, m: usize) -> Result<SchurMap, SchurError> {
    let alg = algebra(m)?;
    let weights = word.weights()?;
    let end = weights.last().unwrap().clone();
    let mut out = SchurMap::zero(word.start.clone(), end.clone(), m);
    if !word.start.admissible(m) || weights.iter().any(|w| !w.admissible(m)) {
        return Ok(out);
    }
    let (rin, rout) = (radix(&word.start, m), radix(&end, m));
    let column = |c: usize| -> Result<Vec<((usize, usize), RationalQ)>, SchurError> {
        let mut st = State::new();
        st.insert(decode(c, &rin), RationalQ::one());
        for (l, w) in word.letters.iter().zip(&weights) {
            st = apply_letter(&alg, l, w, st)?;
            if st.is_empty() {
                break;
            }
        }
        Ok(st.into_iter().map(|(k, v)| ((encode(&k, &rout), c), v)).collect())
    };
    #[cfg(feature = "parallel")]
    let cols: Vec<_> = {
        use rayon::prelude::*;
        (0..out.cols).into_par_iter().map(column).collect::<Result<_, _>>()?
    };
    #[cfg(not(feature = "parallel"))]
    let cols: Vec<_> = (0..out.cols).map(column).collect::<Result<_, _>>()?;
    out.entries = cols.into_iter().flatten().collect();
    Ok(out)
}

/// `Σ c_k · word_k` on a common start weight.
pub fn eval_combination(m: usize, start: &SchurWeight, terms: &[(RationalQ, Vec<Letter>)]) -> Result<SchurMap, SchurError> {
    let mut acc: Option<SchurMap> = None;
    for (c, letters) in terms {
        let v = eval_ladder(&LadderWord::new(start.clone(), letters.clone()), m)?.scale(c);
        acc = Some(match acc {
            None => v,
            Some(a) => a.add(&v)?,
        });
    }
    acc.ok_or(SchurError::WeightMismatch)
}

/// A single generator on a weight space.
pub fn schur_generator(l: &Letter, w: &SchurWeight, m: usize) -> Result<SchurMap, SchurError> {
    eval_ladder(&LadderWord::new(w.clone(), vec![l.clone()]), m)
}

/// `q^{∓1}·1 − F_i E_i` on a weight with `(a_i, a_{i+1}) = (1, 1)`.
pub fn schur_crossing(w: &SchurWeight, i: usize, sign: i32, m: usize) -> Result<SchurMap, SchurError> {
    schur_generator(&Letter::Crossing(i, sign), w, m)
}

/// `K_i` acts on `1_[a]` by `q^{a_i − a_{i+1}}`.
pub fn schur_k(i: usize, w: &SchurWeight) -> RationalQ {
    RationalQ::q_pow(w.0[i - 1] - w.0[i])
}

/// All weights with `l` parts in `[0, m]` summing to `n`.
pub fn weights(l: usize, n: i32, m: usize) -> Vec<SchurWeight> {
    let mut out = vec![Vec::new()];
    for _ in 0..l {
        out = out
            .into_iter()
            .flat_map(|w: Vec<i32>| (0..=m as i32).map(move |a| [w.clone(), vec![a]].concat()))
            .collect();
    }
    out.into_iter().filter(|w| w.iter().sum::<i32>() == n).map(SchurWeight).collect()
}

/// Checks the weight, commutator and Serre relations on a weight space.
/// Each entry names a relation instance and whether it holds.
pub fn check_relations(w: &SchurWeight, m: usize) -> Result<Vec<(String, bool)>, SchurError> {
    use Letter::{E, F};
    let l = w.l();
    let one = RationalQ::one();
    let neg = -&one;
    let two = qi(2);
    let neg_two = -&two;
    let mut out = Vec::new();
    let zero_check = |terms: &[(RationalQ, Vec<Letter>)]| -> Result<bool, SchurError> {
        Ok(eval_combination(m, w, terms)?.is_zero())
    };
    for i in 1..l {
        for j in 1..l {
            // K_i X_j 1_w = q^{±(α_i, α_j)} X_j K_i 1_w, via the shifted weight.
            for (x, sgn) in [(E(j), 1), (F(j), -1)] {
                let tgt = x.shift(w)?;
                let cij = match (i as i32 - j as i32).abs() {
                    0 => 2,
                    1 => -1,
                    _ => 0,
                };
                let ok = schur_k(i, &tgt) == &schur_k(i, w) * &RationalQ::q_pow(sgn * cij);
                out.push((format!("K{} {}", i, x), ok));
            }
            // E_i F_j − F_j E_i = δ_ij [a_i − a_{i+1}]
            let mut terms = vec![(one.clone(), vec![F(j), E(i)]), (neg.clone(), vec![E(i), F(j)])];
            if i == j {
                terms.push((-&qi(w.0[i - 1] - w.0[i]), vec![]));
            }
            out.push((format!("[E{}, F{}]", i, j), zero_check(&terms)?));
            if (i as i32 - j as i32).abs() == 1 {
                for x in [E as fn(usize) -> Letter, F] {
                    let (xi, xj) = (x(i), x(j));
                    let terms = vec![
                        (one.clone(), vec![xj.clone(), xi.clone(), xi.clone()]),
                        (neg_two.clone(), vec![xi.clone(), xj.clone(), xi.clone()]),
                        (one.clone(), vec![xi.clone(), xi.clone(), xj.clone()]),
                    ];
                    out.push((format!("serre {} {}", xi, xj), zero_check(&terms)?));
                }
            }
            if (i as i32 - j as i32).abs() > 1 {
                for x in [E as fn(usize) -> Letter, F] {
                    let terms = vec![(one.clone(), vec![x(i), x(j)]), (neg.clone(), vec![x(j), x(i)])];
                    out.push((format!("far {} {}", x(i), x(j)), zero_check(&terms)?));
                }
            }
        }
    }
    Ok(out)
}
