use super::mat::Mat;
use super::qgroup::QGroupData;
use crate::diagram::{cut_open, upright, BoundaryObject, DiagramError, Generator, Orientation, SliceDiagram};
use crate::ring::{skein_z, RationalQ, RingError};
use std::collections::{BTreeMap, HashMap};

#[derive(Debug, thiserror::Error)]
pub enum RtError {
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error("endomorphism is not scalar")]
    NonScalarEndomorphism,
    #[error("diagram has no components")]
    Empty,
}

/// Matrices of the six generating morphisms. Cups are columns, caps rows,
/// on V⊗V* (`cw`) or V*⊗V (`ccw`); basis x_j⊗x_k* has index j·d + k.
#[derive(Clone, Debug)]
pub struct RtGenerators {
    pub m: usize,
    pub n: usize,
    pub cup_cw: Mat,
    pub cup_ccw: Mat,
    pub cap_cw: Mat,
    pub cap_ccw: Mat,
    pub r: Mat,
    pub r_inv: Mat,
}

impl RtGenerators {
    pub fn new(m: usize, n: usize) -> Self {
        let d = m + n;
        let (mi, ni) = (m as i32, n as i32);
        let mut cup_cw = Mat::zeros(d * d, 1);
        let mut cup_ccw = Mat::zeros(d * d, 1);
        let mut cap_cw = Mat::zeros(1, d * d);
        let mut cap_ccw = Mat::zeros(1, d * d);
        for k in 1..=d {
            let ki = k as i32;
            let idx = (k - 1) * d + (k - 1);
            cup_cw[(idx, 0)] = RationalQ::one();
            cap_ccw[(0, idx)] = RationalQ::one();
            if k <= m {
                cup_ccw[(idx, 0)] = RationalQ::q_pow(mi - ni + 1 - 2 * ki);
                cap_cw[(0, idx)] = RationalQ::q_pow(-mi + ni - 1 + 2 * ki);
            } else {
                cup_ccw[(idx, 0)] = -&RationalQ::q_pow(mi - ni + 2 * ki - 1 - 4 * mi);
                cap_cw[(0, idx)] = -&RationalQ::q_pow(3 * mi + ni + 1 - 2 * ki);
            }
        }
        let odd = |k: usize| k > m;
        let z = RationalQ::from_laurent(skein_z());
        let mut r = Mat::zeros(d * d, d * d);
        for i in 1..=d {
            for j in 1..=d {
                let col = (i - 1) * d + (j - 1);
                let swapped = (j - 1) * d + (i - 1);
                let sign = if odd(i) && odd(j) { -1 } else { 1 };
                if i == j {
                    r[(col, col)] = if i <= m { RationalQ::q_pow(-1) } else { -&RationalQ::q_pow(1) };
                } else {
                    r[(swapped, col)] = RationalQ::from_int(sign);
                    if i > j {
                        r[(col, col)] = z.clone();
                    }
                }
            }
        }
        let r_inv = r.inverse().expect("R is invertible");
        RtGenerators { m, n, cup_cw, cup_ccw, cap_cw, cap_ccw, r, r_inv }
    }

    pub fn dim(&self) -> usize {
        self.m + self.n
    }

    /// Each generator as a map between its source and target objects.
    pub fn as_morphisms(&self) -> Vec<(&'static str, Vec<Orientation>, Vec<Orientation>, &Mat)> {
        use Orientation::*;
        vec![
            ("cup-", vec![], vec![Up, Down], &self.cup_cw),
            ("cup+", vec![], vec![Down, Up], &self.cup_ccw),
            ("cap-", vec![Up, Down], vec![], &self.cap_cw),
            ("cap+", vec![Down, Up], vec![], &self.cap_ccw),
            ("x+", vec![Up, Up], vec![Up, Up], &self.r),
            ("x-", vec![Up, Up], vec![Up, Up], &self.r_inv),
        ]
    }

    /// Names of generators failing to commute with the quantum group.
    pub fn intertwiner_failures(&self, g: &QGroupData) -> Vec<String> {
        let mut bad = Vec::new();
        for (name, src, tgt, f) in self.as_morphisms() {
            for x in g.generators() {
                let lhs = g.action(x, &tgt).mul(f);
                let rhs = f.mul(&g.action(x, &src));
                if lhs != rhs {
                    bad.push(format!("{} vs {:?}", name, x));
                }
            }
        }
        bad
    }

    /// `(R⊗1)(1⊗R)(R⊗1) = (1⊗R)(R⊗1)(1⊗R)` on V^{⊗3}.
    pub fn yang_baxter(&self) -> bool {
        let one = Mat::identity(self.dim());
        let a = self.r.kron(&one);
        let b = one.kron(&self.r);
        a.mul(&b).mul(&a) == b.mul(&a).mul(&b)
    }

    /// `R - R^-1 = (q^-1 - q)·Id`.
    pub fn skein_identity(&self) -> bool {
        let z = RationalQ::from_laurent(skein_z());
        self.r.sub(&self.r_inv) == Mat::identity(self.r.rows()).scale(&z)
    }

    fn local(&self) -> Local {
        let d = self.dim();
        let split = |i: usize| ((i / d) as u8, (i % d) as u8);
        let col = |mm: &Mat| (0..mm.rows()).filter(|&i| !mm[(i, 0)].is_zero()).map(|i| (split(i), mm[(i, 0)].clone())).collect();
        let row = |mm: &Mat| (0..mm.cols()).filter(|&i| !mm[(0, i)].is_zero()).map(|i| (split(i), mm[(0, i)].clone())).collect();
        let square = |mm: &Mat| {
            let mut h = HashMap::new();
            for c in 0..mm.cols() {
                let v: Vec<_> =
                    (0..mm.rows()).filter(|&r| !mm[(r, c)].is_zero()).map(|r| (split(r), mm[(r, c)].clone())).collect();
                h.insert(split(c), v);
            }
            h
        };
        Local {
            cup_cw: col(&self.cup_cw),
            cup_ccw: col(&self.cup_ccw),
            cap_cw: row(&self.cap_cw),
            cap_ccw: row(&self.cap_ccw),
            r: square(&self.r),
            r_inv: square(&self.r_inv),
        }
    }
}

type Pair = (u8, u8);

struct Local {
    cup_cw: Vec<(Pair, RationalQ)>,
    cup_ccw: Vec<(Pair, RationalQ)>,
    cap_cw: HashMap<Pair, RationalQ>,
    cap_ccw: HashMap<Pair, RationalQ>,
    r: HashMap<Pair, Vec<(Pair, RationalQ)>>,
    r_inv: HashMap<Pair, Vec<(Pair, RationalQ)>>,
}

type State = HashMap<Vec<u8>, RationalQ>;

fn add_to(s: &mut State, k: Vec<u8>, v: RationalQ) {
    use std::collections::hash_map::Entry;
    match s.entry(k) {
        Entry::Occupied(mut e) => {
            let t = e.get() + &v;
            if t.is_zero() {
                e.remove();
            } else {
                *e.get_mut() = t;
            }
        }
        Entry::Vacant(e) => {
            if !v.is_zero() {
                e.insert(v);
            }
        }
    }
}

/// A tangle's matrix: entries indexed by (target word, source word) of
/// basis indices from 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepMatrix {
    pub source: BoundaryObject,
    pub target: BoundaryObject,
    pub dim: usize,
    pub entries: BTreeMap<(Vec<u8>, Vec<u8>), RationalQ>,
}

impl RepMatrix {
    pub fn entry(&self, row: &[u8], col: &[u8]) -> RationalQ {
        self.entries.get(&(row.to_vec(), col.to_vec())).cloned().unwrap_or_else(RationalQ::zero)
    }

    /// `Some(c)` when the matrix is `c·Id`.
    pub fn scalar(&self) -> Option<RationalQ> {
        if self.source != self.target {
            return None;
        }
        let words = all_words(self.dim, self.source.len());
        let c = self.entry(&words[0], &words[0]);
        for ((r, col), v) in &self.entries {
            if r != col && !v.is_zero() {
                return None;
            }
        }
        words.iter().all(|w| self.entry(w, w) == c).then_some(c)
    }
}

fn all_words(d: usize, len: usize) -> Vec<Vec<u8>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out.into_iter().flat_map(|w| (0..d as u8).map(move |k| [w.clone(), vec![k]].concat())).collect();
    }
    out
}

fn apply(local: &Local, d: &SliceDiagram, start: State) -> State {
    let mut st = start;
    for s in &d.slices {
        let p = s.position;
        let mut next = State::new();
        for (w, c) in &st {
            match s.generator {
                Generator::CupCw | Generator::CupCcw => {
                    let cup = if s.generator == Generator::CupCw { &local.cup_cw } else { &local.cup_ccw };
                    for ((a, b), v) in cup {
                        let mut nw = Vec::with_capacity(w.len() + 2);
                        nw.extend_from_slice(&w[..p]);
                        nw.push(*a);
                        nw.push(*b);
                        nw.extend_from_slice(&w[p..]);
                        add_to(&mut next, nw, c * v);
                    }
                }
                Generator::CapCw | Generator::CapCcw => {
                    let cap = if s.generator == Generator::CapCw { &local.cap_cw } else { &local.cap_ccw };
                    if let Some(v) = cap.get(&(w[p], w[p + 1])) {
                        let mut nw = w[..p].to_vec();
                        nw.extend_from_slice(&w[p + 2..]);
                        add_to(&mut next, nw, c * v);
                    }
                }
                Generator::PosCrossing | Generator::NegCrossing => {
                    let r = if s.generator == Generator::PosCrossing { &local.r } else { &local.r_inv };
                    for ((a, b), v) in &r[&(w[p], w[p + 1])] {
                        let mut nw = w.clone();
                        nw[p] = *a;
                        nw[p + 1] = *b;
                        add_to(&mut next, nw, c * v);
                    }
                }
                Generator::Id => add_to(&mut next, w.clone(), c.clone()),
            }
        }
        st = next;
    }
    st
}

/// Evaluates a tangle under the functor to Rep U_q(gl(m|n)).
pub fn eval_tangle_rt(d: &SliceDiagram, m: usize, n: usize) -> Result<RepMatrix, RtError> {
    eval_tangle_with(&RtGenerators::new(m, n), d)
}

pub fn eval_tangle_with(g: &RtGenerators, d: &SliceDiagram) -> Result<RepMatrix, RtError> {
    let u = upright(d)?;
    let local = g.local();
    let mut entries = BTreeMap::new();
    for w in all_words(g.dim(), d.source.len()) {
        let mut st = State::new();
        st.insert(w.clone(), RationalQ::one());
        for (row, v) in apply(&local, &u, st) {
            entries.insert((row, w.clone()), v);
        }
    }
    Ok(RepMatrix { source: d.source.clone(), target: d.target.clone(), dim: g.dim(), entries })
}

/// Value of a closed diagram.
pub fn eval_closed_rt(d: &SliceDiagram, m: usize, n: usize) -> Result<RationalQ, RtError> {
    let r = eval_tangle_rt(d, m, n)?;
    Ok(r.entry(&[], &[]))
}

/// The gl(1|1) scalar of the diagram cut open on its first component.
pub fn alexander_rt(d: &SliceDiagram) -> Result<RationalQ, RtError> {
    if d.slices.is_empty() {
        return Err(RtError::Empty);
    }
    let t = cut_open(d, 0)?;
    eval_tangle_rt(&t, 1, 1)?.scalar().ok_or(RtError::NonScalarEndomorphism)
}

