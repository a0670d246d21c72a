//! HOMFLY-PT evaluation by crossing switches.
//!
//! A diagram is reduced to descending form along a fixed walk: every
//! crossing first reached from below is switched, each switch paying
//! `ε·(q^-1 - q)` times the smoothed diagram. Descending diagrams are
//! framed unlinks, worth `[β]` per loop and `q^{-β}` per unit of self
//! writhe.

mod pd;
mod poly;

use crate::diagram::{BoundaryObject, DiagramError, SliceDiagram};
use crate::ring::{skein_z, GroundElem, LaurentQ, RationalQ, RingError};
use dashmap::DashMap;
use pd::{End, Pd};
use poly::SkeinPoly;
use std::collections::BTreeMap;
use std::sync::atomic::{AtomicU64, Ordering};

type Matching = Vec<(u32, u32)>;
type TVal = BTreeMap<Matching, SkeinPoly>;

#[derive(Debug, thiserror::Error)]
pub enum SkeinError {
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error("diagram is not closed")]
    NotClosed,
    #[error("diagram has no components")]
    Empty,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EvalOptions {
    pub memo: bool,
    /// Ignored without the `parallel` feature.
    pub parallel: bool,
}

impl Default for EvalOptions {
    fn default() -> Self {
        EvalOptions { memo: true, parallel: cfg!(feature = "parallel") }
    }
}

/// A tangle value in the basis of boundary matchings.
///
/// Boundary points are numbered source first, then target, left to right.
/// A matching lists `(start, end)` for each strand, by start. Its basis
/// element is the tangle whose strands run straight between the paired
/// points, stacked so that strands with earlier starts lie above, each
/// with zero self-writhe.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TangleValue {
    pub source: BoundaryObject,
    pub target: BoundaryObject,
    pub terms: BTreeMap<Vec<(usize, usize)>, GroundElem>,
}

impl TangleValue {
    /// The coefficient of the matching pairing source `i` with target `i`,
    /// if that is the only term.
    pub fn scalar(&self) -> Option<GroundElem> {
        if self.terms.is_empty() {
            return Some(GroundElem::zero());
        }
        if self.terms.len() != 1 || self.source != self.target {
            return None;
        }
        let (m, v) = self.terms.iter().next().unwrap();
        let k = self.source.len();
        let straight = m.iter().all(|&(a, b)| {
            let (s, t) = if a < k { (a, b) } else { (b, a) };
            s < k && t == s + k
        });
        straight.then(|| v.clone())
    }

    pub fn coeff(&self, m: &[(usize, usize)]) -> GroundElem {
        self.terms.get(m).cloned().unwrap_or_else(GroundElem::zero)
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct EngineStats {
    pub nodes: u64,
    pub memo_hits: u64,
}

/// Evaluator with a memo shared across branches and calls.
pub struct SkeinEngine {
    opts: EvalOptions,
    memo: DashMap<Vec<u32>, TVal>,
    nodes: AtomicU64,
    hits: AtomicU64,
}

impl Default for SkeinEngine {
    fn default() -> Self {
        Self::new(EvalOptions::default())
    }
}

// crossings below this run their branches inline
#[cfg(feature = "parallel")]
const PAR_THRESHOLD: usize = 7;

impl SkeinEngine {
    pub fn new(opts: EvalOptions) -> Self {
        SkeinEngine { opts, memo: DashMap::new(), nodes: AtomicU64::new(0), hits: AtomicU64::new(0) }
    }

    pub fn stats(&self) -> EngineStats {
        EngineStats { nodes: self.nodes.load(Ordering::Relaxed), memo_hits: self.hits.load(Ordering::Relaxed) }
    }

    pub fn eval_closed(&self, d: &SliceDiagram) -> Result<GroundElem, SkeinError> {
        if !d.is_closed() {
            return Err(SkeinError::NotClosed);
        }
        let (pd, circles) = Pd::from_diagram(d)?;
        let v = self.eval(pd, circles);
        Ok(v.get(&Vec::new()).map(|p| p.to_ground()).unwrap_or_else(GroundElem::zero))
    }

    pub fn eval_tangle(&self, d: &SliceDiagram) -> Result<TangleValue, SkeinError> {
        let (pd, circles) = Pd::from_diagram(d)?;
        let v = self.eval(pd, circles);
        let terms = v
            .into_iter()
            .map(|(m, p)| (m.into_iter().map(|(a, b)| (a as usize, b as usize)).collect(), p.to_ground()))
            .filter(|(_, g): &(_, GroundElem)| !g.is_zero())
            .collect();
        Ok(TangleValue { source: d.source.clone(), target: d.target.clone(), terms })
    }

    fn eval(&self, pd: Pd, circles: u32) -> TVal {
        let (pd, w, c) = pd.remove_kinks();
        let mut scalar = SkeinPoly::monomial(circles + c, -w);
        let (closed, open) = pd.pieces();
        for p in closed {
            let v = self.eval_connected(p);
            scalar = scalar.mul(&v[&Vec::new()]);
            if scalar.is_zero() {
                break;
            }
        }
        match open {
            None => single(Vec::new(), scalar),
            Some(p) => scale_tval(&self.eval_connected(p), &scalar),
        }
    }

    fn eval_connected(&self, pd: Pd) -> TVal {
        if pd.crossings.is_empty() {
            return single(straight_matching(&pd), SkeinPoly::monomial(0, 0));
        }
        self.nodes.fetch_add(1, Ordering::Relaxed);
        if !self.opts.memo {
            return self.descend(&pd);
        }
        let (cp, key) = pd.canonical();
        if let Some(v) = self.memo.get(&key) {
            self.hits.fetch_add(1, Ordering::Relaxed);
            return v.clone();
        }
        let v = self.descend(&cp);
        self.memo.entry(key).or_insert_with(|| v.clone());
        v
    }

    fn descend(&self, pd: &Pd) -> TVal {
        let walk = Walk::new(pd);
        let base = single(walk.matching.clone(), SkeinPoly::monomial(walk.closed, -walk.switched_writhe));
        if walk.bad.is_empty() {
            return base;
        }
        let z = skein_z();
        let child = |k: usize| -> TVal {
            let mut p = pd.clone();
            for &j in &walk.bad[..k] {
                p.crossings[j] = p.crossings[j].switched();
            }
            let c = walk.bad[k];
            let eps = pd.crossings[c].sign();
            let (s, circ) = p.smooth(c);
            let f = if eps > 0 { z.clone() } else { -&z };
            scale_tval_laurent(&self.eval(s, circ), &f)
        };
        let parts: Vec<TVal> = self.map_branches(walk.bad.len(), pd.crossings.len(), &child);
        let mut acc = base;
        for part in &parts {
            add_tval(&mut acc, part);
        }
        acc
    }

    #[cfg(feature = "parallel")]
    fn map_branches(&self, n: usize, size: usize, f: &(dyn Fn(usize) -> TVal + Sync)) -> Vec<TVal> {
        use rayon::prelude::*;
        if self.opts.parallel && size >= PAR_THRESHOLD {
            (0..n).into_par_iter().map(f).collect()
        } else {
            (0..n).map(f).collect()
        }
    }

    #[cfg(not(feature = "parallel"))]
    fn map_branches(&self, n: usize, _size: usize, f: &(dyn Fn(usize) -> TVal + Sync)) -> Vec<TVal> {
        (0..n).map(f).collect()
    }
}

/// Walk data: strands from boundary starts in order, then loops from the
/// smallest unvisited label.
struct Walk {
    bad: Vec<usize>,
    matching: Matching,
    closed: u32,
    switched_writhe: i32,
}

impl Walk {
    fn new(pd: &Pd) -> Walk {
        let heads = pd.heads();
        let n = pd.labels as usize;
        let mut visited = vec![false; n];
        let mut first = vec![false; pd.crossings.len()];
        let mut passes = vec![[usize::MAX; 2]; pd.crossings.len()];
        let mut bad = Vec::new();
        let mut matching = Vec::new();
        let mut comp = 0;
        let mut go = |visited: &mut [bool], start: u32, comp: usize, bad: &mut Vec<usize>| -> Option<usize> {
            let mut cur = start as usize;
            while !visited[cur] {
                visited[cur] = true;
                match heads[cur] {
                    End::B(j) => return Some(j),
                    End::X(xi, slot) => {
                        let over = slot != 0;
                        if !first[xi] {
                            first[xi] = true;
                            if !over {
                                bad.push(xi);
                            }
                        }
                        passes[xi][over as usize] = comp;
                        cur = pd.crossings[xi].legs[pd.crossings[xi].through(slot)] as usize;
                    }
                }
            }
            None
        };
        for (i, b) in pd.boundary.iter().enumerate() {
            if b.start {
                let end = go(&mut visited, b.label, comp, &mut bad).expect("open strand ends on the boundary");
                matching.push((i as u32, end as u32));
                comp += 1;
            }
        }
        let mut closed = 0;
        for l in 0..n {
            if !visited[l] {
                go(&mut visited, l as u32, comp, &mut bad);
                comp += 1;
                closed += 1;
            }
        }
        let mut flipped = vec![false; pd.crossings.len()];
        for &b in &bad {
            flipped[b] = true;
        }
        let switched_writhe = pd
            .crossings
            .iter()
            .enumerate()
            .filter(|(i, _)| passes[*i][0] == passes[*i][1])
            .map(|(i, x)| if flipped[i] { -x.sign() } else { x.sign() })
            .sum();
        Walk { bad, matching, closed, switched_writhe }
    }
}

fn single(m: Matching, p: SkeinPoly) -> TVal {
    let mut t = BTreeMap::new();
    if !p.is_zero() {
        t.insert(m, p);
    }
    t
}

fn straight_matching(pd: &Pd) -> Matching {
    let mut m = Vec::new();
    for (i, b) in pd.boundary.iter().enumerate() {
        if b.start {
            let j = pd.boundary.iter().position(|e| !e.start && e.label == b.label).expect("paired boundary");
            m.push((i as u32, j as u32));
        }
    }
    m
}

fn add_tval(acc: &mut TVal, o: &TVal) {
    for (m, p) in o {
        let e = acc.entry(m.clone()).or_insert_with(SkeinPoly::zero);
        e.add_assign(p);
        if e.is_zero() {
            acc.remove(m);
        }
    }
}

fn scale_tval(t: &TVal, s: &SkeinPoly) -> TVal {
    t.iter().map(|(m, p)| (m.clone(), p.mul(s))).filter(|(_, p)| !p.is_zero()).collect()
}

fn scale_tval_laurent(t: &TVal, s: &LaurentQ) -> TVal {
    t.iter().map(|(m, p)| (m.clone(), p.scale(s))).collect()
}

/// The invariant of a closed diagram in End(∅) = ground ring.
pub fn eval_closed(d: &SliceDiagram) -> Result<GroundElem, SkeinError> {
    SkeinEngine::default().eval_closed(d)
}

pub fn eval_tangle(d: &SliceDiagram) -> Result<TangleValue, SkeinError> {
    SkeinEngine::default().eval_tangle(d)
}

pub fn homfly(d: &SliceDiagram) -> Result<GroundElem, SkeinError> {
    eval_closed(d)
}

pub fn rt_sln(d: &SliceDiagram, n: i32) -> Result<RationalQ, SkeinError> {
    Ok(eval_closed(d)?.specialize_beta(n))
}

pub fn jones(d: &SliceDiagram) -> Result<RationalQ, SkeinError> {
    rt_sln(d, 2)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Reduced {
    Generic,
    Sln(i32),
    Alexander,
}

/// Value divided by the unknot, as a ground ring element.
pub fn reduced_generic(d: &SliceDiagram) -> Result<GroundElem, SkeinError> {
    if d.slices.is_empty() {
        return Err(SkeinError::Empty);
    }
    Ok(eval_closed(d)?.divide_by_qint_beta()?)
}

pub fn reduced(d: &SliceDiagram, variant: Reduced) -> Result<GroundElem, SkeinError> {
    let g = reduced_generic(d)?;
    Ok(match variant {
        Reduced::Generic => g,
        Reduced::Sln(n) => GroundElem::from_rational(g.specialize_beta(n)),
        Reduced::Alexander => GroundElem::from_rational(g.specialize_beta(0)),
    })
}

/// Multiplies by `q^{β·writhe}`, cancelling the framing dependence.
pub fn framing_normalize(v: &GroundElem, writhe: i32) -> GroundElem {
    v.shift_u(writhe)
}
