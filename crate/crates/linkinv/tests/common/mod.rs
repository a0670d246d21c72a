#![allow(dead_code)]

use linkinv::diagram::*;
use linkinv::ring::{GroundElem, LaurentQ, RationalQ};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn closure(w: &str, n: usize) -> SliceDiagram {
    braid_closure(&parse_braid(w, n).unwrap())
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_braid(r: &mut impl Rng, max_strands: usize, max_len: usize) -> BraidWord {
    let n = r.gen_range(1..=max_strands);
    let len = if n == 1 { 0 } else { r.gen_range(0..=max_len) };
    let letters = (0..len)
        .map(|_| {
            let k = r.gen_range(1..n as i32);
            if r.gen_bool(0.5) {
                k
            } else {
                -k
            }
        })
        .collect();
    BraidWord::new(n, letters).unwrap()
}

pub fn random_move(r: &mut impl Rng, d: &SliceDiagram) -> SliceDiagram {
    let ms = applicable_moves(d);
    // favour the rarer shape-changing moves
    let rare: Vec<_> = ms.iter().filter(|m| !matches!(m, MoveSpec::R2Insert { .. } | MoveSpec::ZigzagInsert { .. } | MoveSpec::R1PairInsert { .. })).collect();
    let m = if !rare.is_empty() && r.gen_bool(0.6) { *rare[r.gen_range(0..rare.len())] } else { ms[r.gen_range(0..ms.len())] };
    apply_move(d, &m).unwrap()
}

pub fn q(s: &str) -> RationalQ {
    s.parse().unwrap()
}

pub fn l(s: &str) -> LaurentQ {
    s.parse().unwrap()
}

pub fn hopf() -> SliceDiagram {
    deserialize("source: -\nslice 0 cup+\nslice 2 cup-\nslice 1 x+\nslice 1 x+\nslice 2 cap-\nslice 0 cap+\ntarget: -\n").unwrap()
}

/// `q ↦ q^-1`, `u ↦ u^-1`.
pub fn bar(g: &GroundElem) -> GroundElem {
    GroundElem::from_terms(g.terms().iter().map(|(k, r)| (-k, r.substitute_power(-1))))
}
