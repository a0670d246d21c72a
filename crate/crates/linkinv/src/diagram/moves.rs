use super::{DiagramError, Generator, Orientation, Slice, SliceDiagram};

/// A local rewrite of a diagram. `slice` is the index of the first slice
/// involved, or for insertions the level at which new slices go in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MoveSpec {
    R2Insert { slice: usize, position: usize, sign: i32 },
    R2Delete { slice: usize },
    R1PairInsert { slice: usize, position: usize, first_sign: i32 },
    R1PairDelete { slice: usize },
    R3 { slice: usize },
    Commute { slice: usize },
    ZigzagInsert { slice: usize, position: usize, right: bool },
    ZigzagDelete { slice: usize },
}

impl MoveSpec {
    /// Whether the move keeps the writhe.
    pub fn preserves_writhe(&self) -> bool {
        true
    }
}

/// A curl of writhe `sign` on a strand of orientation `o` at `position`.
pub fn curl(o: Orientation, position: usize, sign: i32) -> Vec<Slice> {
    let x = Generator::crossing(sign);
    match o {
        Orientation::Up => vec![
            Slice::new(position + 1, Generator::CupCw),
            Slice::new(position, x),
            Slice::new(position + 1, Generator::CapCw),
        ],
        Orientation::Down => vec![
            Slice::new(position + 1, Generator::CupCcw),
            Slice::new(position, x),
            Slice::new(position + 1, Generator::CapCcw),
        ],
    }
}

fn zigzag(o: Orientation, p: usize, right: bool) -> [Slice; 2] {
    use Generator::*;
    match (o, right) {
        (Orientation::Up, true) => [Slice::new(p + 1, CupCcw), Slice::new(p, CapCw)],
        (Orientation::Up, false) => [Slice::new(p, CupCw), Slice::new(p + 1, CapCcw)],
        (Orientation::Down, true) => [Slice::new(p + 1, CupCw), Slice::new(p, CapCcw)],
        (Orientation::Down, false) => [Slice::new(p, CupCcw), Slice::new(p + 1, CapCw)],
    }
}

fn mismatch(msg: impl Into<String>) -> DiagramError {
    DiagramError::PatternMismatch(msg.into())
}

fn splice(d: &SliceDiagram, at: usize, remove: usize, insert: &[Slice]) -> SliceDiagram {
    let mut s = d.slices.clone();
    s.splice(at..at + remove, insert.iter().copied());
    SliceDiagram::new(d.source.clone(), s, d.target.clone())
}

fn window(d: &SliceDiagram, k: usize, n: usize) -> Result<&[Slice], DiagramError> {
    d.slices.get(k..k + n).ok_or_else(|| mismatch(format!("need {} slices at {}", n, k)))
}

fn commuted(a: Slice, b: Slice) -> Option<[Slice; 2]> {
    let (ia, oa) = a.generator.arity();
    let (ib, ob) = b.generator.arity();
    let (pa, pb) = (a.position, b.position);
    if pb + ib <= pa {
        let db = ob as isize - ib as isize;
        Some([b, a.shifted(db)])
    } else if pb >= pa + oa {
        let da = oa as isize - ia as isize;
        Some([b.shifted(-da), a])
    } else {
        None
    }
}

fn r3_image(w: &[Slice]) -> Option<[Slice; 3]> {
    if !w.iter().all(|s| s.generator.is_crossing()) {
        return None;
    }
    let (p0, p1, p2) = (w[0].position, w[1].position, w[2].position);
    if p0 != p2 || !(p1 == p0 + 1 || p1 + 1 == p0) {
        return None;
    }
    let (a, b, c) = (w[0].generator, w[1].generator, w[2].generator);
    if a == c && a != b {
        return None;
    }
    Some([Slice::new(p1, c), Slice::new(p0, b), Slice::new(p1, a)])
}

fn is_curl_at(d: &SliceDiagram, levels: &[super::BoundaryObject], k: usize) -> Option<(Orientation, usize, i32)> {
    let w = d.slices.get(k..k + 3)?;
    let x = w[1];
    if !x.generator.is_crossing() {
        return None;
    }
    let p = x.position;
    let o = *levels[k].0.get(p)?;
    let sign = x.generator.crossing_type();
    (curl(o, p, sign) == w).then_some((o, p, sign))
}

/// Applies a move, failing if its pattern does not match.
pub fn apply_move(d: &SliceDiagram, m: &MoveSpec) -> Result<SliceDiagram, DiagramError> {
    let levels = d.levels()?;
    let level = |k: usize| levels.get(k).ok_or_else(|| mismatch(format!("no level {}", k)));
    match *m {
        MoveSpec::R2Insert { slice, position, sign } => {
            if level(slice)?.len() < position + 2 {
                return Err(mismatch(format!("no two strands at {} on level {}", position, slice)));
            }
            let x = Generator::crossing(sign);
            let y = Generator::crossing(-sign);
            Ok(splice(d, slice, 0, &[Slice::new(position, x), Slice::new(position, y)]))
        }
        MoveSpec::R2Delete { slice } => {
            let w = window(d, slice, 2)?;
            let ok = w[0].generator.is_crossing()
                && w[1].generator.is_crossing()
                && w[0].position == w[1].position
                && w[0].generator != w[1].generator;
            if !ok {
                return Err(mismatch("not an inverse crossing pair"));
            }
            Ok(splice(d, slice, 2, &[]))
        }
        MoveSpec::R1PairInsert { slice, position, first_sign } => {
            let o = *level(slice)?.0.get(position).ok_or_else(|| mismatch("no strand for curl"))?;
            let mut ins = curl(o, position, first_sign);
            ins.extend(curl(o, position, -first_sign));
            Ok(splice(d, slice, 0, &ins))
        }
        MoveSpec::R1PairDelete { slice } => {
            let a = is_curl_at(d, &levels, slice).ok_or_else(|| mismatch("no curl"))?;
            let b = is_curl_at(d, &levels, slice + 3).ok_or_else(|| mismatch("no second curl"))?;
            if a.0 != b.0 || a.1 != b.1 || a.2 != -b.2 {
                return Err(mismatch("curls do not cancel"));
            }
            Ok(splice(d, slice, 6, &[]))
        }
        MoveSpec::R3 { slice } => {
            let w = window(d, slice, 3)?;
            let img = r3_image(w).ok_or_else(|| mismatch("not an R3 triple"))?;
            Ok(splice(d, slice, 3, &img))
        }
        MoveSpec::Commute { slice } => {
            let w = window(d, slice, 2)?;
            let img = commuted(w[0], w[1]).ok_or_else(|| mismatch("slices overlap"))?;
            Ok(splice(d, slice, 2, &img))
        }
        MoveSpec::ZigzagInsert { slice, position, right } => {
            let o = *level(slice)?.0.get(position).ok_or_else(|| mismatch("no strand for zigzag"))?;
            Ok(splice(d, slice, 0, &zigzag(o, position, right)))
        }
        MoveSpec::ZigzagDelete { slice } => {
            let w = window(d, slice, 2)?;
            let obj = level(slice)?;
            for p in 0..obj.len() {
                for right in [true, false] {
                    if zigzag(obj.0[p], p, right) == w {
                        return Ok(splice(d, slice, 2, &[]));
                    }
                }
            }
            Err(mismatch("not a zigzag"))
        }
    }
}

/// All moves whose pattern matches `d`: deletions and shifts at every
/// slice, insertions at every level and strand.
pub fn applicable_moves(d: &SliceDiagram) -> Vec<MoveSpec> {
    let Ok(levels) = d.levels() else { return Vec::new() };
    let mut out = Vec::new();
    for (k, obj) in levels.iter().enumerate() {
        for p in 0..obj.len() {
            for s in [1, -1] {
                if p + 1 < obj.len() {
                    out.push(MoveSpec::R2Insert { slice: k, position: p, sign: s });
                }
                out.push(MoveSpec::R1PairInsert { slice: k, position: p, first_sign: s });
            }
            for right in [true, false] {
                out.push(MoveSpec::ZigzagInsert { slice: k, position: p, right });
            }
        }
    }
    for k in 0..d.slices.len() {
        for m in [
            MoveSpec::R2Delete { slice: k },
            MoveSpec::R1PairDelete { slice: k },
            MoveSpec::R3 { slice: k },
            MoveSpec::Commute { slice: k },
            MoveSpec::ZigzagDelete { slice: k },
        ] {
            if apply_move(d, &m).is_ok() {
                out.push(m);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{braid_closure, parse_braid};

    #[test]
    fn curl_writhe_is_sign() {
        for o in [Orientation::Up, Orientation::Down] {
            for s in [1, -1] {
                let src = crate::diagram::BoundaryObject(vec![o]);
                let d = SliceDiagram::from_slices(src, curl(o, 0, s)).unwrap();
                assert_eq!(d.writhe().unwrap(), s);
                assert_eq!(d.target.0, vec![o]);
            }
        }
    }

    #[test]
    fn insert_then_delete() {
        let d = braid_closure(&parse_braid("1 -2 1", 3).unwrap());
        let ins = [
            (MoveSpec::R2Insert { slice: 4, position: 1, sign: 1 }, MoveSpec::R2Delete { slice: 4 }),
            (MoveSpec::R1PairInsert { slice: 4, position: 2, first_sign: -1 }, MoveSpec::R1PairDelete { slice: 4 }),
            (MoveSpec::ZigzagInsert { slice: 4, position: 4, right: false }, MoveSpec::ZigzagDelete { slice: 4 }),
        ];
        for (a, b) in ins {
            let e = apply_move(&d, &a).unwrap();
            e.validate().unwrap();
            assert_eq!(apply_move(&e, &b).unwrap(), d);
        }
    }

    #[test]
    fn r3_rejects_mixed_middle() {
        let d = braid_closure(&parse_braid("1 -2 1", 3).unwrap());
        assert!(apply_move(&d, &MoveSpec::R3 { slice: 3 }).is_err());
        let d = braid_closure(&parse_braid("1 2 -1", 3).unwrap());
        let e = apply_move(&d, &MoveSpec::R3 { slice: 3 }).unwrap();
        assert_eq!(e.validate().unwrap(), d.validate().unwrap());
    }

    #[test]
    fn distant_slices_commute() {
        let o = braid_closure(&parse_braid("", 1).unwrap());
        let d = crate::diagram::disjoint_union(&o, &o);
        assert!(apply_move(&d, &MoveSpec::Commute { slice: 0 }).is_err());
        let e = apply_move(&d, &MoveSpec::Commute { slice: 1 }).unwrap();
        assert_ne!(e, d);
        assert_eq!(e.validate().unwrap().components, 2);
    }
}
