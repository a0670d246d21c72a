//! Oriented planar diagram codes.
//!
//! A crossing lists its four edge labels counter-clockwise starting from
//! the incoming under-strand. It is positive exactly when the incoming
//! over-strand sits in the last slot.

use crate::diagram::{crossing_sign, DiagramError, Generator, Leg, Orientation, Point, SliceDiagram, Stop, Walker};
use crate::uf::UnionFind;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub(crate) struct Crossing {
    pub legs: [u32; 4],
    pub positive: bool,
}

impl Crossing {
    pub fn sign(&self) -> i32 {
        if self.positive {
            1
        } else {
            -1
        }
    }

    pub fn over_in(&self) -> usize {
        if self.positive {
            3
        } else {
            1
        }
    }

    pub fn is_in(&self, slot: usize) -> bool {
        slot == 0 || slot == self.over_in()
    }

    /// Outgoing slot for a strand entering at `slot`.
    pub fn through(&self, slot: usize) -> usize {
        (slot + 2) % 4
    }

    pub fn switched(&self) -> Crossing {
        let [a, b, c, d] = self.legs;
        if self.positive {
            Crossing { legs: [d, a, b, c], positive: false }
        } else {
            Crossing { legs: [b, c, d, a], positive: true }
        }
    }

    /// Label pairs joined by the oriented smoothing.
    pub fn smoothing(&self) -> [(u32, u32); 2] {
        let [a, b, c, d] = self.legs;
        if self.positive {
            [(a, b), (d, c)]
        } else {
            [(a, d), (b, c)]
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub(crate) struct BoundaryEnd {
    pub label: u32,
    /// The strand leaves the boundary here.
    pub start: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum End {
    X(usize, usize),
    B(usize),
}

/// Labels are `0..labels`; each occurs once as a head and once as a tail.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) struct Pd {
    pub crossings: Vec<Crossing>,
    pub boundary: Vec<BoundaryEnd>,
    pub labels: u32,
}

impl Pd {
    /// Builds the code of a slice diagram, returning it with the number of
    /// crossingless closed loops. Boundary points are numbered source
    /// first, then target, each left to right.
    pub fn from_diagram(d: &SliceDiagram) -> Result<(Pd, u32), DiagramError> {
        let levels = d.levels()?;
        let w = Walker::new(d, &levels);
        let mut offset = Vec::with_capacity(levels.len());
        let mut total = 0;
        for l in &levels {
            offset.push(total);
            total += l.len();
        }
        let id = |p: Point| offset[p.level] + p.pos;
        let mut uf = UnionFind::new(total);
        for (t, l) in levels.iter().enumerate() {
            for pos in 0..l.len() {
                let p = Point::new(t, pos);
                if let Ok(q) = w.step(p) {
                    uf.union(id(p), id(q));
                }
            }
        }
        let mut compact = vec![u32::MAX; total];
        let mut next = 0u32;
        let mut label = |uf: &mut UnionFind, p: Point| {
            let r = uf.find(id(p));
            if compact[r] == u32::MAX {
                compact[r] = next;
                next += 1;
            }
            compact[r]
        };
        let mut crossings = Vec::new();
        for (s, sl) in d.slices.iter().enumerate() {
            if !sl.generator.is_crossing() {
                continue;
            }
            let c = sl.position;
            let (o1, o2) = (levels[s].0[c], levels[s].0[c + 1]);
            let ccw = [Leg::BL, Leg::BR, Leg::TR, Leg::TL];
            let over_is_bl_tr = sl.generator == Generator::PosCrossing;
            let under_in = match (over_is_bl_tr, o1, o2) {
                (true, _, Orientation::Up) => Leg::BR,
                (true, _, Orientation::Down) => Leg::TL,
                (false, Orientation::Up, _) => Leg::BL,
                (false, Orientation::Down, _) => Leg::TR,
            };
            let k = ccw.iter().position(|&l| l == under_in).unwrap();
            let mut legs = [0u32; 4];
            for (j, leg) in legs.iter_mut().enumerate() {
                *leg = label(&mut uf, w.leg_point(s, ccw[(k + j) % 4]));
            }
            let x = Crossing { legs, positive: crossing_sign(sl.generator, o1, o2) > 0 };
            crossings.push(x);
        }
        let mut boundary = Vec::new();
        let n = levels.len() - 1;
        for (t, is_source) in [(0, true), (n, false)] {
            for (pos, o) in levels[t].0.iter().enumerate() {
                let start = (*o == Orientation::Up) == is_source;
                boundary.push(BoundaryEnd { label: label(&mut uf, Point::new(t, pos)), start });
            }
        }
        let mut circles = 0;
        for i in 0..total {
            let r = uf.find(i);
            if compact[r] == u32::MAX {
                compact[r] = u32::MAX - 1;
                circles += 1;
            }
        }
        let pd = Pd { crossings, boundary, labels: next };
        debug_assert!(pd.check());
        debug_assert!(stops_consistent(&w, &levels));
        Ok((pd, circles))
    }

    /// Each label has exactly one head and one tail.
    pub fn check(&self) -> bool {
        let n = self.labels as usize;
        let (mut h, mut t) = (vec![0; n], vec![0; n]);
        for x in &self.crossings {
            for s in 0..4 {
                let l = x.legs[s] as usize;
                if x.is_in(s) {
                    h[l] += 1;
                } else {
                    t[l] += 1;
                }
            }
        }
        for b in &self.boundary {
            if b.start {
                t[b.label as usize] += 1;
            } else {
                h[b.label as usize] += 1;
            }
        }
        h.iter().chain(&t).all(|&c| c == 1)
    }

    pub fn heads(&self) -> Vec<End> {
        let mut h = vec![End::B(usize::MAX); self.labels as usize];
        for (i, x) in self.crossings.iter().enumerate() {
            h[x.legs[0] as usize] = End::X(i, 0);
            let o = x.over_in();
            h[x.legs[o] as usize] = End::X(i, o);
        }
        for (i, b) in self.boundary.iter().enumerate() {
            if !b.start {
                h[b.label as usize] = End::B(i);
            }
        }
        h
    }

    /// Removes crossing `idx` after identifying the given label pairs.
    /// Returns the new code and the number of loops that lost every
    /// crossing.
    pub fn remove_crossing(&self, idx: usize, joins: &[(u32, u32)]) -> (Pd, u32) {
        let mut uf = UnionFind::new(self.labels as usize);
        for &(a, b) in joins {
            uf.union(a as usize, b as usize);
        }
        let mut compact = vec![u32::MAX; self.labels as usize];
        let mut next = 0;
        let mut map = |uf: &mut UnionFind, l: u32| {
            let r = uf.find(l as usize);
            if compact[r] == u32::MAX {
                compact[r] = next;
                next += 1;
            }
            compact[r]
        };
        let mut crossings = Vec::with_capacity(self.crossings.len() - 1);
        for (i, x) in self.crossings.iter().enumerate() {
            if i != idx {
                let legs = x.legs.map(|l| map(&mut uf, l));
                crossings.push(Crossing { legs, positive: x.positive });
            }
        }
        let boundary = self.boundary.iter().map(|b| BoundaryEnd { label: map(&mut uf, b.label), start: b.start }).collect();
        let mut circles = 0;
        for l in self.crossings[idx].legs {
            let r = uf.find(l as usize);
            if compact[r] == u32::MAX {
                compact[r] = u32::MAX - 1;
                circles += 1;
            }
        }
        (Pd { crossings, boundary, labels: next }, circles)
    }

    pub fn smooth(&self, idx: usize) -> (Pd, u32) {
        self.remove_crossing(idx, &self.crossings[idx].smoothing())
    }

    /// Removes curls until none are left. Returns the code, the summed
    /// sign of the removed curls and the number of loops freed.
    pub fn remove_kinks(mut self) -> (Pd, i32, u32) {
        let mut writhe = 0;
        let mut circles = 0;
        'outer: loop {
            for (i, x) in self.crossings.iter().enumerate() {
                for s in 0..4 {
                    if x.legs[s] == x.legs[(s + 1) % 4] {
                        let (y, z) = (x.legs[(s + 2) % 4], x.legs[(s + 3) % 4]);
                        writhe += x.sign();
                        let (pd, c) = self.remove_crossing(i, &[(y, z), (x.legs[s], y)]);
                        self = pd;
                        circles += c;
                        continue 'outer;
                    }
                }
            }
            break;
        }
        (self, writhe, circles)
    }

    /// Splits into connected pieces: closed ones, then the single piece
    /// holding every boundary point (if any).
    pub fn pieces(&self) -> (Vec<Pd>, Option<Pd>) {
        let n = self.labels as usize;
        let mut uf = UnionFind::new(n + 1);
        for x in &self.crossings {
            for l in x.legs {
                uf.union(x.legs[0] as usize, l as usize);
            }
        }
        for b in &self.boundary {
            uf.union(n, b.label as usize);
        }
        let open_root = uf.find(n);
        let mut groups: Vec<(usize, Vec<Crossing>)> = Vec::new();
        let mut open = Vec::new();
        for x in &self.crossings {
            let r = uf.find(x.legs[0] as usize);
            if r == open_root {
                open.push(*x);
            } else if let Some(g) = groups.iter_mut().find(|g| g.0 == r) {
                g.1.push(*x);
            } else {
                groups.push((r, vec![*x]));
            }
        }
        let closed = groups.into_iter().map(|(_, xs)| compacted(xs, Vec::new())).collect();
        let open = (!self.boundary.is_empty()).then(|| compacted(open, self.boundary.clone()));
        (closed, open)
    }

    /// Relabels by walking strands: boundary starts in order, then further
    /// loops in order of discovery. Returns old → new.
    fn walk_labels(&self, heads: &[End], first: Option<u32>) -> Vec<u32> {
        let n = self.labels as usize;
        let mut map = vec![u32::MAX; n];
        let mut next = 0;
        let mut queue: Vec<u32> = Vec::new();
        let mut qi = 0;
        let mut starts: Vec<u32> = self.boundary.iter().filter(|b| b.start).map(|b| b.label).collect();
        starts.extend(first);
        let mut si = 0;
        loop {
            let start = if si < starts.len() {
                si += 1;
                starts[si - 1]
            } else {
                while qi < queue.len() && map[queue[qi] as usize] != u32::MAX {
                    qi += 1;
                }
                if qi == queue.len() {
                    break;
                }
                queue[qi]
            };
            let mut cur = start;
            while map[cur as usize] == u32::MAX {
                map[cur as usize] = next;
                next += 1;
                match heads[cur as usize] {
                    End::B(_) => break,
                    End::X(xi, slot) => {
                        let x = &self.crossings[xi];
                        for k in 1..4 {
                            queue.push(x.legs[(slot + k) % 4]);
                        }
                        cur = x.legs[x.through(slot)];
                    }
                }
            }
        }
        // unreachable labels only occur in disconnected input
        for m in map.iter_mut() {
            if *m == u32::MAX {
                *m = next;
                next += 1;
            }
        }
        map
    }

    fn relabeled(&self, map: &[u32]) -> Pd {
        let mut crossings: Vec<Crossing> =
            self.crossings.iter().map(|x| Crossing { legs: x.legs.map(|l| map[l as usize]), positive: x.positive }).collect();
        crossings.sort();
        let boundary = self.boundary.iter().map(|b| BoundaryEnd { label: map[b.label as usize], start: b.start }).collect();
        Pd { crossings, boundary, labels: self.labels }
    }

    pub fn key(&self) -> Vec<u32> {
        let mut k = Vec::with_capacity(self.crossings.len() * 5 + self.boundary.len() * 2);
        for x in &self.crossings {
            k.extend_from_slice(&x.legs);
            k.push(x.positive as u32);
        }
        for b in &self.boundary {
            k.push(b.label);
            k.push(b.start as u32);
        }
        k
    }

    /// A relabeling that depends only on the diagram up to planar isotopy
    /// of a connected piece, with its key.
    pub fn canonical(&self) -> (Pd, Vec<u32>) {
        let heads = self.heads();
        if !self.boundary.is_empty() {
            let pd = self.relabeled(&self.walk_labels(&heads, None));
            let k = pd.key();
            return (pd, k);
        }
        let mut best: Option<(Pd, Vec<u32>)> = None;
        for s in 0..self.labels {
            let pd = self.relabeled(&self.walk_labels(&heads, Some(s)));
            let k = pd.key();
            if best.as_ref().is_none_or(|b| k < b.1) {
                best = Some((pd, k));
            }
        }
        best.unwrap_or_else(|| (self.clone(), self.key()))
    }
}

fn compacted(crossings: Vec<Crossing>, boundary: Vec<BoundaryEnd>) -> Pd {
    let mut map = std::collections::HashMap::new();
    let mut get = |l: u32| {
        let n = map.len() as u32;
        *map.entry(l).or_insert(n)
    };
    let crossings =
        crossings.iter().map(|x| Crossing { legs: x.legs.map(&mut get), positive: x.positive }).collect();
    let boundary = boundary.iter().map(|b| BoundaryEnd { label: get(b.label), start: b.start }).collect();
    let labels = map.len() as u32;
    Pd { crossings, boundary, labels }
}

fn stops_consistent(w: &Walker, levels: &[crate::diagram::BoundaryObject]) -> bool {
    levels.iter().enumerate().all(|(t, l)| {
        (0..l.len()).all(|p| match w.step(Point::new(t, p)) {
            Err(Stop::Source(_)) => t == 0,
            Err(Stop::Target(_)) => t == levels.len() - 1,
            _ => true,
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{braid_closure, parse_braid};

    #[test]
    fn trefoil_code() {
        let d = braid_closure(&parse_braid("1 1 1", 2).unwrap());
        let (pd, c) = Pd::from_diagram(&d).unwrap();
        assert_eq!(c, 0);
        assert_eq!(pd.crossings.len(), 3);
        assert_eq!(pd.labels, 6);
        assert!(pd.crossings.iter().all(|x| x.positive));
        let (cp, k) = pd.canonical();
        assert!(cp.check());
        let mut shuffled = pd.clone();
        shuffled.crossings.rotate_left(1);
        assert_eq!(shuffled.canonical().1, k);
    }

    #[test]
    fn curl_is_removed() {
        let d = braid_closure(&parse_braid("1", 2).unwrap());
        let (pd, _) = Pd::from_diagram(&d).unwrap();
        let (pd, w, c) = pd.remove_kinks();
        assert_eq!((pd.crossings.len(), w, c), (0, 1, 1));
    }

    #[test]
    fn switch_twice_is_identity() {
        let x = Crossing { legs: [0, 1, 2, 3], positive: true };
        assert_eq!(x.switched().switched(), x);
        assert_eq!(x.switched().over_in(), 1);
        assert_eq!(x.switched().legs[0], 3);
    }
}
