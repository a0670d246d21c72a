use super::{BoundaryObject, Generator, Orientation, SliceDiagram};

/// A strand passing level `level` at position `pos`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    pub level: usize,
    pub pos: usize,
}

impl Point {
    pub fn new(level: usize, pos: usize) -> Self {
        Point { level, pos }
    }
}

/// Legs of a crossing slice: bottom/top, left/right.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Leg {
    BL,
    BR,
    TR,
    TL,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Stop {
    Crossing { slice: usize, leg: Leg },
    Source(usize),
    Target(usize),
}

/// Follows strands through a validated diagram along their orientation.
pub struct Walker<'a> {
    d: &'a SliceDiagram,
    levels: &'a [BoundaryObject],
}

impl<'a> Walker<'a> {
    pub fn new(d: &'a SliceDiagram, levels: &'a [BoundaryObject]) -> Self {
        Walker { d, levels }
    }

    pub fn orientation(&self, p: Point) -> Orientation {
        self.levels[p.level].0[p.pos]
    }

    /// One step along the orientation: the next point, or the crossing leg
    /// or boundary point reached.
    pub fn step(&self, p: Point) -> Result<Point, Stop> {
        let n = self.d.slices.len();
        if self.orientation(p) == Orientation::Up {
            if p.level == n {
                return Err(Stop::Target(p.pos));
            }
            let s = self.d.slices[p.level];
            let c = s.position;
            let t = p.level;
            match s.generator {
                Generator::CupCcw | Generator::CupCw => Ok(Point::new(t + 1, if p.pos < c { p.pos } else { p.pos + 2 })),
                Generator::CapCcw | Generator::CapCw => {
                    if p.pos == c {
                        Ok(Point::new(t, c + 1))
                    } else if p.pos == c + 1 {
                        Ok(Point::new(t, c))
                    } else {
                        Ok(Point::new(t + 1, if p.pos < c { p.pos } else { p.pos - 2 }))
                    }
                }
                Generator::PosCrossing | Generator::NegCrossing => {
                    if p.pos == c {
                        Err(Stop::Crossing { slice: t, leg: Leg::BL })
                    } else if p.pos == c + 1 {
                        Err(Stop::Crossing { slice: t, leg: Leg::BR })
                    } else {
                        Ok(Point::new(t + 1, p.pos))
                    }
                }
                Generator::Id => Ok(Point::new(t + 1, p.pos)),
            }
        } else {
            if p.level == 0 {
                return Err(Stop::Source(p.pos));
            }
            let t = p.level;
            let s = self.d.slices[t - 1];
            let c = s.position;
            match s.generator {
                Generator::CupCcw | Generator::CupCw => {
                    if p.pos == c {
                        Ok(Point::new(t, c + 1))
                    } else if p.pos == c + 1 {
                        Ok(Point::new(t, c))
                    } else {
                        Ok(Point::new(t - 1, if p.pos < c { p.pos } else { p.pos - 2 }))
                    }
                }
                Generator::CapCcw | Generator::CapCw => Ok(Point::new(t - 1, if p.pos < c { p.pos } else { p.pos + 2 })),
                Generator::PosCrossing | Generator::NegCrossing => {
                    if p.pos == c {
                        Err(Stop::Crossing { slice: t - 1, leg: Leg::TL })
                    } else if p.pos == c + 1 {
                        Err(Stop::Crossing { slice: t - 1, leg: Leg::TR })
                    } else {
                        Ok(Point::new(t - 1, p.pos))
                    }
                }
                Generator::Id => Ok(Point::new(t - 1, p.pos)),
            }
        }
    }

    /// The point where a strand leaving a crossing through `leg` sits.
    pub fn leg_point(&self, slice: usize, leg: Leg) -> Point {
        let c = self.d.slices[slice].position;
        match leg {
            Leg::BL => Point::new(slice, c),
            Leg::BR => Point::new(slice, c + 1),
            Leg::TL => Point::new(slice + 1, c),
            Leg::TR => Point::new(slice + 1, c + 1),
        }
    }

    /// Leg through which a strand entering at `leg` leaves.
    pub fn through(leg: Leg) -> Leg {
        match leg {
            Leg::BL => Leg::TR,
            Leg::TR => Leg::BL,
            Leg::BR => Leg::TL,
            Leg::TL => Leg::BR,
        }
    }

    /// Next point, passing straight through crossings.
    pub fn next_through(&self, p: Point) -> Option<Point> {
        match self.step(p) {
            Ok(q) => Some(q),
            Err(Stop::Crossing { slice, leg }) => Some(self.leg_point(slice, Self::through(leg))),
            Err(_) => None,
        }
    }

    /// Points of each component, sorted; components ordered by first point.
    pub fn components(&self) -> Vec<Vec<Point>> {
        let mut index = Vec::new();
        let mut offset = Vec::with_capacity(self.levels.len());
        for (t, l) in self.levels.iter().enumerate() {
            offset.push(index.len());
            for p in 0..l.len() {
                index.push(Point::new(t, p));
            }
        }
        let id = |p: Point| offset[p.level] + p.pos;
        let mut parent: Vec<usize> = (0..index.len()).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for &p in &index {
            if let Some(q) = self.next_through(p) {
                let (a, b) = (find(&mut parent, id(p)), find(&mut parent, id(q)));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
        let mut groups: Vec<Vec<Point>> = Vec::new();
        let mut root_group = std::collections::HashMap::new();
        for &p in &index {
            let r = find(&mut parent, id(p));
            let g = *root_group.entry(r).or_insert_with(|| {
                groups.push(Vec::new());
                groups.len() - 1
            });
            groups[g].push(p);
        }
        groups
    }
}
