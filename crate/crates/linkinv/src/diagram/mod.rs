//! Oriented framed tangle diagrams as stacks of elementary slices.

mod braid;
mod format;
mod moves;
mod rewrite;
mod trace;

pub use braid::{braid_closure, parse_braid, BraidWord};
pub use format::{deserialize, parse_input, serialize};
pub use moves::{applicable_moves, apply_move, curl, MoveSpec};
pub use rewrite::{cut_open, cut_open_at, cut_points, disjoint_union, mirror, upright};
pub use trace::{Leg, Point, Stop, Walker};

use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Orientation {
    Up,
    Down,
}

impl Orientation {
    pub fn flip(self) -> Self {
        match self {
            Orientation::Up => Orientation::Down,
            Orientation::Down => Orientation::Up,
        }
    }
}

/// A boundary object: a word in ↑ and ↓.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct BoundaryObject(pub Vec<Orientation>);

impl BoundaryObject {
    pub fn empty() -> Self {
        BoundaryObject(Vec::new())
    }

    pub fn ups(n: usize) -> Self {
        BoundaryObject(vec![Orientation::Up; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for BoundaryObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "-");
        }
        for o in &self.0 {
            write!(f, "{}", if *o == Orientation::Up { 'u' } else { 'd' })?;
        }
        Ok(())
    }
}

/// Elementary generators. Cups and caps are named by the rotation of the
/// arc they belong to: `CupCcw` creates ↓↑, `CupCw` creates ↑↓, `CapCcw`
/// closes ↓↑ and `CapCw` closes ↑↓. `PosCrossing` has the strand running
/// from bottom-left to top-right over; `NegCrossing` the other one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    CupCcw,
    CupCw,
    CapCcw,
    CapCw,
    PosCrossing,
    NegCrossing,
    Id,
}

impl Generator {
    pub fn name(self) -> &'static str {
        match self {
            Generator::CupCcw => "cup+",
            Generator::CupCw => "cup-",
            Generator::CapCcw => "cap+",
            Generator::CapCw => "cap-",
            Generator::PosCrossing => "x+",
            Generator::NegCrossing => "x-",
            Generator::Id => "id",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        Some(match s {
            "cup+" => Generator::CupCcw,
            "cup-" => Generator::CupCw,
            "cap+" => Generator::CapCcw,
            "cap-" => Generator::CapCw,
            "x+" => Generator::PosCrossing,
            "x-" => Generator::NegCrossing,
            "id" => Generator::Id,
            _ => return None,
        })
    }

    pub fn is_cup(self) -> bool {
        matches!(self, Generator::CupCcw | Generator::CupCw)
    }

    pub fn is_cap(self) -> bool {
        matches!(self, Generator::CapCcw | Generator::CapCw)
    }

    pub fn is_crossing(self) -> bool {
        matches!(self, Generator::PosCrossing | Generator::NegCrossing)
    }

    /// Geometric type as ±1 for crossings.
    pub fn crossing_type(self) -> i32 {
        match self {
            Generator::PosCrossing => 1,
            Generator::NegCrossing => -1,
            _ => 0,
        }
    }

    pub fn crossing(sign: i32) -> Self {
        if sign > 0 {
            Generator::PosCrossing
        } else {
            Generator::NegCrossing
        }
    }

    /// Points consumed and produced.
    pub fn arity(self) -> (usize, usize) {
        match self {
            Generator::CupCcw | Generator::CupCw => (0, 2),
            Generator::CapCcw | Generator::CapCw => (2, 0),
            Generator::PosCrossing | Generator::NegCrossing => (2, 2),
            Generator::Id => (1, 1),
        }
    }

    /// Orientations created by a cup or required by a cap.
    pub fn pair(self) -> Option<[Orientation; 2]> {
        use Orientation::*;
        match self {
            Generator::CupCcw | Generator::CapCcw => Some([Down, Up]),
            Generator::CupCw | Generator::CapCw => Some([Up, Down]),
            _ => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Slice {
    pub position: usize,
    pub generator: Generator,
}

impl Slice {
    pub fn new(position: usize, generator: Generator) -> Self {
        Slice { position, generator }
    }

    pub fn shifted(self, k: isize) -> Self {
        Slice { position: (self.position as isize + k) as usize, generator: self.generator }
    }

    /// Applies the slice to an object, checking orientations.
    pub fn apply(&self, obj: &BoundaryObject) -> Result<BoundaryObject, String> {
        let p = self.position;
        let w = obj.len();
        let mut v = obj.0.clone();
        match self.generator {
            Generator::CupCcw | Generator::CupCw => {
                if p > w {
                    return Err(format!("cup position {} beyond width {}", p, w));
                }
                let pr = self.generator.pair().unwrap();
                v.splice(p..p, pr);
            }
            Generator::CapCcw | Generator::CapCw => {
                if p + 1 >= w {
                    return Err(format!("cap position {} beyond width {}", p, w));
                }
                let pr = self.generator.pair().unwrap();
                if v[p] != pr[0] || v[p + 1] != pr[1] {
                    return Err(format!("cap {} does not match orientations at {}", self.generator.name(), p));
                }
                v.drain(p..p + 2);
            }
            Generator::PosCrossing | Generator::NegCrossing => {
                if p + 1 >= w {
                    return Err(format!("crossing position {} beyond width {}", p, w));
                }
                v.swap(p, p + 1);
            }
            Generator::Id => {
                if p >= w {
                    return Err(format!("identity position {} beyond width {}", p, w));
                }
            }
        }
        Ok(BoundaryObject(v))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SliceDiagram {
    pub source: BoundaryObject,
    pub slices: Vec<Slice>,
    pub target: BoundaryObject,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DiagramStats {
    pub components: usize,
    pub writhe: i32,
    pub crossings: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DiagramError {
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("braid parse error at token {pos}: {msg}")]
    BraidParse { pos: usize, msg: String },
    #[error("generator index {index} out of range for {strands} strands")]
    IndexOutOfRange { index: i32, strands: usize },
    #[error("malformed diagram at slice {slice}: {msg}")]
    Malformed { slice: usize, msg: String },
    #[error("move pattern does not match: {0}")]
    PatternMismatch(String),
    #[error("component {0} not found")]
    ComponentNotFound(usize),
    #[error("diagram is not closed")]
    NotClosed,
}

impl SliceDiagram {
    pub fn new(source: BoundaryObject, slices: Vec<Slice>, target: BoundaryObject) -> Self {
        SliceDiagram { source, slices, target }
    }

    /// Builds a diagram from slices, computing the target.
    pub fn from_slices(source: BoundaryObject, slices: Vec<Slice>) -> Result<Self, DiagramError> {
        let mut obj = source.clone();
        for (i, s) in slices.iter().enumerate() {
            obj = s.apply(&obj).map_err(|msg| DiagramError::Malformed { slice: i, msg })?;
        }
        Ok(SliceDiagram { source, slices, target: obj })
    }

    pub fn closed(slices: Vec<Slice>) -> Result<Self, DiagramError> {
        let d = Self::from_slices(BoundaryObject::empty(), slices)?;
        if !d.target.is_empty() {
            return Err(DiagramError::Malformed { slice: d.slices.len(), msg: "closed diagram ends with open points".into() });
        }
        Ok(d)
    }

    pub fn identity(obj: BoundaryObject) -> Self {
        SliceDiagram { source: obj.clone(), slices: Vec::new(), target: obj }
    }

    pub fn is_closed(&self) -> bool {
        self.source.is_empty() && self.target.is_empty()
    }

    /// Objects at every level, from the source (level 0) to the target.
    pub fn levels(&self) -> Result<Vec<BoundaryObject>, DiagramError> {
        let mut out = Vec::with_capacity(self.slices.len() + 1);
        let mut obj = self.source.clone();
        out.push(obj.clone());
        for (i, s) in self.slices.iter().enumerate() {
            obj = s.apply(&obj).map_err(|msg| DiagramError::Malformed { slice: i, msg })?;
            out.push(obj.clone());
        }
        if obj != self.target {
            return Err(DiagramError::Malformed {
                slice: self.slices.len(),
                msg: format!("declared target {} but slices produce {}", self.target, obj),
            });
        }
        Ok(out)
    }

    pub fn validate(&self) -> Result<DiagramStats, DiagramError> {
        let levels = self.levels()?;
        let walker = Walker::new(self, &levels);
        Ok(DiagramStats { components: walker.components().len(), writhe: writhe_of(self, &levels), crossings: self.crossing_count() })
    }

    pub fn crossing_count(&self) -> usize {
        self.slices.iter().filter(|s| s.generator.is_crossing()).count()
    }

    pub fn writhe(&self) -> Result<i32, DiagramError> {
        Ok(writhe_of(self, &self.levels()?))
    }

    pub fn max_width(&self) -> usize {
        self.levels().map(|l| l.iter().map(|o| o.len()).max().unwrap_or(0)).unwrap_or(0)
    }
}

/// Writhe of a crossing slice given its input object.
pub fn crossing_sign(g: Generator, a: Orientation, b: Orientation) -> i32 {
    g.crossing_type() * if a == b { 1 } else { -1 }
}

fn writhe_of(d: &SliceDiagram, levels: &[BoundaryObject]) -> i32 {
    d.slices
        .iter()
        .enumerate()
        .filter(|(_, s)| s.generator.is_crossing())
        .map(|(i, s)| crossing_sign(s.generator, levels[i].0[s.position], levels[i].0[s.position + 1]))
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn circle_stats() {
        let d = SliceDiagram::closed(vec![Slice::new(0, Generator::CupCw), Slice::new(0, Generator::CapCw)]).unwrap();
        assert_eq!(d.validate().unwrap(), DiagramStats { components: 1, writhe: 0, crossings: 0 });
    }

    #[test]
    fn mismatched_cap_is_rejected() {
        let d = SliceDiagram::new(
            BoundaryObject::empty(),
            vec![Slice::new(0, Generator::CupCw), Slice::new(0, Generator::CapCcw)],
            BoundaryObject::empty(),
        );
        assert!(matches!(d.validate(), Err(DiagramError::Malformed { slice: 1, .. })));
    }

    #[test]
    fn mixed_crossing_writhe() {
        use Orientation::*;
        assert_eq!(crossing_sign(Generator::PosCrossing, Up, Up), 1);
        assert_eq!(crossing_sign(Generator::PosCrossing, Down, Down), 1);
        assert_eq!(crossing_sign(Generator::PosCrossing, Up, Down), -1);
        assert_eq!(crossing_sign(Generator::NegCrossing, Down, Up), 1);
    }
}
