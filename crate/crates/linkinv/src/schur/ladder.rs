use super::{algebra, eval_ladder, LadderWord, Letter, SchurAlgebra, SchurError, SchurMap, SchurWeight};
use crate::diagram::{upright, Generator, Orientation, SliceDiagram};
use crate::ring::RationalQ;

/// Column contents: strands ↑ (degree 1) and ↓ (degree m−1), and empty
/// columns of degree 0 or m.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Col {
    Up,
    Down,
    Empty,
    Full,
}

impl Col {
    fn is_strand(self) -> bool {
        matches!(self, Col::Up | Col::Down)
    }
}

struct Compiler<'a> {
    alg: &'a SchurAlgebra,
    m: i32,
    start: Vec<Col>,
    cols: Vec<Col>,
    letters: Vec<Letter>,
    scalar: RationalQ,
}

impl Compiler<'_> {
    fn degree(&self, c: Col) -> i32 {
        match c {
            Col::Up => 1,
            Col::Down => self.m - 1,
            Col::Empty => 0,
            Col::Full => self.m,
        }
    }

    fn weight(&self, cols: &[Col]) -> SchurWeight {
        SchurWeight(cols.iter().map(|&c| self.degree(c)).collect())
    }

    /// The sign carried by the ↓↑ cup and cap rules.
    fn sign(&self) -> RationalQ {
        RationalQ::from_int(if self.m % 2 == 0 { -1 } else { 1 })
    }

    fn straddled(&self, gap: usize) -> bool {
        self.letters.iter().any(|l| l.index() == Some(gap))
    }

    fn push(&mut self, l: Letter) {
        match l {
            Letter::Scalar(c) => self.scalar = &self.scalar * &c,
            l => self.letters.push(l),
        }
    }

    /// Adds a column of constant contents to every earlier level.
    fn insert_direct(&mut self, gap: usize, c: Col) {
        self.start.insert(gap, c);
        self.cols.insert(gap, c);
        for l in &mut self.letters {
            if let Some(i) = l.index() {
                if i > gap {
                    *l = l.with_index(i + 1);
                }
            }
        }
    }

    fn swap(&mut self, j: usize) -> Result<(), SchurError> {
        let (a, b) = (self.degree(self.cols[j]), self.degree(self.cols[j + 1]));
        for l in self.alg.swap_letter(j + 1, a, b)? {
            self.push(l);
        }
        self.cols.swap(j, j + 1);
        Ok(())
    }

    fn insert_empty(&mut self, gap: usize, c: Col) -> Result<(), SchurError> {
        if !self.straddled(gap) {
            self.insert_direct(gap, c);
            return Ok(());
        }
        let free = (0..=self.cols.len())
            .filter(|&g| !self.straddled(g))
            .min_by_key(|&g| (g as isize - gap as isize).abs())
            .expect("edge gaps are free");
        self.insert_direct(free, c);
        if free < gap {
            for j in free..gap {
                self.swap(j)?;
            }
        } else {
            for j in (gap..free).rev() {
                self.swap(j)?;
            }
        }
        Ok(())
    }

    fn strand_col(&self, p: usize) -> Option<usize> {
        self.cols.iter().enumerate().filter(|(_, c)| c.is_strand()).nth(p).map(|(i, _)| i)
    }

    fn adjacent(&mut self, p: usize, slice: usize) -> Result<usize, SchurError> {
        let missing = || SchurError::MalformedDiagram(format!("slice {} has no strands at {}", slice, p));
        loop {
            let a = self.strand_col(p).ok_or_else(missing)?;
            let b = self.strand_col(p + 1).ok_or_else(missing)?;
            if b == a + 1 {
                return Ok(a);
            }
            self.swap(b - 1)?;
        }
    }

    fn cup(&mut self, p: usize, g: Generator) -> Result<(), SchurError> {
        let (x, y) = if g == Generator::CupCw { (Col::Empty, Col::Full) } else { (Col::Full, Col::Empty) };
        let lo = if p == 0 { 0 } else { self.strand_col(p - 1).unwrap() + 1 };
        let hi = self.strand_col(p).unwrap_or(self.cols.len());
        let reuse = (lo..hi.saturating_sub(1)).find(|&j| self.cols[j] == x && self.cols[j + 1] == y);
        let j = match reuse {
            Some(j) => j,
            None => match (lo..=hi).find(|&gap| !self.straddled(gap)) {
                Some(gap) => {
                    self.insert_direct(gap, x);
                    self.insert_direct(gap + 1, y);
                    gap
                }
                None => {
                    self.insert_empty(lo, x)?;
                    self.insert_empty(lo + 1, y)?;
                    lo
                }
            },
        };
        if g == Generator::CupCw {
            self.push(Letter::E(j + 1));
            self.cols[j] = Col::Up;
            self.cols[j + 1] = Col::Down;
        } else {
            self.push(Letter::F(j + 1));
            self.push(Letter::Scalar(self.sign()));
            self.cols[j] = Col::Down;
            self.cols[j + 1] = Col::Up;
        }
        Ok(())
    }

    fn cap(&mut self, p: usize, g: Generator, slice: usize) -> Result<(), SchurError> {
        let j = self.adjacent(p, slice)?;
        let pair = (self.cols[j], self.cols[j + 1]);
        match (g, pair) {
            (Generator::CapCw, (Col::Up, Col::Down)) => {
                self.push(Letter::F(j + 1));
                self.cols[j] = Col::Empty;
                self.cols[j + 1] = Col::Full;
            }
            (Generator::CapCcw, (Col::Down, Col::Up)) => {
                self.push(Letter::E(j + 1));
                self.push(Letter::Scalar(self.sign()));
                self.cols[j] = Col::Full;
                self.cols[j + 1] = Col::Empty;
            }
            _ => return Err(SchurError::MalformedDiagram(format!("cap orientation mismatch at slice {}", slice))),
        }
        Ok(())
    }

    fn crossing(&mut self, p: usize, g: Generator, slice: usize) -> Result<(), SchurError> {
        let j = self.adjacent(p, slice)?;
        if (self.cols[j], self.cols[j + 1]) != (Col::Up, Col::Up) {
            return Err(SchurError::MalformedDiagram(format!("crossing at slice {} is not upward", slice)));
        }
        self.push(Letter::Crossing(j + 1, g.crossing_type()));
        Ok(())
    }
}

/// Compiles a slice diagram into a ladder word: ↑ strands become degree-1
/// columns, ↓ strands degree m−1, and empty columns of degree 0 or m are
/// added where cups need them.
pub fn tangle_to_ladder(d: &SliceDiagram, m: usize) -> Result<LadderWord, SchurError> {
    let alg = algebra(m)?;
    let u = upright(d)?;
    let start: Vec<Col> =
        u.source.0.iter().map(|o| if *o == Orientation::Up { Col::Up } else { Col::Down }).collect();
    let mut c = Compiler {
        alg: &alg,
        m: m as i32,
        start: start.clone(),
        cols: start,
        letters: Vec::new(),
        scalar: RationalQ::one(),
    };
    for (k, s) in u.slices.iter().enumerate() {
        match s.generator {
            g @ (Generator::CupCw | Generator::CupCcw) => c.cup(s.position, g)?,
            g @ (Generator::CapCw | Generator::CapCcw) => c.cap(s.position, g, k)?,
            g @ (Generator::PosCrossing | Generator::NegCrossing) => c.crossing(s.position, g, k)?,
            Generator::Id => {}
        }
    }
    let start = c.weight(&c.start);
    let mut letters = c.letters;
    if !c.scalar.is_one() {
        letters.push(Letter::Scalar(c.scalar));
    }
    Ok(LadderWord::new(start, letters))
}

/// Ladder evaluation of a tangle.
pub fn eval_tangle_schur(d: &SliceDiagram, m: usize) -> Result<SchurMap, SchurError> {
    eval_ladder(&tangle_to_ladder(d, m)?, m)
}

/// Ladder evaluation of a closed diagram.
pub fn eval_closed_schur(d: &SliceDiagram, m: usize) -> Result<RationalQ, SchurError> {
    if !d.is_closed() {
        return Err(SchurError::MalformedDiagram("diagram has boundary".into()));
    }
    Ok(eval_tangle_schur(d, m)?.entry(0, 0))
}
