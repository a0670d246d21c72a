use super::{BoundaryObject, DiagramError, Generator, Slice, SliceDiagram};
use std::fmt;

/// A braid word: `k > 0` is σ_k, `k < 0` is σ_|k|^-1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BraidWord {
    pub strands: usize,
    pub letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self, DiagramError> {
        for &k in &letters {
            if k == 0 || k.unsigned_abs() as usize >= strands {
                return Err(DiagramError::IndexOutOfRange { index: k, strands });
            }
        }
        Ok(BraidWord { strands, letters })
    }

    /// Underlying permutation: `perm[i]` is the top position of the strand
    /// starting at bottom position `i`.
    pub fn permutation(&self) -> Vec<usize> {
        let mut at: Vec<usize> = (0..self.strands).collect();
        for &k in &self.letters {
            let i = k.unsigned_abs() as usize - 1;
            for p in at.iter_mut() {
                if *p == i {
                    *p = i + 1;
                } else if *p == i + 1 {
                    *p = i;
                }
            }
        }
        at
    }

    pub fn cycle_count(&self) -> usize {
        let p = self.permutation();
        let mut seen = vec![false; p.len()];
        let mut cycles = 0;
        for s in 0..p.len() {
            if !seen[s] {
                cycles += 1;
                let mut x = s;
                while !seen[x] {
                    seen[x] = true;
                    x = p[x];
                }
            }
        }
        cycles
    }

    /// The braid as an open diagram on ↑^n.
    pub fn to_diagram(&self) -> SliceDiagram {
        let slices = self
            .letters
            .iter()
            .map(|&k| Slice::new(k.unsigned_abs() as usize - 1, Generator::crossing(k.signum())))
            .collect();
        let obj = BoundaryObject::ups(self.strands);
        SliceDiagram::new(obj.clone(), slices, obj)
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "braid {}:", self.strands)?;
        for k in &self.letters {
            write!(f, " {}", k)?;
        }
        Ok(())
    }
}

pub fn parse_braid(text: &str, strands: usize) -> Result<BraidWord, DiagramError> {
    let mut letters = Vec::new();
    for (pos, tok) in text.split_whitespace().enumerate() {
        let k: i32 = tok
            .parse()
            .map_err(|_| DiagramError::BraidParse { pos, msg: format!("not an integer: {:?}", tok) })?;
        if k == 0 {
            return Err(DiagramError::BraidParse { pos, msg: "generator index 0".into() });
        }
        letters.push(k);
    }
    if strands == 0 {
        return Err(DiagramError::IndexOutOfRange { index: 0, strands });
    }
    BraidWord::new(strands, letters)
}

/// Closure: n nested ↑↓ cups, the braid on the left strands, n nested caps.
pub fn braid_closure(b: &BraidWord) -> SliceDiagram {
    let n = b.strands;
    let mut slices: Vec<Slice> = (0..n).map(|k| Slice::new(k, Generator::CupCw)).collect();
    slices.extend(b.to_diagram().slices);
    slices.extend((0..n).rev().map(|k| Slice::new(k, Generator::CapCw)));
    SliceDiagram::new(BoundaryObject::empty(), slices, BoundaryObject::empty())
}
