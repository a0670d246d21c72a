use super::moves::curl;
use super::{BoundaryObject, DiagramError, Generator, Orientation, Point, Slice, SliceDiagram, Walker};

fn opposite(g: Generator) -> Generator {
    match g {
        Generator::PosCrossing => Generator::NegCrossing,
        Generator::NegCrossing => Generator::PosCrossing,
        other => other,
    }
}

fn upright_crossing(g: Generator, a: Orientation, b: Orientation, p: usize, out: &mut Vec<Slice>) {
    use Orientation::*;
    match (a, b) {
        (Up, Up) => out.push(Slice::new(p, g)),
        (Up, Down) => {
            out.push(Slice::new(p, Generator::CupCcw));
            out.push(Slice::new(p + 1, opposite(g)));
            out.push(Slice::new(p + 2, Generator::CapCw));
        }
        (Down, Up) => {
            out.push(Slice::new(p + 2, Generator::CupCw));
            out.push(Slice::new(p + 1, opposite(g)));
            out.push(Slice::new(p, Generator::CapCcw));
        }
        (Down, Down) => {
            out.push(Slice::new(p, Generator::CupCcw));
            upright_crossing(opposite(g), Up, Down, p + 1, out);
            out.push(Slice::new(p + 2, Generator::CapCw));
        }
    }
}

/// Planar isotopy turning every crossing into one between two upward strands.
pub fn upright(d: &SliceDiagram) -> Result<SliceDiagram, DiagramError> {
    let levels = d.levels()?;
    let mut out = Vec::with_capacity(d.slices.len());
    for (i, s) in d.slices.iter().enumerate() {
        if s.generator.is_crossing() {
            let o = &levels[i].0;
            upright_crossing(s.generator, o[s.position], o[s.position + 1], s.position, &mut out);
        } else {
            out.push(*s);
        }
    }
    Ok(SliceDiagram::new(d.source.clone(), out, d.target.clone()))
}

/// Places `b` to the right of `a`.
pub fn disjoint_union(a: &SliceDiagram, b: &SliceDiagram) -> SliceDiagram {
    let shift = a.target.len() as isize;
    let mut slices = a.slices.clone();
    slices.extend(b.slices.iter().map(|s| s.shifted(shift)));
    let mut source = a.source.clone();
    source.0.extend(b.source.0.iter().copied());
    let mut target = a.target.clone();
    target.0.extend(b.target.0.iter().copied());
    SliceDiagram::new(source, slices, target)
}

/// Switches every crossing.
pub fn mirror(d: &SliceDiagram) -> SliceDiagram {
    let slices = d.slices.iter().map(|s| Slice::new(s.position, opposite(s.generator))).collect();
    SliceDiagram::new(d.source.clone(), slices, d.target.clone())
}

/// Every upward point of a component, in (level, position) order.
pub fn cut_points(d: &SliceDiagram, component: usize) -> Result<Vec<Point>, DiagramError> {
    if !d.is_closed() {
        return Err(DiagramError::NotClosed);
    }
    let levels = d.levels()?;
    let w = Walker::new(d, &levels);
    let comps = w.components();
    let c = comps.get(component).ok_or(DiagramError::ComponentNotFound(component))?;
    Ok(c.iter().copied().filter(|&p| w.orientation(p) == Orientation::Up).collect())
}

/// Cuts a closed diagram at its first upward point on `component`.
pub fn cut_open(d: &SliceDiagram, component: usize) -> Result<SliceDiagram, DiagramError> {
    let pts = cut_points(d, component)?;
    cut_open_at(d, pts[0])
}

/// Cuts a closed diagram at an upward point, giving a (1,1)-tangle whose
/// left closure is framed-isotopic to `d`.
///
/// The new strand enters at the bottom left and the cut end leaves at the
/// top left; both pass over everything to their left at the cut level. The
/// single crossing between them is cancelled by an opposite curl.
pub fn cut_open_at(d: &SliceDiagram, at: Point) -> Result<SliceDiagram, DiagramError> {
    if !d.is_closed() {
        return Err(DiagramError::NotClosed);
    }
    let levels = d.levels()?;
    let obj = levels.get(at.level).ok_or(DiagramError::ComponentNotFound(at.level))?;
    if obj.0.get(at.pos) != Some(&Orientation::Up) {
        return Err(DiagramError::PatternMismatch(format!("no upward strand at level {} position {}", at.level, at.pos)));
    }
    let p = at.pos;
    let mut slices = curl(Orientation::Up, 0, -1);
    slices.extend(d.slices[..at.level].iter().map(|s| s.shifted(1)));
    for j in (2..=p + 1).rev() {
        slices.push(Slice::new(j - 1, Generator::NegCrossing));
    }
    slices.push(Slice::new(0, Generator::PosCrossing));
    for j in 1..=p {
        slices.push(Slice::new(j, Generator::PosCrossing));
    }
    slices.extend(d.slices[at.level..].iter().map(|s| s.shifted(1)));
    Ok(SliceDiagram::new(BoundaryObject::ups(1), slices, BoundaryObject::ups(1)))
}
