//! Line-based slice format.
//!
//! ```text
//! source: -
//! slice 0 cup+
//! slice 2 cup-
//! slice 1 x+
//! target: -
//! ```
//! Objects are words in `u`/`d` (`-` for empty). Generators: `cup+` (∅→du),
//! `cup-` (∅→ud), `cap+` (du→∅), `cap-` (ud→∅), `x+`, `x-`, `id`.

use super::{braid_closure, parse_braid, BoundaryObject, DiagramError, Generator, Orientation, Slice, SliceDiagram};

pub fn serialize(d: &SliceDiagram) -> String {
    let mut out = format!("source: {}\n", d.source);
    for s in &d.slices {
        out.push_str(&format!("slice {} {}\n", s.position, s.generator.name()));
    }
    out.push_str(&format!("target: {}\n", d.target));
    out
}

fn perr(line: usize, msg: impl Into<String>) -> DiagramError {
    DiagramError::Parse { line, msg: msg.into() }
}

fn parse_object(s: &str, line: usize) -> Result<BoundaryObject, DiagramError> {
    if s == "-" {
        return Ok(BoundaryObject::empty());
    }
    if s.is_empty() {
        return Err(perr(line, "empty object (use '-')"));
    }
    s.chars()
        .map(|c| match c {
            'u' => Ok(Orientation::Up),
            'd' => Ok(Orientation::Down),
            _ => Err(perr(line, format!("bad orientation {:?}", c))),
        })
        .collect::<Result<Vec<_>, _>>()
        .map(BoundaryObject)
}

/// Parses the slice format and validates the result.
pub fn deserialize(text: &str) -> Result<SliceDiagram, DiagramError> {
    let lines: Vec<&str> = text.strip_suffix('\n').unwrap_or(text).split('\n').collect();
    if lines.len() < 2 {
        return Err(perr(lines.len(), "expected source and target lines"));
    }
    let header = |l: &str, key: &str, n: usize| -> Result<BoundaryObject, DiagramError> {
        let rest = l.strip_prefix(key).ok_or_else(|| perr(n, format!("expected '{}'", key.trim_end())))?;
        parse_object(rest, n)
    };
    let source = header(lines[0], "source: ", 1)?;
    let last = lines.len();
    let target = header(lines[last - 1], "target: ", last)?;
    let mut slices = Vec::new();
    for (i, l) in lines[1..last - 1].iter().enumerate() {
        let n = i + 2;
        let parts: Vec<&str> = l.split(' ').collect();
        if parts.len() != 3 || parts[0] != "slice" {
            return Err(perr(n, "expected 'slice <position> <generator>'"));
        }
        let position: usize = parts[1].parse().map_err(|_| perr(n, format!("bad position {:?}", parts[1])))?;
        if parts[1] != position.to_string() {
            return Err(perr(n, format!("non-canonical position {:?}", parts[1])));
        }
        let generator = Generator::from_name(parts[2]).ok_or_else(|| perr(n, format!("unknown generator {:?}", parts[2])))?;
        slices.push(Slice::new(position, generator));
    }
    let d = SliceDiagram::new(source, slices, target);
    d.validate()?;
    Ok(d)
}

/// Accepts either the slice format or a single `braid <n>: <letters>` line.
pub fn parse_input(text: &str) -> Result<SliceDiagram, DiagramError> {
    let t = text.trim();
    if let Some(rest) = t.strip_prefix("braid") {
        let (n, letters) = rest.split_once(':').ok_or_else(|| perr(1, "expected 'braid <n>: <letters>'"))?;
        let n: usize = n.trim().parse().map_err(|_| perr(1, "bad strand count"))?;
        return Ok(braid_closure(&parse_braid(letters, n)?));
    }
    deserialize(text)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknot_roundtrip() {
        let text = "source: -\nslice 0 cup-\nslice 0 cap-\ntarget: -\n";
        let d = deserialize(text).unwrap();
        assert_eq!(serialize(&d), text);
    }

    #[test]
    fn malformed_lines() {
        assert!(matches!(deserialize("source: -\nslice 0 cupp\ntarget: -\n"), Err(DiagramError::Parse { line: 2, .. })));
        assert!(matches!(deserialize("source: x\ntarget: -\n"), Err(DiagramError::Parse { line: 1, .. })));
        assert!(matches!(deserialize("source: -\nslice 0 cup-\ntarget: -\n"), Err(DiagramError::Malformed { .. })));
    }

    #[test]
    fn braid_line() {
        let d = parse_input("braid 2: 1 1 1\n").unwrap();
        assert_eq!(d.crossing_count(), 3);
    }
}
