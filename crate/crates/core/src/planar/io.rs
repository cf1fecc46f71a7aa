use std::fmt::Write as _;

use super::{GraphError, PlaneTriangulation, VertexId};

const HEADER: &str = "triangulation v1";

fn syntax(line: usize, col: usize, msg: impl Into<String>) -> GraphError {
    GraphError::Syntax { line, col, msg: msg.into() }
}

/// Splits a line into whitespace-separated tokens with 1-based columns.
fn tokens(s: &str) -> impl Iterator<Item = (usize, &str)> {
    let base = s.as_ptr() as usize;
    s.split_whitespace().map(move |t| (t.as_ptr() as usize - base + 1, t))
}

fn number(line: usize, col: usize, tok: &str) -> Result<VertexId, GraphError> {
    tok.parse::<VertexId>()
        .map_err(|_| syntax(line, col, format!("expected a vertex id, found `{tok}`")))
}

/// Parses the line-oriented graph format.
///
/// ```text
/// triangulation v1
/// g=1
/// outer=1 2 3
/// 1: 2 4 3
/// ...
/// ```
pub fn parse_triangulation(text: &str) -> Result<PlaneTriangulation, GraphError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("")))
        .filter(|(_, l)| !l.trim().is_empty());

    let (ln, l) = lines.next().ok_or_else(|| syntax(1, 1, "empty input"))?;
    if l.trim() != HEADER {
        return Err(syntax(ln, 1, format!("expected `{HEADER}`")));
    }

    let (ln, l) = lines.next().ok_or_else(|| syntax(ln + 1, 1, "missing `g=` line"))?;
    let g = {
        let t = l.trim_start();
        let col = l.len() - t.len() + 1;
        let rest = t
            .strip_prefix("g=")
            .ok_or_else(|| syntax(ln, col, "expected `g=<id>`"))?;
        number(ln, col + 2, rest.trim())?
    };

    let (ln, l) = lines.next().ok_or_else(|| syntax(ln + 1, 1, "missing `outer=` line"))?;
    let outer = {
        let t = l.trim_start();
        let col = l.len() - t.len() + 1;
        let rest = t
            .strip_prefix("outer=")
            .ok_or_else(|| syntax(ln, col, "expected `outer=<a> <b> <c>`"))?;
        let off = col + 6;
        let ids = tokens(rest)
            .map(|(c, tok)| number(ln, off + c - 1, tok))
            .collect::<Result<Vec<_>, _>>()?;
        <[VertexId; 3]>::try_from(ids)
            .map_err(|_| syntax(ln, off, "outer face needs exactly three vertices"))?
    };

    let mut rotations = Vec::new();
    for (ln, l) in lines {
        let colon = l
            .find(':')
            .ok_or_else(|| syntax(ln, 1, "expected `<id>: <neighbors>`"))?;
        let head = &l[..colon];
        let hcol = head.len() - head.trim_start().len() + 1;
        let v = number(ln, hcol, head.trim())?;
        let off = colon + 2;
        let nbrs = tokens(&l[colon + 1..])
            .map(|(c, tok)| number(ln, off + c - 1, tok))
            .collect::<Result<Vec<_>, _>>()?;
        rotations.push((v, nbrs));
    }
    PlaneTriangulation::from_rotations(g, outer, &rotations)
}

/// Serializes a triangulation; vertices in ascending order.
pub fn write_triangulation(t: &PlaneTriangulation) -> String {
    let mut s = String::new();
    let [a, b, c] = t.outer_face();
    writeln!(s, "{HEADER}").unwrap();
    writeln!(s, "g={}", t.g()).unwrap();
    writeln!(s, "outer={a} {b} {c}").unwrap();
    for &v in t.vertices() {
        write!(s, "{v}:").unwrap();
        for u in t.rotation(v).unwrap() {
            write!(s, " {u}").unwrap();
        }
        s.push('\n');
    }
    s
}
