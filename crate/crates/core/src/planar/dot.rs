use std::collections::BTreeSet;
use std::fmt::Write as _;

use super::{PlaneTriangulation, VertexId};

/// Graphviz rendering: `g` filled, vertices of `marked` double-circled,
/// outer face edges bold. Output is sorted by identifier.
pub fn to_dot(t: &PlaneTriangulation, marked: &[VertexId]) -> String {
    let marked: BTreeSet<VertexId> = marked.iter().copied().collect();
    let outer = t.outer_face();
    let mut s = String::from("graph triangulation {\n  node [shape=circle];\n");
    for &v in t.vertices() {
        let mut attrs = Vec::new();
        if v == t.g() {
            attrs.push("style=filled, fillcolor=gray");
        }
        if marked.contains(&v) {
            attrs.push("shape=doublecircle");
        }
        if attrs.is_empty() {
            writeln!(s, "  {v};").unwrap();
        } else {
            writeln!(s, "  {v} [{}];", attrs.join(", ")).unwrap();
        }
    }
    for (a, b) in t.edges() {
        let on_outer = outer.contains(&a) && outer.contains(&b);
        if on_outer {
            writeln!(s, "  {a} -- {b} [penwidth=2];").unwrap();
        } else {
            writeln!(s, "  {a} -- {b};").unwrap();
        }
    }
    s.push_str("}\n");
    s
}
