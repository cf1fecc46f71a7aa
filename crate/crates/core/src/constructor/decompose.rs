use std::collections::{BTreeSet, HashSet};

use crate::catalog::{f_n, g_n};
use crate::family::{check_family_membership, outer_cycle, peel};
use crate::planar::{canonical_code, op_equivalent, trace_faces, CanonicalCode, PlaneTriangulation, VertexId};
use crate::rewrite::{apply_a, edge_op_patterns, match_configuration, DerivationTrace, EdgeOp, Step};

use super::ConstructError;

fn normalize(f: [VertexId; 3]) -> [VertexId; 3] {
    let k = (0..3).min_by_key(|&k| f[k]).unwrap();
    [f[k], f[(k + 1) % 3], f[(k + 2) % 3]]
}

/// Undoes one edge operation at `site` by putting the configuration's faces
/// back in place of the replacement's. The configuration has chords the
/// replacement lacks, so this is not a replacement in the strict sense.
fn undo(t: &PlaneTriangulation, op: EdgeOp, site: usize) -> Option<PlaneTriangulation> {
    let (gamma, delta) = edge_op_patterns(op);
    let m = match_configuration(t, delta, site)?;
    let mut faces: BTreeSet<[VertexId; 3]> = trace_faces(t).faces.into_iter().map(normalize).collect();
    for f in &m.proper_faces {
        faces.remove(f);
    }
    for f in gamma.faces() {
        faces.insert(normalize(f.map(|v| m.image(v).expect("configuration vertices lie on the boundary"))));
    }
    let g = t.g();
    let outer = *faces.iter().find(|f| f.contains(&g))?;
    let k = outer.iter().position(|&x| x == g)?;
    let faces: Vec<[VertexId; 3]> = faces.into_iter().collect();
    let p = PlaneTriangulation::from_oriented_faces(g, [outer[k], outer[(k + 1) % 3], outer[(k + 2) % 3]], &faces).ok()?;
    if !check_family_membership(&p).member {
        return None;
    }
    // the operation's own preconditions must allow redoing it
    let redo = (0..outer_cycle(&p).len()).any(|s| Step::Edge(op, s).apply(&p).is_ok_and(|n| op_equivalent(&n, t)));
    redo.then_some(p)
}

/// Graphs one generating step before `t`, cheapest removals first.
fn parents(t: &PlaneTriangulation) -> Vec<(Step, PlaneTriangulation)> {
    let mut out = Vec::new();
    let m = outer_cycle(t).len();
    for op in [EdgeOp::B, EdgeOp::C] {
        for site in 0..m {
            if let Some(p) = undo(t, op, site) {
                out.push((Step::Edge(op, site), p));
            }
        }
    }
    if let Ok(p) = peel(t) {
        if op_equivalent(&apply_a(&p), t) {
            out.push((Step::A, p));
        }
    }
    for op in [EdgeOp::BBar, EdgeOp::CBar] {
        for site in 0..m {
            if let Some(p) = undo(t, op, site) {
                out.push((Step::Edge(op, site), p));
            }
        }
    }
    out
}

/// The starting graph `t` is op-equivalent to, if any.
fn starting_graph(t: &PlaneTriangulation) -> Option<(&'static str, u32)> {
    let n = t.vertex_count();
    if n == 4 && op_equivalent(t, &g_n(3)) {
        return Some(("G", 3));
    }
    (1..).map_while(|k| {
        let f = f_n(k);
        (f.vertex_count() <= n).then_some((k, f))
    })
    .find(|(_, f)| op_equivalent(f, t))
    .map(|(k, _)| ("F", k))
}

fn search(
    t: &PlaneTriangulation,
    dead: &mut HashSet<CanonicalCode>,
    chain: &mut Vec<(Step, PlaneTriangulation)>,
) -> Option<(&'static str, u32)> {
    if let Some(s) = starting_graph(t) {
        return Some(s);
    }
    let code = canonical_code(t);
    if dead.contains(&code) {
        return None;
    }
    for (step, p) in parents(t) {
        chain.push((step, t.clone()));
        if let Some(s) = search(&p, dead, chain) {
            return Some(s);
        }
        chain.pop();
    }
    dead.insert(code);
    None
}

/// A replayable trace from `G_3` or some `F_n` to a graph op-equivalent to
/// `t`, found by undoing operations and peeling layers.
pub fn decompose(t: &PlaneTriangulation) -> Result<DerivationTrace, ConstructError> {
    let class = check_family_membership(t);
    if !class.member {
        return Err(ConstructError::NotInFamily(class.violation.unwrap_or_default()));
    }
    let mut chain = Vec::new();
    let (name, k) = search(t, &mut HashSet::new(), &mut chain)
        .ok_or_else(|| ConstructError::Recognition("no generating sequence found".into()))?;
    // the chain holds each step with the graph it produced, newest first;
    // replay it forward on the built starting graph to fix the site numbers
    let mut cur = if name == "G" { g_n(k) } else { f_n(k) };
    let mut trace = DerivationTrace::new(name, Some(k));
    for (step, target) in chain.into_iter().rev() {
        let candidates: Vec<Step> = match step {
            Step::A => vec![Step::A],
            Step::Edge(op, _) => (0..outer_cycle(&cur).len()).map(|s| Step::Edge(op, s)).collect(),
        };
        let (s, next) = candidates
            .into_iter()
            .find_map(|s| s.apply(&cur).ok().filter(|n| op_equivalent(n, &target)).map(|n| (s, n)))
            .ok_or_else(|| ConstructError::Recognition(format!("cannot redo {step}")))?;
        trace = trace.then(s);
        cur = next;
    }
    Ok(trace)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::instantiate_base_graph;
    use crate::catalog::Catalog;
    use crate::fixtures::icosahedron;

    fn replays(t: &PlaneTriangulation) -> DerivationTrace {
        let tr = decompose(t).unwrap();
        let back = tr
            .replay(|n, p| instantiate_base_graph(&Catalog::default(), n, p).ok().map(|e| e.graph))
            .unwrap();
        assert!(op_equivalent(&back, t), "{tr}");
        tr
    }

    #[test]
    fn g4_is_one_b_step_from_g3() {
        let tr = replays(&g_n(4));
        assert_eq!(tr.start, "G");
        assert_eq!(tr.param, Some(3));
        assert_eq!(tr.steps.len(), 1);
        assert!(matches!(tr.steps[0], Step::Edge(EdgeOp::B, _)));
    }

    #[test]
    fn f1_starts_from_itself() {
        let tr = replays(&f_n(1));
        assert_eq!((tr.start.as_str(), tr.param), ("F", Some(1)));
        assert!(tr.steps.is_empty());
    }

    #[test]
    fn icosahedron_replays() {
        replays(&icosahedron());
    }

    #[test]
    fn layered_graphs_replay() {
        replays(&apply_a(&apply_a(&g_n(5))));
        replays(&apply_a(&f_n(3)));
    }
}
