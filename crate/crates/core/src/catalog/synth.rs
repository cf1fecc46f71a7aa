//! Reconstruction of the replacement families from their zero members.
//!
//! A family member `j ≥ 1` is the zero configuration after local generating
//! moves around its apex (`C` and `B` on the first layer, `C̄` and `B̄` one
//! layer down), with a marked set found by exhaustive search under the
//! replacement rules: boundary marks kept, faces dominated, a forest whose
//! components meet the boundary in the same groups, and the `(-)` implication
//! on the first layer.

use std::collections::BTreeSet;

use crate::planar::VertexId;
use crate::rewrite::{edge_op_patterns, EdgeOp, Pattern, Region};

use super::local::*;

/// The vertex after the path end sees `path[len-2]` two steps back.
fn tail_kept(zero: &Pattern, p: &Pattern) -> bool {
    let a = outer_path(zero.faces(), zero.d());
    let b = outer_path(p.faces(), p.d());
    !zero.marked().contains(&a[a.len() - 2]) || p.marked().contains(&b[b.len() - 2])
}

/// Which local moves grow the family.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Moves {
    /// `C` with the given apex and `B` between new vertices.
    Outer,
    /// `C̄` with the given apex and `B̄` under new vertices.
    Lifted,
}

/// What a member's marked set must satisfy besides domination.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum MarkRule {
    /// Same count of components as the zero member, each meeting the
    /// boundary, and the `(-)` implication on the first layer.
    Replacement,
    /// The marked set induces a tree.
    Tree,
    /// The marked set induces two disjoint paths.
    TwoPaths,
}

#[derive(Clone, Debug)]
pub(crate) struct FamilySpec {
    pub family: &'static str,
    pub zero: Pattern,
    pub apex: Vec<VertexId>,
    pub moves: Moves,
    /// Largest degree increase of the apex.
    pub max_gain: usize,
    /// Number of members after the zero one.
    pub n: usize,
    /// Marked sub-configurations every member must contain.
    pub contains: Vec<Pattern>,
    /// Whether members must join marked boundary vertices in the same groups
    /// as the zero member.
    pub keep_groups: bool,
    /// Members exempt from `keep_groups`.
    pub regroup: Vec<usize>,
    pub rule: MarkRule,
}

fn caps_hold(s: &Shape) -> bool {
    s.free.iter().all(|&v| {
        let n = neighbours(&s.faces, v);
        n.len() <= if n.contains(&0) { 5 } else { 6 }
    })
}

fn successors(spec: &FamilySpec, s: &Shape, gain: usize) -> Vec<(Shape, usize)> {
    let path = outer_path(&s.faces, 0);
    let mut out = Vec::new();
    let (grow, fill) = match spec.moves {
        Moves::Outer => (edge_op_patterns(EdgeOp::C), edge_op_patterns(EdgeOp::B)),
        Moves::Lifted => (edge_op_patterns(EdgeOp::CBar), edge_op_patterns(EdgeOp::BBar)),
    };
    // local names shared by the operation patterns
    const Y1: VertexId = 3;
    const Y2: VertexId = 4;
    const V: VertexId = 5;
    for w in path.windows(2) {
        let b = w[1];
        if gain < spec.max_gain {
            if let Some((n, phi)) = rewrite(s, &grow.0, &grow.1, b) {
                let apex = match spec.moves {
                    Moves::Outer => phi[&Y1],
                    Moves::Lifted => phi[&V],
                };
                if spec.apex.contains(&apex) && caps_hold(&n) {
                    out.push((n, gain + 1));
                }
            }
        }
        if let Some((n, phi)) = rewrite(s, &fill.0, &fill.1, b) {
            let new_only = match spec.moves {
                Moves::Outer => s.free.contains(&w[0]) && s.free.contains(&b),
                Moves::Lifted => s.free.contains(&phi[&Y1]) && s.free.contains(&phi[&Y2]),
            };
            let low = match spec.moves {
                Moves::Outer => [w[0], b].iter().all(|&v| neighbours(&s.faces, v).len() <= 4),
                Moves::Lifted => [phi[&Y1], phi[&Y2]].iter().all(|&v| neighbours(&s.faces, v).len() <= 5),
            };
            if new_only && low && caps_hold(&n) {
                out.push((n, gain));
            }
        }
    }
    out
}

fn unmarked(spec: &FamilySpec, s: &Shape) -> Pattern {
    Pattern::new(spec.family, s.faces.clone(), 0, [], spec.zero.region()).expect("moves keep a disk")
}

/// Every shape reachable from the zero member, without repeats, in order of
/// apex gain, size and discovery.
fn shapes(spec: &FamilySpec) -> Vec<(usize, Pattern)> {
    let zero = Shape {
        faces: spec.zero.faces().to_vec(),
        next: spec.zero.vertices().last().unwrap() + 1,
        created: BTreeSet::new(),
        free: spec.zero.interior(),
    };
    let mut found: Vec<(usize, Pattern)> = vec![(0, spec.zero.with_marked([]))];
    let mut frontier = vec![(zero, 0)];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for (s, g) in &frontier {
            for (n, gain) in successors(spec, s, *g) {
                let p = unmarked(spec, &n);
                if found.iter().all(|(_, q)| !q.same_as(&p)) {
                    found.push((gain, p));
                    next.push((n, gain));
                }
            }
        }
        frontier = next;
    }
    let mut keyed: Vec<(usize, usize, usize, Pattern)> =
        found.into_iter().enumerate().map(|(i, (g, p))| (g, p.vertices().len(), i, p)).collect();
    keyed.sort_by_key(|(g, n, i, _)| (*g, *n, *i));
    keyed.into_iter().map(|(g, _, _, p)| (g, p)).collect()
}

fn marks_ok(spec: &FamilySpec, j: usize, p: &Pattern) -> bool {
    let zero = &spec.zero;
    if !p.marked_dominates() || p.marked().contains(&p.d()) || !is_forest(p) {
        return false;
    }
    match spec.rule {
        MarkRule::Tree => return p.marked_components().len() == 1,
        MarkRule::TwoPaths => return is_paths(p, 2),
        MarkRule::Replacement => {}
    }
    if p.marked().len() - p.marked_edges() != zero.marked().len() - zero.marked_edges() {
        return false;
    }
    let sigma: BTreeSet<_> = p.sigma().iter().copied().collect();
    if p.marked_components().iter().any(|c| c.is_disjoint(&sigma)) {
        return false;
    }
    if spec.keep_groups && !spec.regroup.contains(&j) && boundary_groups(p) != boundary_groups(zero) {
        return false;
    }
    if !minus_violations(p, before_is_marked(zero)).is_empty() || !tail_kept(zero, p) {
        return false;
    }
    spec.contains.iter().all(|sub| contains_configuration(p, sub))
}

/// Least marked set, by size and then lexicographically, that works for `p`.
fn find_marks(spec: &FamilySpec, j: usize, p: &Pattern) -> Option<Pattern> {
    let phi = p.sigma_compatible(&spec.zero.with_marked([]))?;
    let fixed: Vec<VertexId> =
        phi.iter().filter(|(_, z)| spec.zero.marked().contains(z)).map(|(v, _)| *v).collect();
    let free: Vec<VertexId> = p.interior().into_iter().collect();
    assert!(free.len() < 20, "interior too large for the mark search");
    let mut subsets: Vec<u32> = (0..1u32 << free.len()).collect();
    subsets.sort_by_key(|m| {
        let picked: Vec<VertexId> = (0..free.len()).filter(|i| m >> i & 1 == 1).map(|i| free[i]).collect();
        (picked.len(), picked)
    });
    subsets.into_iter().find_map(|m| {
        let d = fixed.iter().copied().chain((0..free.len()).filter(|i| m >> i & 1 == 1).map(|i| free[i]));
        let q = p.with_marked(d);
        marks_ok(spec, j, &q).then_some(q)
    })
}

/// Members `0..=n` of a family: shapes with a valid marked set, in order.
pub(crate) fn synthesize(spec: &FamilySpec) -> Vec<Pattern> {
    let mut all = shapes(spec).into_iter();
    let mut out = Vec::new();
    if marks_ok(spec, 0, &spec.zero) {
        out.push(spec.zero.clone());
        all.next();
    }
    for (_, p) in all {
        if out.len() > spec.n {
            break;
        }
        if let Some(q) = find_marks(spec, out.len(), &p) {
            out.push(q);
        }
    }
    out
}

/// Shapes and whether each admits marks, for inspection.
#[cfg(test)]
pub(crate) fn survey(spec: &FamilySpec) -> Vec<(usize, usize, bool)> {
    shapes(spec)
        .into_iter()
        .enumerate()
        .map(|(i, (g, p))| (g, p.vertices().len(), find_marks(spec, i, &p).is_some()))
        .collect()
}

pub(crate) fn pattern(name: &str, faces: Vec<Face>, marked: &[VertexId]) -> Pattern {
    Pattern::new(name, faces, 0, marked.iter().copied(), Region::Unbounded).expect("zero member")
}
