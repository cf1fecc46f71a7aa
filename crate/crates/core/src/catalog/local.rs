//! Local surgery on bare face lists and the marked-set checks shared by the
//! family generator and the validators.

use std::collections::{BTreeMap, BTreeSet};

use crate::planar::VertexId;
use crate::rewrite::Pattern;

pub(crate) type Face = [VertexId; 3];

#[derive(Clone, Debug)]
pub(crate) struct Shape {
    pub faces: Vec<Face>,
    pub next: VertexId,
    pub created: BTreeSet<VertexId>,
    /// Vertices off the boundary.
    pub free: BTreeSet<VertexId>,
}

pub(crate) fn rotations(f: Face) -> [Face; 3] {
    [f, [f[1], f[2], f[0]], [f[2], f[0], f[1]]]
}

pub(crate) fn third(faces: &[Face], a: VertexId, b: VertexId) -> Option<VertexId> {
    faces.iter().flat_map(|&f| rotations(f)).find(|r| r[0] == a && r[1] == b).map(|r| r[2])
}

pub(crate) fn remove_face(faces: &mut Vec<Face>, f: Face) -> bool {
    let rs = rotations(f);
    match faces.iter().position(|x| rs.contains(x)) {
        Some(i) => {
            faces.swap_remove(i);
            true
        }
        None => false,
    }
}

pub(crate) fn neighbours(faces: &[Face], v: VertexId) -> BTreeSet<VertexId> {
    faces.iter().filter(|f| f.contains(&v)).flatten().copied().filter(|&u| u != v).collect()
}

/// Rewrites `gamma` into `delta` with `gamma`'s anchor on `0` and its second
/// boundary vertex on `b`. Returns the new shape and the embedding of `gamma`.
pub(crate) fn rewrite(
    s: &Shape,
    gamma: &Pattern,
    delta: &Pattern,
    b: VertexId,
) -> Option<(Shape, BTreeMap<VertexId, VertexId>)> {
    let sigma = gamma.sigma();
    let mut phi = BTreeMap::from([(sigma[0], 0), (sigma[1], b)]);
    let mut changed = true;
    while changed {
        changed = false;
        for &f in gamma.faces() {
            for [x, y, z] in rotations(f) {
                let (Some(&px), Some(&py)) = (phi.get(&x), phi.get(&y)) else { continue };
                let pz = third(&s.faces, px, py)?;
                match phi.get(&z) {
                    Some(&q) if q != pz => return None,
                    Some(_) => {}
                    None => {
                        phi.insert(z, pz);
                        changed = true;
                    }
                }
            }
        }
    }
    let image: BTreeSet<_> = phi.values().collect();
    if image.len() != phi.len() || phi.len() != gamma.vertices().len() {
        return None;
    }
    let mut out = s.clone();
    for &f in gamma.faces() {
        if !remove_face(&mut out.faces, f.map(|v| phi[&v])) {
            return None;
        }
    }
    let mut to = phi.clone();
    for v in delta.vertices() {
        if !to.contains_key(&v) {
            to.insert(v, out.next);
            out.created.insert(out.next);
            out.free.insert(out.next);
            out.next += 1;
        }
    }
    for &f in delta.faces() {
        out.faces.push(f.map(|v| to[&v]));
    }
    Some((out, phi))
}

/// First-layer vertices from the far end of the anchor's successor to its
/// predecessor, following faces `(a, b, d)`.
pub(crate) fn outer_path(faces: &[Face], d: VertexId) -> Vec<VertexId> {
    let mut succ = BTreeMap::new();
    for &f in faces {
        for [a, b, c] in rotations(f) {
            if c == d {
                succ.insert(a, b);
            }
        }
    }
    let targets: BTreeSet<_> = succ.values().copied().collect();
    let Some(&start) = succ.keys().find(|k| !targets.contains(k)) else { return Vec::new() };
    let mut path = vec![start];
    while let Some(&n) = succ.get(path.last().unwrap()) {
        path.push(n);
    }
    path
}

/// Groups of marked boundary vertices joined inside the pattern.
pub(crate) fn boundary_groups(p: &Pattern) -> BTreeSet<BTreeSet<VertexId>> {
    let sigma: BTreeSet<_> = p.sigma().iter().copied().collect();
    p.marked_components()
        .into_iter()
        .map(|c| c.intersection(&sigma).copied().collect::<BTreeSet<_>>())
        .filter(|c| !c.is_empty())
        .collect()
}

pub(crate) fn is_forest(p: &Pattern) -> bool {
    p.marked_edges() + p.marked_components().len() == p.marked().len()
}

/// Whether `sub` occurs in `p` with the anchor on the anchor and the same marks.
pub(crate) fn contains_configuration(p: &Pattern, sub: &Pattern) -> bool {
    let s = Shape { faces: p.faces().to_vec(), next: 0, created: BTreeSet::new(), free: BTreeSet::new() };
    neighbours(p.faces(), p.d()).into_iter().any(|b| {
        let Some((_, phi)) = rewrite(&s, sub, sub, b) else { return false };
        phi.iter().all(|(v, w)| sub.marked().contains(v) == p.marked().contains(w))
    })
}

/// Positions on the first layer where an unmarked vertex of degree at most 4
/// lacks a marked vertex two steps back. `known_before` says whether the
/// vertex just outside the path's start is marked.
pub(crate) fn minus_violations(p: &Pattern, known_before: bool) -> Vec<VertexId> {
    let path = outer_path(p.faces(), p.d());
    let interior = p.interior();
    let mut bad = Vec::new();
    for (i, &v) in path.iter().enumerate() {
        if !interior.contains(&v) || p.marked().contains(&v) || p.degree(v) > 4 {
            continue;
        }
        let ok = match i {
            0 => false,
            1 => known_before,
            _ => p.marked().contains(&path[i - 2]),
        };
        if !ok {
            bad.push(v);
        }
    }
    bad
}

/// Whether the vertex before the zero member's path is forced into the set
/// by the `(-)` implication.
pub(crate) fn before_is_marked(zero: &Pattern) -> bool {
    let path = outer_path(zero.faces(), zero.d());
    path.len() > 1 && !zero.marked().contains(&path[1]) && zero.interior().contains(&path[1]) && zero.degree(path[1]) <= 4
}

/// Whether the marked vertices induce disjoint paths, `k` of them.
pub(crate) fn is_paths(p: &Pattern, k: usize) -> bool {
    is_forest(p)
        && p.marked_components().len() == k
        && p.marked().iter().all(|&v| p.marked().iter().filter(|&&w| p.adjacent(v, w)).count() <= 2)
}

