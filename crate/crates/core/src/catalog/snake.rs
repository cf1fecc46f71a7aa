//! Snake paths of `G_n` and the configurations they mark in `A(G_n)`.

use std::collections::BTreeSet;

use crate::family::outer_cycle;
use crate::planar::{trace_faces, PlaneTriangulation, VertexId};
use crate::rewrite::apply_a;

use super::base::g_n;

/// An induced path of `G_n - g` whose complement on `c(G_n)` is a union of
/// disjoint edges.
pub fn is_snake_path(t: &PlaneTriangulation, path: &[VertexId]) -> bool {
    if path.is_empty() || path.contains(&t.g()) {
        return false;
    }
    let on: BTreeSet<_> = path.iter().copied().collect();
    if on.len() != path.len() {
        return false;
    }
    let induced = t.edges().into_iter().filter(|(a, b)| on.contains(a) && on.contains(b)).count();
    if induced + 1 != path.len() || !path.windows(2).all(|w| t.are_adjacent(w[0], w[1])) {
        return false;
    }
    let c = outer_cycle(t);
    let m = c.len();
    let Some(s) = (0..m).find(|&i| on.contains(&c[i])) else { return false };
    // runs of the cycle outside the path must have length exactly 2
    let mut run = 0;
    for k in 1..=m {
        if on.contains(&c[(s + k) % m]) {
            if run != 0 && run != 2 {
                return false;
            }
            run = 0;
        } else {
            run += 1;
        }
    }
    true
}

/// Every snake path of `t`, each listed once from its smaller end.
pub fn snake_paths(t: &PlaneTriangulation) -> Vec<Vec<VertexId>> {
    let vs: Vec<VertexId> = t.vertices().iter().copied().filter(|&v| v != t.g()).collect();
    let mut out = Vec::new();
    let mut stack: Vec<Vec<VertexId>> = vs.iter().map(|&v| vec![v]).collect();
    while let Some(p) = stack.pop() {
        if p.first() <= p.last() && is_snake_path(t, &p) {
            out.push(p.clone());
        }
        let last = *p.last().unwrap();
        for w in t.rotation(last).unwrap() {
            if w == t.g() || p.contains(&w) {
                continue;
            }
            // induced: w may touch only the last vertex
            if p[..p.len() - 1].iter().any(|&x| t.are_adjacent(x, w)) {
                continue;
            }
            let mut q = p.clone();
            q.push(w);
            stack.push(q);
        }
    }
    out.sort();
    out
}

/// The two distinguished edges `u_i v_i` of `G_n - g`: `u_i` an ear tip and
/// `v_i` its neighbour of degree 3 in `G_n - g`. The first is the one at the
/// lower identifier.
pub fn distinguished_edges(t: &PlaneTriangulation) -> Vec<(VertexId, VertexId)> {
    let inner = |v: VertexId| t.degree(v).unwrap() - 1;
    let mut out: Vec<(VertexId, VertexId)> = outer_cycle(t)
        .into_iter()
        .filter(|&u| inner(u) == 2)
        .filter_map(|u| {
            t.rotation(u).unwrap().into_iter().find(|&v| v != t.g() && inner(v) == 3).map(|v| (u, v))
        })
        .collect();
    out.sort();
    out
}

/// `α(W)` at the edge `u v`.
pub fn alpha(path: &[VertexId], (u, v): (VertexId, VertexId)) -> u32 {
    match (path.contains(&u), path.contains(&v)) {
        (false, false) => 1,
        (false, true) => 2,
        (true, false) => 3,
        (true, true) => 4,
    }
}

/// Faces of the least configuration of `A(G_n)` containing `u`, `v` and the
/// outer vertex `t` adjacent to both, with `W` (neighbours of the path)
/// restricted to it. Returns `(faces, marked, t)`.
pub fn snake_configuration(
    n: u32,
    path: &[VertexId],
    (u, v): (VertexId, VertexId),
) -> (Vec<[VertexId; 3]>, BTreeSet<VertexId>, VertexId) {
    let a = apply_a(&g_n(n));
    let outer: BTreeSet<_> = outer_cycle(&a).into_iter().collect();
    let t = *outer.iter().find(|&&x| a.are_adjacent(x, u) && a.are_adjacent(x, v)).expect("A(G_n) covers every edge");
    let faces: Vec<[VertexId; 3]> =
        trace_faces(&a).faces.into_iter().filter(|f| f.contains(&u) || f.contains(&v) || f.contains(&t)).collect();
    let on: BTreeSet<_> = path.iter().copied().collect();
    let w: BTreeSet<VertexId> = a
        .vertices()
        .iter()
        .copied()
        .filter(|&x| !on.contains(&x) && a.rotation(x).unwrap().iter().any(|y| on.contains(y)))
        .collect();
    let verts: BTreeSet<VertexId> = faces.iter().flatten().copied().collect();
    (faces, w.intersection(&verts).copied().collect(), t)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn snake_paths_exist_from_five() {
        for n in 5..=12 {
            let t = g_n(n);
            assert!(!snake_paths(&t).is_empty(), "G_{n}");
            assert_eq!(distinguished_edges(&t).len(), 2);
        }
    }

    #[test]
    fn every_alpha_occurs_on_the_first_edge() {
        let mut seen = BTreeSet::new();
        for n in 6..=9 {
            let t = g_n(n);
            let e = distinguished_edges(&t)[0];
            for p in snake_paths(&t) {
                seen.insert(alpha(&p, e));
            }
        }
        assert_eq!(seen, BTreeSet::from([1, 2, 3, 4]));
    }
}
