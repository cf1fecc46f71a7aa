//! Hamiltonian cycles of the dual cubic graph from hamiltonian sets.
//!
//! The edges with exactly one end in `U` cut every triangle twice, so their
//! duals form a 2-regular spanning subgraph. It is a single cycle exactly
//! when both `U` and its complement induce trees; that is checked, not
//! assumed.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt::Write as _;

use thiserror::Error;

use crate::planar::{dual_graph, trace_faces, CubicPlaneGraph, PlaneTriangulation, VertexId};
use crate::verifier::verify_hamiltonian_set;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DualizeError {
    #[error("not a hamiltonian set: {0}")]
    NotHamiltonian(String),
    #[error("complement induces {components} components with {edges} edges on {vertices} vertices")]
    ComplementNotTree { vertices: usize, edges: usize, components: usize },
    #[error("{0} cut edges, expected {1}")]
    CutSize(usize, usize),
    #[error("face {face} meets {count} cut edges")]
    FaceCut { face: usize, count: usize },
    #[error("dual walk closed after {0} of {1} faces")]
    ShortCycle(usize, usize),
    #[error("the cubic graph is not 3-connected")]
    NotThreeConnected,
    #[error("no face {0}")]
    UnknownFace(usize),
}

/// A Hamiltonian cycle of the dual of `G`: dual vertices are faces of `G`
/// in [`trace_faces`] order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleWitness {
    pub cycle: Vec<usize>,
    /// `cut_edges[i]` is crossed between `cycle[i]` and `cycle[i + 1]`,
    /// written with its `U` end first.
    pub cut_edges: Vec<(VertexId, VertexId)>,
}

impl CycleWitness {
    pub fn len(&self) -> usize {
        self.cycle.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycle.is_empty()
    }

    pub fn to_text(&self) -> String {
        let ids: Vec<String> = self.cycle.iter().map(ToString::to_string).collect();
        format!("cycle={}\n", ids.join(" "))
    }
}

/// Components and edge count of the subgraph induced by `side`.
fn induced_shape(t: &PlaneTriangulation, side: &BTreeSet<VertexId>) -> (usize, usize) {
    let edges = t.edges().into_iter().filter(|(a, b)| side.contains(a) && side.contains(b)).count();
    let mut seen = BTreeSet::new();
    let mut components = 0;
    for &s in side {
        if !seen.insert(s) {
            continue;
        }
        components += 1;
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for w in t.rotation(v).unwrap() {
                if side.contains(&w) && seen.insert(w) {
                    queue.push_back(w);
                }
            }
        }
    }
    (components, edges)
}

/// The dual Hamiltonian cycle cut out by `u`. In face order `(a, b, c)` the
/// cycle leaves each face through the edge `ab` with `a ∈ U`, `b ∉ U`, so
/// `U` lies on its left throughout.
pub fn tree_to_dual_cycle(t: &PlaneTriangulation, u: &BTreeSet<VertexId>) -> Result<CycleWitness, DualizeError> {
    let report = verify_hamiltonian_set(t, u);
    if !report.is_hamiltonian {
        return Err(DualizeError::NotHamiltonian(report.to_key_values()));
    }
    let rest: BTreeSet<VertexId> = t.vertices().iter().copied().filter(|v| !u.contains(v)).collect();
    let (components, edges) = induced_shape(t, &rest);
    if components != 1 || edges + 1 != rest.len() {
        return Err(DualizeError::ComplementNotTree { vertices: rest.len(), edges, components });
    }
    let n = t.vertex_count();
    let cut = t.edges().into_iter().filter(|(a, b)| u.contains(a) != u.contains(b)).count();
    if cut != 2 * n - 4 {
        return Err(DualizeError::CutSize(cut, 2 * n - 4));
    }

    let fs = trace_faces(t);
    let across = fs.dart_index();
    let mut exit = Vec::with_capacity(fs.len());
    for (i, f) in fs.faces.iter().enumerate() {
        let darts = [(f[0], f[1]), (f[1], f[2]), (f[2], f[0])];
        let crossing: Vec<(VertexId, VertexId)> =
            darts.iter().copied().filter(|(a, b)| u.contains(a) != u.contains(b)).collect();
        if crossing.len() != 2 {
            return Err(DualizeError::FaceCut { face: i, count: crossing.len() });
        }
        exit.push(crossing.into_iter().find(|(a, _)| u.contains(a)).unwrap());
    }

    let mut cycle = vec![0];
    let mut cut_edges = Vec::new();
    let mut f = 0;
    loop {
        let (a, b) = exit[f];
        cut_edges.push((a, b));
        f = across[&(b, a)];
        if f == 0 {
            break;
        }
        cycle.push(f);
        if cycle.len() > fs.len() {
            break;
        }
    }
    if cycle.len() != fs.len() {
        return Err(DualizeError::ShortCycle(cycle.len(), fs.len()));
    }
    Ok(CycleWitness { cycle, cut_edges })
}

/// Whether `cycle` visits every vertex of `d` once along edges of `d`.
pub fn is_hamiltonian_cycle(d: &CubicPlaneGraph, cycle: &[usize]) -> bool {
    let n = d.vertex_count();
    let distinct: BTreeSet<usize> = cycle.iter().copied().collect();
    cycle.len() == n
        && distinct.len() == n
        && distinct.iter().all(|&v| v < n)
        && (0..n).all(|i| d.are_adjacent(cycle[i], cycle[(i + 1) % n]))
}

/// The face-size condition: faces sharing an edge with `g_face` have at most
/// 5 edges, every other face except `g_face` at most 6.
pub fn check_barnette_class(d: &CubicPlaneGraph, g_face: usize) -> Result<bool, DualizeError> {
    if !d.is_three_connected() {
        return Err(DualizeError::NotThreeConnected);
    }
    let faces = d.faces();
    let g = faces.get(g_face).ok_or(DualizeError::UnknownFace(g_face))?;
    let darts = |f: &Vec<usize>| -> Vec<(usize, usize)> { (0..f.len()).map(|k| (f[k], f[(k + 1) % f.len()])).collect() };
    let g_darts: BTreeSet<(usize, usize)> = darts(g).into_iter().collect();
    Ok(faces.iter().enumerate().filter(|&(i, _)| i != g_face).all(|(_, f)| {
        let touches = darts(f).iter().any(|&(a, b)| g_darts.contains(&(b, a)));
        f.len() <= if touches { 5 } else { 6 }
    }))
}

/// Dual drawing with the cycle's edges bold.
pub fn cycle_to_dot(d: &CubicPlaneGraph, w: &CycleWitness) -> String {
    let n = w.cycle.len();
    let on: BTreeSet<(usize, usize)> =
        (0..n).map(|i| (w.cycle[i].min(w.cycle[(i + 1) % n]), w.cycle[i].max(w.cycle[(i + 1) % n]))).collect();
    let mut s = String::from("graph dual {\n  node [shape=point];\n");
    for v in 0..d.vertex_count() {
        writeln!(s, "  {v};").unwrap();
    }
    for v in 0..d.vertex_count() {
        for u in d.neighbors(v).into_iter().filter(|&u| u > v) {
            if on.contains(&(v, u)) {
                writeln!(s, "  {v} -- {u} [penwidth=3, color=red];").unwrap();
            } else {
                writeln!(s, "  {v} -- {u} [style=dashed];").unwrap();
            }
        }
    }
    s.push_str("}\n");
    s
}

/// Sizes of the faces of `d`, counted.
pub fn face_profile(d: &CubicPlaneGraph) -> BTreeMap<usize, usize> {
    let mut m = BTreeMap::new();
    for s in d.face_sizes() {
        *m.entry(s).or_insert(0) += 1;
    }
    m
}

/// Dualizes and checks the result against the dual graph; the usual entry
/// point for callers that want both.
pub fn dual_witness(t: &PlaneTriangulation, u: &BTreeSet<VertexId>) -> Result<(CubicPlaneGraph, CycleWitness), DualizeError> {
    let w = tree_to_dual_cycle(t, u)?;
    let d = dual_graph(t);
    debug_assert!(is_hamiltonian_cycle(&d, &w.cycle));
    Ok((d, w))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructor::construct_hamiltonian_set;
    use crate::family::check_family_membership;
    use crate::fixtures::{faulkner_younger, grinberg_tutte, icosahedron, k4};
    use crate::verifier::Flavor;

    #[test]
    fn k4_gives_a_four_cycle() {
        let t = k4();
        let w = tree_to_dual_cycle(&t, &BTreeSet::from([2, 3])).unwrap();
        assert_eq!(w.len(), 4);
        assert!(is_hamiltonian_cycle(&dual_graph(&t), &w.cycle));
        for &(a, b) in &w.cut_edges {
            assert!([2, 3].contains(&a) && ![2, 3].contains(&b));
        }
    }

    #[test]
    fn rejects_non_trees() {
        let t = k4();
        assert!(matches!(tree_to_dual_cycle(&t, &BTreeSet::from([2, 3, 4])), Err(DualizeError::NotHamiltonian(_))));
    }

    #[test]
    fn icosahedron_gives_a_dodecahedron_cycle() {
        let t = icosahedron();
        let r = construct_hamiltonian_set(&t, Flavor::Compatible).unwrap();
        let (d, w) = dual_witness(&t, &r.set).unwrap();
        assert_eq!(w.len(), 20);
        assert!(is_hamiltonian_cycle(&d, &w.cycle));
        assert!(check_barnette_class(&d, d.face_of(t.g()).unwrap()).unwrap());
        for g in 0..d.faces().len() {
            assert!(check_barnette_class(&d, g).unwrap());
        }
    }

    #[test]
    fn every_small_hamiltonian_set_dualizes() {
        use crate::catalog::g_n;
        use crate::oracle::{enumerate_hamiltonian_sets, SearchConstraint};
        use crate::rewrite::{enumerate, DerivationTrace};
        for e in enumerate(vec![(DerivationTrace::new("G", Some(3)), g_n(3))], 10) {
            let t = e.graph;
            let d = dual_graph(&t);
            for u in enumerate_hamiltonian_sets(&t, SearchConstraint::all(Flavor::Any)).unwrap().sets {
                let w = tree_to_dual_cycle(&t, &u).unwrap();
                assert_eq!(w.len(), 2 * t.vertex_count() - 4);
                assert!(is_hamiltonian_cycle(&d, &w.cycle));
            }
        }
    }

    #[test]
    fn text_and_dot() {
        let t = k4();
        let (d, w) = dual_witness(&t, &BTreeSet::from([2, 3])).unwrap();
        assert!(w.to_text().starts_with("cycle=0 "));
        let dot = cycle_to_dot(&d, &w);
        assert_eq!(dot.matches("color=red").count(), 4);
        assert_eq!(dot.matches("dashed").count(), 2);
    }

    /// The faces of size `s` pairwise share no edge.
    fn apart(d: &CubicPlaneGraph, s: usize) -> bool {
        let edges = |f: &Vec<usize>| -> BTreeSet<(usize, usize)> {
            (0..f.len()).map(|k| (f[k].min(f[(k + 1) % f.len()]), f[k].max(f[(k + 1) % f.len()]))).collect()
        };
        let big: Vec<BTreeSet<(usize, usize)>> = d.faces().iter().filter(|f| f.len() == s).map(edges).collect();
        (0..big.len()).all(|i| (i + 1..big.len()).all(|j| big[i].is_disjoint(&big[j])))
    }

    #[test]
    fn grinberg_tutte_profile() {
        let d = grinberg_tutte();
        assert_eq!(d.vertex_count(), 44);
        assert!(d.is_three_connected());
        let p = face_profile(&d);
        assert_eq!(p.get(&8), Some(&3));
        assert!(apart(&d, 8));
        assert_eq!(p.keys().copied().collect::<BTreeSet<_>>(), BTreeSet::from([5, 6, 8]));
        for g in 0..d.faces().len() {
            assert!(!check_barnette_class(&d, g).unwrap());
            let t = d.dual_triangulation(g).unwrap();
            assert!(!check_family_membership(&t).member);
        }
    }

    #[test]
    fn faulkner_younger_profile() {
        let d = faulkner_younger();
        assert_eq!(d.vertex_count(), 42);
        assert!(d.is_three_connected());
        let p = face_profile(&d);
        assert_eq!(p.get(&11), Some(&2));
        assert!(apart(&d, 11));
        assert_eq!(p.keys().copied().collect::<BTreeSet<_>>(), BTreeSet::from([4, 5, 11]));
        for g in 0..d.faces().len() {
            assert!(!check_barnette_class(&d, g).unwrap());
            assert!(!check_family_membership(&d.dual_triangulation(g).unwrap()).member);
        }
    }
}
