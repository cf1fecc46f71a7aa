use std::collections::BTreeSet;

use crate::family::{bfs_levels, outer_cycle};
use crate::planar::{op_isomorphism, PlaneTriangulation, VertexId};
use crate::rewrite::apply_a;
use crate::verifier::{verify_hamiltonian_set, Flavor};

use super::{ConstructError, SiteClassification};

/// `A²(G)` with the three rings named: `v` is `c(G)`, `y` the middle ring
/// and `x` the new outer cycle, so that `v_i y_i y_{i+1}` and
/// `y_i x_i x_{i+1}` are faces.
#[derive(Clone, Debug)]
pub struct DoubleLayer {
    pub graph: PlaneTriangulation,
    pub v: Vec<VertexId>,
    pub y: Vec<VertexId>,
    pub x: Vec<VertexId>,
}

/// The vertex of `level` adjacent to both `a` and `b`.
fn common(t: &PlaneTriangulation, levels: &crate::family::LevelStructure, level: usize, a: VertexId, b: VertexId) -> VertexId {
    t.rotation(a)
        .unwrap()
        .into_iter()
        .find(|&w| levels.level(w) == Some(level) && t.are_adjacent(w, b))
        .expect("A adds a vertex over every edge of the outer cycle")
}

pub fn double_layer(g: &PlaneTriangulation) -> DoubleLayer {
    let graph = apply_a(&apply_a(g));
    let levels = bfs_levels(&graph);
    let v = outer_cycle(g);
    let m = v.len();
    let y: Vec<VertexId> = (0..m).map(|i| common(&graph, &levels, 2, v[(i + m - 1) % m], v[i])).collect();
    let x: Vec<VertexId> = (0..m).map(|i| common(&graph, &levels, 1, y[(i + m - 1) % m], y[i])).collect();
    DoubleLayer { graph, v, y, x }
}

/// `N_1 … N_4` over positions of `c(G)`.
pub fn n_sets(v: &[VertexId], u: &BTreeSet<VertexId>) -> [Vec<usize>; 4] {
    let m = v.len();
    let has = |i: usize| u.contains(&v[i % m]);
    let mut n: [Vec<usize>; 4] = Default::default();
    for i in 0..m {
        if has(i) {
            n[if has(i + 1) { 1 } else { 0 }].push(i);
        } else {
            n[if has(i + 2) { 2 } else { 3 }].push(i);
        }
    }
    n
}

/// `W = U ∪ {y_{i+1} : i ∈ N_1} ∪ {x_{i+1} : i ∉ N_1}`.
pub fn lifted_set(d: &DoubleLayer, u: &BTreeSet<VertexId>, n1: &[usize]) -> BTreeSet<VertexId> {
    let m = d.v.len();
    let mut w = u.clone();
    for i in 0..m {
        w.insert(if n1.contains(&i) { d.y[(i + 1) % m] } else { d.x[(i + 1) % m] });
    }
    w
}

#[derive(Clone, Debug)]
pub struct Lift {
    pub double: DoubleLayer,
    pub w: BTreeSet<VertexId>,
    pub sites: SiteClassification,
    /// `W` carried over to `target`, when `target` is `A²(G)` itself.
    pub image: Option<BTreeSet<VertexId>>,
}

/// Builds `A²(G)` and `W` from a hamiltonian set `u` of `g` and checks that
/// `W` is hamiltonian and `(-)`compatible there. When `target` is
/// op-equivalent to `A²(G)` the set is mapped onto it.
pub fn lift_level2(
    g: &PlaneTriangulation,
    u: &BTreeSet<VertexId>,
    target: &PlaneTriangulation,
) -> Result<Lift, ConstructError> {
    let double = double_layer(g);
    let n = n_sets(&double.v, u);
    if n[0].is_empty() {
        return Err(ConstructError::Recognition("N_1 is empty; the set does not induce a tree".into()));
    }
    let w = lifted_set(&double, u, &n[0]);
    let report = verify_hamiltonian_set(&double.graph, &w);
    if !report.satisfies(Flavor::Minus) {
        return Err(ConstructError::Recognition(format!("lifted set fails: {}", report.to_key_values())));
    }
    let image = op_isomorphism(&double.graph, target).map(|f| w.iter().map(|v| f[v]).collect());
    let sites = SiteClassification { n_sets: n, ..Default::default() };
    Ok(Lift { double, w, sites, image })
}
