use std::collections::HashMap;

use super::faces::trace_faces;
use super::{GraphError, PlaneTriangulation, VertexId};

/// A 3-regular plane graph given by counterclockwise rotations.
///
/// When produced by [`dual_graph`], vertex `i` is the `i`-th face of the
/// triangulation's [`FaceSet`](super::FaceSet) and each face is labelled by
/// the primal vertex it surrounds.
#[derive(Clone, Debug)]
pub struct CubicPlaneGraph {
    rotation: Vec<[usize; 3]>,
    faces: Vec<Vec<usize>>,
    face_labels: Vec<VertexId>,
    primal_faces: Option<Vec<[VertexId; 3]>>,
}

impl CubicPlaneGraph {
    /// Builds a cubic plane graph from rotations; faces are labelled
    /// `1..=F` in trace order.
    pub fn from_rotations(rotation: Vec<[usize; 3]>) -> Result<Self, GraphError> {
        let n = rotation.len();
        for (v, r) in rotation.iter().enumerate() {
            for (k, &u) in r.iter().enumerate() {
                if u >= n {
                    return Err(GraphError::UnknownVertex(u as VertexId));
                }
                if u == v {
                    return Err(GraphError::Loop(v as VertexId));
                }
                if r[..k].contains(&u) {
                    return Err(GraphError::RepeatedNeighbor { v: v as VertexId, u: u as VertexId });
                }
                if !rotation[u].contains(&v) {
                    return Err(GraphError::AsymmetricAdjacency {
                        v: v as VertexId,
                        u: u as VertexId,
                    });
                }
            }
        }
        let faces = trace_cubic_faces(&rotation);
        let edges = 3 * n / 2;
        if n + faces.len() != edges + 2 {
            return Err(GraphError::Euler { vertices: n, edges, faces: faces.len() });
        }
        let face_labels = (1..=faces.len() as VertexId).collect();
        Ok(CubicPlaneGraph { rotation, faces, face_labels, primal_faces: None })
    }

    /// Straight-line drawing: rotations follow the angular order of the
    /// neighbours around each point.
    pub fn from_straight_line(
        points: &[(f64, f64)],
        edges: &[(usize, usize)],
    ) -> Result<Self, GraphError> {
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); points.len()];
        for &(a, b) in edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        let mut rotation = Vec::with_capacity(points.len());
        for (v, nb) in adj.iter_mut().enumerate() {
            let (x, y) = points[v];
            nb.sort_by(|&a, &b| {
                let ta = (points[a].1 - y).atan2(points[a].0 - x);
                let tb = (points[b].1 - y).atan2(points[b].0 - x);
                ta.total_cmp(&tb)
            });
            let r: [usize; 3] = nb.as_slice().try_into().map_err(|_| {
                GraphError::BadTriangles(format!("vertex {v} has degree {}", nb.len()))
            })?;
            rotation.push(r);
        }
        Self::from_rotations(rotation)
    }

    /// A drawing given as straight segments. Vertices are the segment
    /// endpoints; a segment passing through other vertices is split there.
    pub fn from_segments(segments: &[((f64, f64), (f64, f64))]) -> Result<Self, GraphError> {
        const EPS: f64 = 1e-6;
        let same = |p: (f64, f64), q: (f64, f64)| (p.0 - q.0).abs() < EPS && (p.1 - q.1).abs() < EPS;
        let mut points: Vec<(f64, f64)> = Vec::new();
        for &(a, b) in segments {
            for p in [a, b] {
                if !points.iter().any(|&q| same(p, q)) {
                    points.push(p);
                }
            }
        }
        let mut edges = Vec::new();
        for &(a, b) in segments {
            let (dx, dy) = (b.0 - a.0, b.1 - a.1);
            let len2 = dx * dx + dy * dy;
            let mut on: Vec<(f64, usize)> = points
                .iter()
                .enumerate()
                .filter(|(_, p)| (dx * (p.1 - a.1) - dy * (p.0 - a.0)).abs() < EPS * len2.sqrt())
                .map(|(i, p)| (((p.0 - a.0) * dx + (p.1 - a.1) * dy) / len2, i))
                .filter(|&(s, _)| (-EPS..=1.0 + EPS).contains(&s))
                .collect();
            on.sort_by(|x, y| x.0.total_cmp(&y.0));
            edges.extend(on.windows(2).map(|w| (w[0].1, w[1].1)));
        }
        Self::from_straight_line(&points, &edges)
    }

    pub fn vertex_count(&self) -> usize {
        self.rotation.len()
    }

    pub fn edge_count(&self) -> usize {
        3 * self.rotation.len() / 2
    }

    pub fn neighbors(&self, v: usize) -> [usize; 3] {
        self.rotation[v]
    }

    pub fn are_adjacent(&self, u: usize, v: usize) -> bool {
        self.rotation[u].contains(&v)
    }

    /// Faces as cyclic vertex sequences, traced with the same successor rule
    /// as triangulations.
    pub fn faces(&self) -> &[Vec<usize>] {
        &self.faces
    }

    pub fn face_labels(&self) -> &[VertexId] {
        &self.face_labels
    }

    /// Number of edges on each face, in face order.
    pub fn face_sizes(&self) -> Vec<usize> {
        self.faces.iter().map(Vec::len).collect()
    }

    /// Index of the face labelled `label`.
    pub fn face_of(&self, label: VertexId) -> Option<usize> {
        self.face_labels.iter().position(|&l| l == label)
    }

    /// For a dual graph: the primal triangle each vertex stands for.
    pub fn primal_faces(&self) -> Option<&[[VertexId; 3]]> {
        self.primal_faces.as_deref()
    }

    /// No two vertices separate the graph.
    pub fn is_three_connected(&self) -> bool {
        let n = self.rotation.len();
        if n < 4 {
            return false;
        }
        let mut mark = vec![usize::MAX; n];
        let mut stack = Vec::new();
        let mut stamp = 0;
        for a in 0..n {
            for b in a + 1..n {
                stamp += 1;
                mark[a] = stamp;
                mark[b] = stamp;
                let s = (0..n).find(|&v| v != a && v != b).unwrap();
                mark[s] = stamp;
                stack.push(s);
                let mut seen = 1;
                while let Some(v) = stack.pop() {
                    for &u in &self.rotation[v] {
                        if mark[u] != stamp {
                            mark[u] = stamp;
                            seen += 1;
                            stack.push(u);
                        }
                    }
                }
                if seen != n - 2 {
                    return false;
                }
            }
        }
        true
    }

    /// The triangulation whose vertices are the faces of this graph, with
    /// `g_face` as the distinguished vertex.
    pub fn dual_triangulation(&self, g_face: usize) -> Result<PlaneTriangulation, GraphError> {
        let lab = |f: usize| self.face_labels[f];
        // face index keyed by one of its darts (w, rotation successor)
        let mut dart_face: HashMap<(usize, usize), usize> = HashMap::new();
        for (i, f) in self.faces.iter().enumerate() {
            for k in 0..f.len() {
                dart_face.insert((f[k], f[(k + 1) % f.len()]), i);
            }
        }
        let mut triangles = Vec::with_capacity(self.rotation.len());
        let mut outer = None;
        for (w, r) in self.rotation.iter().enumerate() {
            // wedge between r[k] and r[k+1] holds the face through (r[k], w), (w, r[k+1])
            let f: Vec<usize> = (0..3).map(|k| dart_face[&(w, r[(k + 1) % 3])]).collect();
            let tri = [f[0], f[2], f[1]];
            if outer.is_none() {
                if let Some(k) = tri.iter().position(|&x| x == g_face) {
                    outer = Some([tri[k], tri[(k + 1) % 3], tri[(k + 2) % 3]].map(lab));
                }
            }
            triangles.push(tri.map(lab));
        }
        let outer = outer.ok_or(GraphError::UnknownVertex(g_face as VertexId))?;
        PlaneTriangulation::from_triangles(outer[0], outer, &triangles)
    }
}

fn trace_cubic_faces(rotation: &[[usize; 3]]) -> Vec<Vec<usize>> {
    let mut used = vec![[false; 3]; rotation.len()];
    let mut faces = Vec::new();
    for v in 0..rotation.len() {
        for k in 0..3 {
            if used[v][k] {
                continue;
            }
            let mut face = Vec::new();
            let (mut a, mut b) = (v, rotation[v][k]);
            loop {
                let p = rotation[a].iter().position(|&x| x == b).unwrap();
                if used[a][p] {
                    break;
                }
                used[a][p] = true;
                face.push(a);
                let q = rotation[b].iter().position(|&x| x == a).unwrap();
                let c = rotation[b][(q + 1) % 3];
                a = b;
                b = c;
            }
            faces.push(face);
        }
    }
    faces
}

/// The dual cubic plane graph: one vertex per face, in [`trace_faces`] order.
pub fn dual_graph(t: &PlaneTriangulation) -> CubicPlaneGraph {
    let fs = trace_faces(t);
    let across = fs.dart_index();
    let rotation: Vec<[usize; 3]> = fs
        .faces
        .iter()
        .map(|&[a, b, c]| [across[&(a, c)], across[&(c, b)], across[&(b, a)]])
        .collect();
    let faces = trace_cubic_faces(&rotation);
    let face_labels = faces
        .iter()
        .map(|f| {
            let [a, b, c] = fs.faces[f[0]];
            let common = |x: VertexId| f[1..].iter().all(|&j| fs.faces[j].contains(&x));
            [a, b, c].into_iter().find(|&x| common(x)).expect("dual face surrounds a vertex")
        })
        .collect();
    CubicPlaneGraph { rotation, faces, face_labels, primal_faces: Some(fs.faces) }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{icosahedron, k4, octahedron};
    use crate::planar::op_equivalent;

    fn degree_profile(t: &PlaneTriangulation, d: &CubicPlaneGraph) {
        assert_eq!(d.vertex_count(), t.face_count());
        for (f, &l) in d.faces().iter().zip(d.face_labels()) {
            assert_eq!(f.len(), t.degree(l).unwrap());
        }
        assert_eq!(d.faces().len(), t.vertex_count());
    }

    #[test]
    fn tetrahedron_is_self_dual() {
        let t = k4();
        let d = dual_graph(&t);
        assert_eq!(d.vertex_count(), 4);
        assert!(d.face_sizes().iter().all(|&s| s == 3));
        assert!(d.is_three_connected());
        degree_profile(&t, &d);
    }

    #[test]
    fn octahedron_dual_is_cube() {
        let t = octahedron();
        let d = dual_graph(&t);
        assert_eq!(d.vertex_count(), 8);
        assert_eq!(d.edge_count(), 12);
        assert!(d.face_sizes().iter().all(|&s| s == 4));
        // cube: bipartite
        let mut side = vec![None; 8];
        side[0] = Some(false);
        let mut stack = vec![0];
        while let Some(v) = stack.pop() {
            for u in d.neighbors(v) {
                match side[u] {
                    None => {
                        side[u] = Some(!side[v].unwrap());
                        stack.push(u);
                    }
                    Some(s) => assert_ne!(Some(s), side[v]),
                }
            }
        }
        degree_profile(&t, &d);
    }

    #[test]
    fn icosahedron_dual_is_dodecahedron() {
        let t = icosahedron();
        let d = dual_graph(&t);
        assert_eq!(d.vertex_count(), 20);
        assert_eq!(d.faces().len(), 12);
        assert!(d.face_sizes().iter().all(|&s| s == 5));
        assert!(d.is_three_connected());
        degree_profile(&t, &d);
    }

    #[test]
    fn dual_of_dual_recovers_triangulation() {
        for t in [k4(), octahedron(), icosahedron()] {
            let d = dual_graph(&t);
            let back = d.dual_triangulation(d.face_of(t.g()).unwrap()).unwrap();
            assert_eq!(back.vertex_count(), t.vertex_count());
            assert_eq!(back.edges(), t.edges());
            assert!(op_equivalent(&back, &t));
        }
    }

    #[test]
    fn segments_split_at_junctions() {
        // the prism again, with the spokes drawn through to the outer corners
        let segs = [
            ((0.0, 0.0), (4.0, 0.0)),
            ((4.0, 0.0), (2.0, 3.0)),
            ((2.0, 3.0), (0.0, 0.0)),
            ((1.5, 1.0), (2.5, 1.0)),
            ((2.5, 1.0), (2.0, 1.8)),
            ((2.0, 1.8), (1.5, 1.0)),
            ((0.0, 0.0), (1.5, 1.0)),
            ((4.0, 0.0), (2.5, 1.0)),
            ((2.0, 3.0), (2.0, 1.8)),
        ];
        let d = CubicPlaneGraph::from_segments(&segs).unwrap();
        assert_eq!(d.vertex_count(), 6);
        // a T-junction: (2, 0) lies inside the bottom segment
        let mut t = segs.to_vec();
        t[8] = ((2.0, 0.0), (2.0, 1.8));
        t.push(((2.0, 3.0), (2.0, 2.5)));
        assert!(CubicPlaneGraph::from_segments(&t).is_err());
    }

    #[test]
    fn straight_line_prism() {
        // triangular prism: inner triangle inside outer triangle
        let pts = [(0.0, 0.0), (4.0, 0.0), (2.0, 3.0), (1.5, 1.0), (2.5, 1.0), (2.0, 1.8)];
        let edges = [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)];
        let d = CubicPlaneGraph::from_straight_line(&pts, &edges).unwrap();
        let mut sizes = d.face_sizes();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![3, 3, 4, 4, 4]);
        assert!(d.is_three_connected());
    }
}
