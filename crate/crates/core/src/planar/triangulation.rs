use std::collections::{BTreeMap, HashMap, HashSet};

use super::GraphError;

/// Vertex identifier as it appears in graph files.
pub type VertexId = u32;

/// A simple plane triangulation given by counterclockwise rotations, with a
/// declared outer triangle and a distinguished vertex `g` on it.
///
/// Vertices are stored densely in ascending identifier order; identifiers are
/// what the public API speaks.
#[derive(Clone, Debug)]
pub struct PlaneTriangulation {
    labels: Vec<VertexId>,
    rot: Vec<Vec<u32>>,
    g: u32,
    outer: [u32; 3],
}

impl PlaneTriangulation {
    /// Builds and validates a triangulation from explicit rotations.
    pub fn from_rotations(
        g: VertexId,
        outer: [VertexId; 3],
        rotations: &[(VertexId, Vec<VertexId>)],
    ) -> Result<Self, GraphError> {
        let mut labels: Vec<VertexId> = Vec::with_capacity(rotations.len());
        let mut seen = HashSet::new();
        for (v, _) in rotations {
            if !seen.insert(*v) {
                return Err(GraphError::DuplicateVertex(*v));
            }
            labels.push(*v);
        }
        labels.sort_unstable();
        let index: HashMap<VertexId, u32> =
            labels.iter().enumerate().map(|(i, &l)| (l, i as u32)).collect();
        let mut rot = vec![Vec::new(); labels.len()];
        for (v, nbrs) in rotations {
            let vi = index[v] as usize;
            let mut r = Vec::with_capacity(nbrs.len());
            for u in nbrs {
                match index.get(u) {
                    Some(&ui) => r.push(ui),
                    None => return Err(GraphError::UnknownVertex(*u)),
                }
            }
            rot[vi] = r;
        }
        let gi = *index.get(&g).ok_or(GraphError::UnknownVertex(g))?;
        let mut oi = [0u32; 3];
        for (k, o) in outer.iter().enumerate() {
            oi[k] = *index.get(o).ok_or(GraphError::UnknownVertex(*o))?;
        }
        Self::from_dense(labels, rot, gi, oi)
    }

    /// Builds a triangulation from unoriented triangles. Faces are oriented
    /// coherently and the global orientation is fixed so that `outer` is traced
    /// in the given order.
    pub fn from_triangles(
        g: VertexId,
        outer: [VertexId; 3],
        triangles: &[[VertexId; 3]],
    ) -> Result<Self, GraphError> {
        let oriented = orient_triangles(triangles, outer)?;
        Self::from_oriented_faces(g, outer, &oriented)
    }

    /// Builds a triangulation from faces already listed in trace order.
    pub fn from_oriented_faces(
        g: VertexId,
        outer: [VertexId; 3],
        faces: &[[VertexId; 3]],
    ) -> Result<Self, GraphError> {
        let mut next: BTreeMap<VertexId, HashMap<VertexId, VertexId>> = BTreeMap::new();
        for &[a, b, c] in faces {
            for (x, y, z) in [(a, b, c), (b, c, a), (c, a, b)] {
                // successor of dart (x, y) is (y, z): at y, z follows x
                if next.entry(y).or_default().insert(x, z).is_some() {
                    return Err(GraphError::BadTriangles(format!(
                        "edge ({x},{y}) used twice in the same direction"
                    )));
                }
            }
        }
        let mut rotations = Vec::with_capacity(next.len());
        for (&v, map) in &next {
            let start = *map.keys().min().unwrap();
            let mut order = vec![start];
            let mut cur = start;
            loop {
                let nx = *map.get(&cur).ok_or_else(|| {
                    GraphError::BadTriangles(format!("vertex {v} has an open fan"))
                })?;
                if nx == start {
                    break;
                }
                if order.len() > map.len() {
                    return Err(GraphError::BadTriangles(format!("vertex {v} is pinched")));
                }
                order.push(nx);
                cur = nx;
            }
            if order.len() != map.len() {
                return Err(GraphError::BadTriangles(format!("vertex {v} is pinched")));
            }
            rotations.push((v, order));
        }
        Self::from_rotations(g, outer, &rotations)
    }

    pub(crate) fn from_dense(
        labels: Vec<VertexId>,
        rot: Vec<Vec<u32>>,
        g: u32,
        outer: [u32; 3],
    ) -> Result<Self, GraphError> {
        let t = PlaneTriangulation { labels, rot, g, outer };
        t.validate()?;
        Ok(t)
    }

    /// Trusted constructor for results of surgery that preserves the invariants
    /// by construction; still checked in debug builds.
    pub(crate) fn from_dense_unchecked(
        labels: Vec<VertexId>,
        rot: Vec<Vec<u32>>,
        g: u32,
        outer: [u32; 3],
    ) -> Self {
        let t = PlaneTriangulation { labels, rot, g, outer };
        debug_assert!(t.validate().is_ok(), "{:?}", t.validate());
        t
    }

    fn validate(&self) -> Result<(), GraphError> {
        let n = self.labels.len();
        if n < 4 {
            return Err(GraphError::TooSmall(n));
        }
        for v in 0..n {
            let r = &self.rot[v];
            let mut seen = HashSet::with_capacity(r.len());
            for &u in r {
                if u as usize == v {
                    return Err(GraphError::Loop(self.labels[v]));
                }
                if !seen.insert(u) {
                    return Err(GraphError::RepeatedNeighbor {
                        v: self.labels[v],
                        u: self.labels[u as usize],
                    });
                }
            }
        }
        for v in 0..n {
            for &u in &self.rot[v] {
                if !self.rot[u as usize].contains(&(v as u32)) {
                    return Err(GraphError::AsymmetricAdjacency {
                        v: self.labels[v],
                        u: self.labels[u as usize],
                    });
                }
            }
        }
        let mut faces = 0usize;
        let mut visited: Vec<Vec<bool>> = self.rot.iter().map(|r| vec![false; r.len()]).collect();
        for v in 0..n {
            for k in 0..self.rot[v].len() {
                if visited[v][k] {
                    continue;
                }
                let start = (v as u32, self.rot[v][k]);
                let mut d = start;
                let mut len = 0;
                loop {
                    let p = self.pos(d.0, d.1);
                    if visited[d.0 as usize][p] {
                        break;
                    }
                    visited[d.0 as usize][p] = true;
                    len += 1;
                    d = self.succ(d.0, d.1);
                    if len > 3 {
                        break;
                    }
                }
                if len != 3 || d != start {
                    return Err(GraphError::NonTriangularFace {
                        u: self.labels[start.0 as usize],
                        v: self.labels[start.1 as usize],
                    });
                }
                faces += 1;
            }
        }
        let edges = self.rot.iter().map(|r| r.len()).sum::<usize>() / 2;
        if edges != 3 * n - 6 || faces != 2 * n - 4 {
            return Err(GraphError::Euler { vertices: n, edges, faces });
        }
        let [a, b, c] = self.outer;
        let (x, y) = self.succ(a, b);
        let ok = self.adjacent(a, b) && x == b && y == c && self.succ(b, c) == (c, a);
        if !ok {
            return Err(GraphError::OuterNotFace(self.labels[a as usize], self.labels[b as usize], self.labels[c as usize]));
        }
        if !self.outer.contains(&self.g) {
            return Err(GraphError::GNotOnOuter(self.labels[self.g as usize]));
        }
        if n <= 40 {
            self.check_three_connected()?;
        }
        Ok(())
    }

    /// Explicit 3-connectivity check: no pair of vertices separates the graph.
    fn check_three_connected(&self) -> Result<(), GraphError> {
        let n = self.n();
        let mut mark = vec![0u32; n];
        let mut stamp = 0u32;
        let mut stack = Vec::with_capacity(n);
        for a in 0..n {
            for b in (a + 1)..n {
                stamp += 1;
                mark[a] = stamp;
                mark[b] = stamp;
                let s = (0..n).find(|&v| v != a && v != b).unwrap();
                mark[s] = stamp;
                stack.push(s);
                let mut reached = 1;
                while let Some(v) = stack.pop() {
                    for &u in &self.rot[v] {
                        let u = u as usize;
                        if mark[u] != stamp {
                            mark[u] = stamp;
                            reached += 1;
                            stack.push(u);
                        }
                    }
                }
                if reached != n - 2 {
                    return Err(GraphError::NotThreeConnected {
                        a: self.labels[a],
                        b: self.labels[b],
                    });
                }
            }
        }
        Ok(())
    }

    // ---- public, identifier-based API ----

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        3 * self.labels.len() - 6
    }

    pub fn face_count(&self) -> usize {
        2 * self.labels.len() - 4
    }

    /// Identifiers in ascending order.
    pub fn vertices(&self) -> &[VertexId] {
        &self.labels
    }

    pub fn g(&self) -> VertexId {
        self.labels[self.g as usize]
    }

    pub fn outer_face(&self) -> [VertexId; 3] {
        self.outer.map(|i| self.labels[i as usize])
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.index_of(v).is_some()
    }

    pub fn max_vertex(&self) -> VertexId {
        *self.labels.last().unwrap()
    }

    pub fn degree(&self, v: VertexId) -> Option<usize> {
        self.index_of(v).map(|i| self.rot[i].len())
    }

    /// Counterclockwise rotation at `v`.
    pub fn rotation(&self, v: VertexId) -> Option<Vec<VertexId>> {
        self.index_of(v)
            .map(|i| self.rot[i].iter().map(|&u| self.labels[u as usize]).collect())
    }

    pub fn are_adjacent(&self, u: VertexId, v: VertexId) -> bool {
        match (self.index_of(u), self.index_of(v)) {
            (Some(a), Some(b)) => self.adjacent(a as u32, b as u32),
            _ => false,
        }
    }

    /// All undirected edges with the smaller identifier first, sorted.
    pub fn edges(&self) -> Vec<(VertexId, VertexId)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for v in 0..self.n() {
            for &u in &self.rot[v] {
                if (u as usize) > v {
                    out.push((self.labels[v], self.labels[u as usize]));
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Same graph with identifiers renamed by `f` (must be injective).
    pub fn relabel(&self, f: impl Fn(VertexId) -> VertexId) -> Result<Self, GraphError> {
        let rotations: Vec<(VertexId, Vec<VertexId>)> = (0..self.n())
            .map(|v| {
                (
                    f(self.labels[v]),
                    self.rot[v].iter().map(|&u| f(self.labels[u as usize])).collect(),
                )
            })
            .collect();
        Self::from_rotations(f(self.g()), self.outer_face().map(&f), &rotations)
    }

    /// Same embedding with a different distinguished vertex on a chosen outer
    /// face containing it.
    pub fn with_g(&self, g: VertexId) -> Option<Self> {
        let gi = self.index_of(g)? as u32;
        let first = self.rot[gi as usize][0];
        let (_, w) = self.succ(gi, first);
        let mut t = self.clone();
        t.g = gi;
        t.outer = [gi, first, w];
        Some(t)
    }

    // ---- crate-internal dense API ----

    pub(crate) fn n(&self) -> usize {
        self.labels.len()
    }

    pub(crate) fn label(&self, i: u32) -> VertexId {
        self.labels[i as usize]
    }

    pub(crate) fn labels(&self) -> &[VertexId] {
        &self.labels
    }

    pub(crate) fn index_of(&self, v: VertexId) -> Option<usize> {
        self.labels.binary_search(&v).ok()
    }

    pub(crate) fn rot(&self, v: u32) -> &[u32] {
        &self.rot[v as usize]
    }

    pub(crate) fn rots(&self) -> &[Vec<u32>] {
        &self.rot
    }

    pub(crate) fn deg(&self, v: u32) -> usize {
        self.rot[v as usize].len()
    }

    pub(crate) fn g_idx(&self) -> u32 {
        self.g
    }

    pub(crate) fn outer_idx(&self) -> [u32; 3] {
        self.outer
    }

    pub(crate) fn adjacent(&self, u: u32, v: u32) -> bool {
        self.rot[u as usize].contains(&v)
    }

    /// Position of `u` in the rotation at `v`.
    pub(crate) fn pos(&self, v: u32, u: u32) -> usize {
        self.rot[v as usize]
            .iter()
            .position(|&x| x == u)
            .unwrap_or_else(|| panic!("{} not adjacent to {}", u, v))
    }

    /// Face-tracing successor of the directed edge (u, v).
    pub(crate) fn succ(&self, u: u32, v: u32) -> (u32, u32) {
        let r = &self.rot[v as usize];
        let p = r.iter().position(|&x| x == u).expect("dart");
        (v, r[(p + 1) % r.len()])
    }

    /// Third vertex of the face traced from the directed edge (u, v).
    pub(crate) fn apex(&self, u: u32, v: u32) -> u32 {
        self.succ(u, v).1
    }
}

/// Mirror image: every rotation reversed, the outer triangle traced backwards,
/// `g` fixed.
pub fn mirror_reflect(t: &PlaneTriangulation) -> PlaneTriangulation {
    let rot: Vec<Vec<u32>> = t
        .rots()
        .iter()
        .map(|r| r.iter().rev().copied().collect())
        .collect();
    let [a, b, c] = t.outer_idx();
    PlaneTriangulation::from_dense_unchecked(t.labels().to_vec(), rot, t.g_idx(), [a, c, b])
}

fn orient_triangles(
    triangles: &[[VertexId; 3]],
    outer: [VertexId; 3],
) -> Result<Vec<[VertexId; 3]>, GraphError> {
    let key = |a: VertexId, b: VertexId| if a < b { (a, b) } else { (b, a) };
    let mut by_edge: HashMap<(VertexId, VertexId), Vec<usize>> = HashMap::new();
    for (i, t) in triangles.iter().enumerate() {
        if t[0] == t[1] || t[1] == t[2] || t[0] == t[2] {
            return Err(GraphError::BadTriangles(format!("degenerate triangle {t:?}")));
        }
        for k in 0..3 {
            by_edge.entry(key(t[k], t[(k + 1) % 3])).or_default().push(i);
        }
    }
    for (e, fs) in &by_edge {
        if fs.len() != 2 {
            return Err(GraphError::BadTriangles(format!(
                "edge {e:?} lies on {} triangles",
                fs.len()
            )));
        }
    }
    let has_dart = |t: &[VertexId; 3], a: VertexId, b: VertexId| {
        (0..3).any(|k| t[k] == a && t[(k + 1) % 3] == b)
    };
    let mut out: Vec<Option<[VertexId; 3]>> = vec![None; triangles.len()];
    let root = triangles
        .iter()
        .position(|t| {
            let mut s = *t;
            s.sort_unstable();
            let mut o = outer;
            o.sort_unstable();
            s == o
        })
        .ok_or(GraphError::OuterNotFace(outer[0], outer[1], outer[2]))?;
    out[root] = Some(outer);
    let mut stack = vec![root];
    while let Some(i) = stack.pop() {
        let t = out[i].unwrap();
        for k in 0..3 {
            let (a, b) = (t[k], t[(k + 1) % 3]);
            for &j in &by_edge[&key(a, b)] {
                if j == i {
                    continue;
                }
                let s = triangles[j];
                // neighbor must traverse the shared edge as (b, a)
                let oriented = if has_dart(&s, b, a) { s } else { [s[0], s[2], s[1]] };
                match out[j] {
                    None => {
                        out[j] = Some(oriented);
                        stack.push(j);
                    }
                    Some(prev) => {
                        if !has_dart(&prev, b, a) {
                            return Err(GraphError::BadTriangles("non-orientable".into()));
                        }
                    }
                }
            }
        }
    }
    out.into_iter()
        .map(|t| t.ok_or_else(|| GraphError::BadTriangles("disconnected triangles".into())))
        .collect()
}
