use std::collections::HashMap;

use super::{PlaneTriangulation, VertexId};

/// All faces of a triangulation as oriented triples, each traced once.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceSet {
    pub faces: Vec<[VertexId; 3]>,
    pub outer_index: usize,
}

impl FaceSet {
    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn outer(&self) -> [VertexId; 3] {
        self.faces[self.outer_index]
    }

    /// Map from each directed edge to the index of the face whose trace uses it.
    pub fn dart_index(&self) -> HashMap<(VertexId, VertexId), usize> {
        let mut m = HashMap::with_capacity(self.faces.len() * 3);
        for (i, f) in self.faces.iter().enumerate() {
            for k in 0..3 {
                m.insert((f[k], f[(k + 1) % 3]), i);
            }
        }
        m
    }
}

/// Dense face list: each face starts at its smallest dense index, faces are
/// sorted, so the order is deterministic.
pub(crate) fn dense_faces(t: &PlaneTriangulation) -> Vec<[u32; 3]> {
    let mut out = Vec::with_capacity(t.face_count());
    for v in 0..t.n() as u32 {
        for &u in t.rot(v) {
            let w = t.apex(v, u);
            if v < u && v < w {
                out.push([v, u, w]);
            }
        }
    }
    out.sort_unstable();
    out
}

/// Traces every face with the successor rule. Each face is listed starting
/// from its smallest identifier; the outer face is listed as declared.
pub fn trace_faces(t: &PlaneTriangulation) -> FaceSet {
    let outer = t.outer_idx();
    let mut faces = Vec::with_capacity(t.face_count());
    let mut outer_index = usize::MAX;
    let rotate_min = |f: [u32; 3]| {
        let k = (0..3).min_by_key(|&k| f[k]).unwrap();
        [f[k], f[(k + 1) % 3], f[(k + 2) % 3]]
    };
    let outer_key = rotate_min(outer);
    for f in dense_faces(t) {
        if f == outer_key {
            outer_index = faces.len();
            faces.push(outer.map(|i| t.label(i)));
        } else {
            faces.push(f.map(|i| t.label(i)));
        }
    }
    debug_assert!(outer_index != usize::MAX);
    FaceSet { faces, outer_index }
}
