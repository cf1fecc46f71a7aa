use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::planar::{canonical_code, CanonicalCode, PlaneTriangulation, VertexId};

use super::OracleError;

/// Largest census bound accepted.
pub const CENSUS_CAP: usize = 26;

/// Partial filling of the disk bounded by `c(G)`.
///
/// Vertex 0 is `g`, `1..=m` the outer cycle in counterclockwise order, later
/// vertices are numbered as they are created. Every front is a cycle whose
/// edge `(f_i, f_{i+1})` still needs the face `(f_{i+1}, f_i, apex)`.
#[derive(Clone)]
struct Fill {
    deg: Vec<u8>,
    cap: Vec<u8>,
    adj: Vec<u64>,
    faces: Vec<[u32; 3]>,
    fronts: Vec<Vec<u32>>,
    max_vertices: usize,
}

impl Fill {
    fn start(m: usize, max_vertices: usize) -> Self {
        let mut f = Fill {
            deg: vec![0; m + 1],
            // disk degree; outer vertices also see g
            cap: std::iter::once(0).chain(std::iter::repeat_n(4, m)).collect(),
            adj: vec![0; m + 1],
            faces: Vec::new(),
            fronts: vec![(1..=m as u32).collect()],
            max_vertices,
        };
        for i in 0..m {
            f.link(1 + i as u32, 1 + ((i + 1) % m) as u32);
        }
        f
    }

    fn slack(&self, v: u32) -> u8 {
        self.cap[v as usize] - self.deg[v as usize]
    }

    fn adjacent(&self, a: u32, b: u32) -> bool {
        self.adj[a as usize] >> b & 1 == 1
    }

    fn link(&mut self, a: u32, b: u32) {
        self.adj[a as usize] |= 1 << b;
        self.adj[b as usize] |= 1 << a;
        self.deg[a as usize] += 1;
        self.deg[b as usize] += 1;
    }

    /// Possible next states, each fixing the face on one front edge.
    fn branches(mut self) -> Option<Vec<Fill>> {
        while self.fronts.last().is_some_and(|f| f.len() < 3) {
            self.fronts.pop();
        }
        let Some(front) = self.fronts.pop() else { return None };
        let l = front.len();
        if l > 3 && (0..l).any(|i| self.slack(front[i]) == 0 && self.slack(front[(i + 1) % l]) == 0) {
            return Some(Vec::new());
        }
        // most constrained edge first
        let s = (0..l)
            .min_by_key(|&i| (self.slack(front[i]) + self.slack(front[(i + 1) % l]), i))
            .unwrap();
        let f: Vec<u32> = (0..l).map(|i| front[(s + i) % l]).collect();
        let (f0, f1) = (f[0], f[1]);
        let mut out = Vec::new();
        if self.deg.len() < self.max_vertices && self.slack(f0) > 0 && self.slack(f1) > 0 {
            let mut n = self.clone();
            let z = n.deg.len() as u32;
            n.deg.push(0);
            n.cap.push(6);
            n.adj.push(0);
            n.link(f0, z);
            n.link(f1, z);
            n.faces.push([f1, f0, z]);
            let mut nf = vec![f0, z];
            nf.extend(&f[1..]);
            n.fronts.push(nf);
            out.push(n);
        }
        for k in 2..l {
            let fk = f[k];
            let new0 = k != l - 1;
            let new1 = k != 2;
            let need = new0 as u8 + new1 as u8;
            if (new0 && (self.adjacent(f0, fk) || self.slack(f0) == 0))
                || (new1 && (self.adjacent(f1, fk) || self.slack(f1) == 0))
                || self.slack(fk) < need
            {
                continue;
            }
            let mut n = self.clone();
            if new0 {
                n.link(f0, fk);
            }
            if new1 {
                n.link(f1, fk);
            }
            n.faces.push([f1, f0, fk]);
            n.fronts.push(f[1..=k].to_vec());
            let mut other = f[k..].to_vec();
            other.push(f0);
            n.fronts.push(other);
            out.push(n);
        }
        Some(out)
    }

    fn finish(&self, m: usize) -> Option<PlaneTriangulation> {
        let mut faces = self.faces.clone();
        for i in 0..m {
            faces.push([0, 1 + i as u32, 1 + ((i + 1) % m) as u32]);
        }
        PlaneTriangulation::from_oriented_faces(0, [0, 1, 2], &faces).ok()
    }
}

fn explore(state: Fill, m: usize, depth: usize, out: &mut BTreeMap<CanonicalCode, PlaneTriangulation>) {
    let Some(next) = state.clone().branches() else {
        if let Some(t) = state.finish(m) {
            out.entry(canonical_code(&t)).or_insert(t);
        }
        return;
    };
    if depth < 6 {
        let parts: Vec<BTreeMap<CanonicalCode, PlaneTriangulation>> = next
            .into_par_iter()
            .map(|s| {
                let mut local = BTreeMap::new();
                explore(s, m, depth + 1, &mut local);
                local
            })
            .collect();
        for p in parts {
            for (k, v) in p {
                out.entry(k).or_insert(v);
            }
        }
    } else {
        for s in next {
            explore(s, m, depth + 1, out);
        }
    }
}

/// Every op-equivalence class of the family with at most `bound` vertices.
/// Works by filling the disk inside `c(G)` face by face for each cycle
/// length, under the degree bounds, and deduplicating by canonical code.
pub fn exhaustive_family_census(
    bound: usize,
) -> Result<BTreeMap<CanonicalCode, PlaneTriangulation>, OracleError> {
    if bound > CENSUS_CAP {
        return Err(OracleError::CapExceeded { bound, cap: CENSUS_CAP });
    }
    let mut all = BTreeMap::new();
    for m in 3..bound {
        explore(Fill::start(m, bound), m, 0, &mut all);
    }
    // representatives with identifiers starting at 1
    Ok(all
        .into_iter()
        .map(|(k, t)| (k, t.relabel(|v: VertexId| v + 1).expect("shift is injective")))
        .collect())
}
