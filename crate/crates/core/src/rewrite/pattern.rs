use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};

use crate::planar::VertexId;

use super::RewriteError;

/// Side of the boundary cycle on which the proper faces lie, as recorded in
/// catalog files. The stored `sigma` is always the trace of the distinguished
/// face, so the flag does not change how a pattern is glued.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Region {
    Bounded,
    Unbounded,
}

/// A semi-triangulation with anchor `d` on its boundary and a marked set.
///
/// Proper faces are oriented like faces of a triangulation; `sigma` is the
/// trace of the distinguished face and starts at `d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pattern {
    pub name: String,
    faces: Vec<[VertexId; 3]>,
    sigma: Vec<VertexId>,
    d: VertexId,
    marked: BTreeSet<VertexId>,
    region: Region,
}

impl Pattern {
    pub fn new(
        name: impl Into<String>,
        faces: Vec<[VertexId; 3]>,
        d: VertexId,
        marked: impl IntoIterator<Item = VertexId>,
        region: Region,
    ) -> Result<Self, RewriteError> {
        let name = name.into();
        let bad = |msg: String| RewriteError::BadPattern { name: name.clone(), msg };
        if faces.is_empty() {
            return Err(bad("no proper faces".into()));
        }
        let mut darts = HashSet::new();
        for f in &faces {
            if f[0] == f[1] || f[1] == f[2] || f[0] == f[2] {
                return Err(bad(format!("degenerate face {f:?}")));
            }
            for k in 0..3 {
                if !darts.insert((f[k], f[(k + 1) % 3])) {
                    return Err(bad(format!("dart ({},{}) used twice", f[k], f[(k + 1) % 3])));
                }
            }
        }
        // boundary darts: reverse of a face dart that no face uses
        let mut next: HashMap<VertexId, VertexId> = HashMap::new();
        for &(a, b) in &darts {
            if !darts.contains(&(b, a)) && next.insert(b, a).is_some() {
                return Err(bad(format!("boundary pinched at {b}")));
            }
        }
        if !next.contains_key(&d) {
            return Err(bad(format!("anchor {d} is not on the boundary")));
        }
        let mut sigma = vec![d];
        let mut cur = next[&d];
        while cur != d {
            if sigma.len() > next.len() {
                return Err(bad("boundary is not a cycle".into()));
            }
            sigma.push(cur);
            cur = next[&cur];
        }
        if sigma.len() != next.len() {
            return Err(bad("boundary has more than one component".into()));
        }
        if sigma.len() < 3 {
            return Err(bad("boundary shorter than 3".into()));
        }
        let vertices: BTreeSet<VertexId> = faces.iter().flatten().copied().collect();
        let edges = darts.len() - sigma.len();
        let edges = edges / 2 + sigma.len();
        // disk: V - E + F = 1 with F proper faces
        if vertices.len() + faces.len() != edges + 1 {
            return Err(bad(format!(
                "not a disk: {} vertices, {} edges, {} faces",
                vertices.len(),
                edges,
                faces.len()
            )));
        }
        let p = Pattern { name: name.clone(), faces, sigma, d, marked: marked.into_iter().collect(), region };
        for v in &p.marked {
            if !vertices.contains(v) {
                return Err(bad(format!("marked vertex {v} is not in the pattern")));
            }
        }
        p.check_fans().map_err(bad)?;
        Ok(p)
    }

    /// Every interior vertex has a closed fan, every boundary vertex one open fan.
    fn check_fans(&self) -> Result<(), String> {
        let mut after: HashMap<VertexId, HashMap<VertexId, VertexId>> = HashMap::new();
        for &[a, b, c] in &self.faces {
            for (x, y, z) in [(a, b, c), (b, c, a), (c, a, b)] {
                after.entry(y).or_default().insert(x, z);
            }
        }
        let on_sigma: HashSet<VertexId> = self.sigma.iter().copied().collect();
        for (&v, m) in &after {
            let starts: Vec<VertexId> = if on_sigma.contains(&v) {
                m.keys().filter(|k| !m.values().any(|x| x == *k)).copied().collect()
            } else {
                vec![*m.keys().min().unwrap()]
            };
            if starts.len() != 1 {
                return Err(format!("vertex {v} has {} fans", starts.len()));
            }
            let mut seen = 1;
            let mut cur = starts[0];
            while let Some(&nx) = m.get(&cur) {
                if nx == starts[0] {
                    break;
                }
                seen += 1;
                cur = nx;
                if seen > m.len() + 1 {
                    return Err(format!("vertex {v} fan does not close"));
                }
            }
            let expected = if on_sigma.contains(&v) { m.len() + 1 } else { m.len() };
            if seen != expected {
                return Err(format!("vertex {v} has a split fan"));
            }
        }
        Ok(())
    }

    pub fn faces(&self) -> &[[VertexId; 3]] {
        &self.faces
    }

    /// Boundary cycle starting at `d`.
    pub fn sigma(&self) -> &[VertexId] {
        &self.sigma
    }

    pub fn d(&self) -> VertexId {
        self.d
    }

    pub fn marked(&self) -> &BTreeSet<VertexId> {
        &self.marked
    }

    pub fn region(&self) -> Region {
        self.region
    }

    pub fn with_marked(&self, marked: impl IntoIterator<Item = VertexId>) -> Self {
        let mut p = self.clone();
        p.marked = marked.into_iter().collect();
        p
    }

    pub fn vertices(&self) -> BTreeSet<VertexId> {
        self.faces.iter().flatten().copied().collect()
    }

    pub fn interior(&self) -> BTreeSet<VertexId> {
        let s: HashSet<_> = self.sigma.iter().collect();
        self.vertices().into_iter().filter(|v| !s.contains(v)).collect()
    }

    /// Undirected edges, smaller end first.
    pub fn edges(&self) -> BTreeSet<(VertexId, VertexId)> {
        let mut e = BTreeSet::new();
        for f in &self.faces {
            for k in 0..3 {
                let (a, b) = (f[k], f[(k + 1) % 3]);
                e.insert((a.min(b), a.max(b)));
            }
        }
        e
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.edges().iter().filter(|(a, b)| *a == v || *b == v).count()
    }

    pub fn adjacent(&self, a: VertexId, b: VertexId) -> bool {
        self.edges().contains(&(a.min(b), a.max(b)))
    }

    /// Edges joining two boundary vertices that are not consecutive on sigma.
    pub fn chords(&self) -> BTreeSet<(VertexId, VertexId)> {
        let m = self.sigma.len();
        let pos: HashMap<VertexId, usize> = self.sigma.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        self.edges()
            .into_iter()
            .filter(|(a, b)| match (pos.get(a), pos.get(b)) {
                (Some(&i), Some(&j)) => {
                    let d = (i + m - j) % m;
                    d != 1 && d != m - 1
                }
                _ => false,
            })
            .collect()
    }

    /// Number of edges of the subgraph induced by the marked set.
    pub fn marked_edges(&self) -> usize {
        self.edges()
            .iter()
            .filter(|(a, b)| self.marked.contains(a) && self.marked.contains(b))
            .count()
    }

    /// Whether every face contains a marked vertex.
    pub fn marked_dominates(&self) -> bool {
        self.faces.iter().all(|f| f.iter().any(|v| self.marked.contains(v)))
    }

    /// Connected components of the marked set's induced subgraph.
    pub fn marked_components(&self) -> Vec<BTreeSet<VertexId>> {
        let edges = self.edges();
        let mut comps: Vec<BTreeSet<VertexId>> = Vec::new();
        let mut left: BTreeSet<VertexId> = self.marked.clone();
        while let Some(&s) = left.iter().next() {
            let mut comp = BTreeSet::from([s]);
            let mut stack = vec![s];
            left.remove(&s);
            while let Some(v) = stack.pop() {
                for &(a, b) in &edges {
                    let u = if a == v { b } else if b == v { a } else { continue };
                    if left.remove(&u) {
                        comp.insert(u);
                        stack.push(u);
                    }
                }
            }
            comps.push(comp);
        }
        comps
    }

    /// Mirror image: faces and boundary reversed, same anchor.
    pub fn mirror(&self) -> Self {
        let faces = self.faces.iter().map(|&[a, b, c]| [a, c, b]).collect();
        Pattern::new(format!("r({})", self.name), faces, self.d, self.marked.clone(), self.region)
            .expect("mirror of a valid pattern")
    }

    /// Renames vertices; `f` must be injective.
    pub fn relabel(&self, f: impl Fn(VertexId) -> VertexId) -> Self {
        Pattern {
            name: self.name.clone(),
            faces: self.faces.iter().map(|t| t.map(&f)).collect(),
            sigma: self.sigma.iter().map(|&v| f(v)).collect(),
            d: f(self.d),
            marked: self.marked.iter().map(|&v| f(v)).collect(),
            region: self.region,
        }
    }

    /// Boundary isomorphism onto `other` preserving orientation, the anchor,
    /// boundary marks and chords. Every rotation of the boundary is tried and
    /// the first that works is returned as a map from this pattern's boundary.
    pub fn sigma_compatible(&self, other: &Pattern) -> Option<BTreeMap<VertexId, VertexId>> {
        let m = self.sigma.len();
        if m != other.sigma.len() {
            return None;
        }
        let other_chords = other.chords();
        'rot: for shift in 0..m {
            let phi: BTreeMap<VertexId, VertexId> =
                (0..m).map(|k| (self.sigma[k], other.sigma[(k + shift) % m])).collect();
            if phi[&self.d] != other.d {
                continue;
            }
            for (&a, &b) in &phi {
                if self.marked.contains(&a) != other.marked.contains(&b) {
                    continue 'rot;
                }
            }
            for (a, b) in self.chords() {
                let (x, y) = (phi[&a], phi[&b]);
                if !other_chords.contains(&(x.min(y), x.max(y))) {
                    continue 'rot;
                }
            }
            return Some(phi);
        }
        None
    }

    /// Isomorphism of whole patterns preserving orientation, anchor and marks.
    pub fn same_as(&self, other: &Pattern) -> bool {
        self.isomorphism(other).is_some()
    }

    pub fn isomorphism(&self, other: &Pattern) -> Option<HashMap<VertexId, VertexId>> {
        if self.faces.len() != other.faces.len() || self.sigma.len() != other.sigma.len() {
            return None;
        }
        // anchor fixed and orientation kept: the boundary map is forced, and
        // the interior follows by face propagation
        let m = self.sigma.len();
        let mut phi: HashMap<VertexId, VertexId> =
            (0..m).map(|k| (self.sigma[k], other.sigma[k])).collect();
        let theirs: HashMap<(VertexId, VertexId), VertexId> = other
            .faces
            .iter()
            .flat_map(|&[a, b, c]| [((a, b), c), ((b, c), a), ((c, a), b)])
            .collect();
        let mut changed = true;
        while changed {
            changed = false;
            for &[a, b, c] in &self.faces {
                for (x, y, z) in [(a, b, c), (b, c, a), (c, a, b)] {
                    if let (Some(&px), Some(&py)) = (phi.get(&x), phi.get(&y)) {
                        let pz = *theirs.get(&(px, py))?;
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
        }
        let image: HashSet<_> = phi.values().collect();
        if phi.len() != self.vertices().len() || image.len() != phi.len() {
            return None;
        }
        for &[a, b, c] in &self.faces {
            if theirs.get(&(phi[&a], phi[&b])) != Some(&phi[&c]) {
                return None;
            }
        }
        let marks: BTreeSet<VertexId> = self.marked.iter().map(|v| phi[v]).collect();
        (marks == other.marked).then_some(phi)
    }
}
