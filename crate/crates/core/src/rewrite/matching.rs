use std::collections::{BTreeMap, BTreeSet, HashSet};

use crate::family::outer_cycle;
use crate::planar::{trace_faces, PlaneTriangulation, VertexId};

use super::{Pattern, RewriteError};

/// An occurrence of a pattern in a triangulation.
#[derive(Clone, Debug)]
pub struct ConfigurationMatch {
    pub pattern: Pattern,
    /// Pattern vertex to graph vertex.
    pub embedding: BTreeMap<VertexId, VertexId>,
    /// Graph faces covered by the proper faces, each starting at its least vertex.
    pub proper_faces: Vec<[VertexId; 3]>,
}

impl ConfigurationMatch {
    pub fn image(&self, v: VertexId) -> Option<VertexId> {
        self.embedding.get(&v).copied()
    }
}

pub(crate) fn normalize(f: [VertexId; 3]) -> [VertexId; 3] {
    let k = (0..3).min_by_key(|&k| f[k]).unwrap();
    [f[k], f[(k + 1) % 3], f[(k + 2) % 3]]
}

/// Matches `p` so that the first boundary dart `(sigma[0], sigma[1])` lands on
/// the graph dart `(u, v)`. Faces are followed outward from there, which
/// makes the occurrence unique when it exists.
pub fn match_at_dart(
    t: &PlaneTriangulation,
    p: &Pattern,
    (u, v): (VertexId, VertexId),
) -> Option<ConfigurationMatch> {
    if !t.are_adjacent(u, v) {
        return None;
    }
    let ui = t.index_of(u)? as u32;
    let vi = t.index_of(v)? as u32;
    let sigma = p.sigma();
    let mut phi: BTreeMap<VertexId, u32> = BTreeMap::from([(sigma[0], ui), (sigma[1], vi)]);
    let mut changed = true;
    while changed {
        changed = false;
        for &[a, b, c] in p.faces() {
            for (x, y, z) in [(a, b, c), (b, c, a), (c, a, b)] {
                let (Some(&px), Some(&py)) = (phi.get(&x), phi.get(&y)) else { continue };
                if !t.adjacent(px, py) {
                    return None;
                }
                let pz = t.apex(px, py);
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
    if phi.len() != p.vertices().len() {
        return None;
    }
    let image: HashSet<u32> = phi.values().copied().collect();
    if image.len() != phi.len() {
        return None;
    }
    let mut proper_faces = Vec::with_capacity(p.faces().len());
    for &[a, b, c] in p.faces() {
        let (pa, pb, pc) = (phi[&a], phi[&b], phi[&c]);
        if !t.adjacent(pa, pb) || t.apex(pa, pb) != pc {
            return None;
        }
        proper_faces.push(normalize([pa, pb, pc].map(|i| t.label(i))));
    }
    // the distinguished face must not be a face of the graph as well
    if sigma.len() == 3 {
        let [a, b, c] = [sigma[0], sigma[1], sigma[2]].map(|x| phi[&x]);
        if t.adjacent(a, b) && t.apex(a, b) == c {
            return None;
        }
    }
    Some(ConfigurationMatch {
        pattern: p.clone(),
        embedding: phi.into_iter().map(|(k, i)| (k, t.label(i))).collect(),
        proper_faces,
    })
}

/// Matches `p` at edge `site` of `c(G)`: the anchor goes to `g` and the next
/// boundary vertex to `x_{site+1}`.
pub fn match_configuration(t: &PlaneTriangulation, p: &Pattern, site: usize) -> Option<ConfigurationMatch> {
    let c = outer_cycle(t);
    if site >= c.len() {
        return None;
    }
    match_at_dart(t, p, (t.g(), c[(site + 1) % c.len()]))
}

/// Replaces every matched configuration by its partner pattern and updates
/// the marked set `w` accordingly. Fresh vertices get identifiers above the
/// current maximum, in order of the matches and then of pattern identifiers.
pub fn replace_patterns(
    t: &PlaneTriangulation,
    w: &BTreeSet<VertexId>,
    matches: &[(ConfigurationMatch, Pattern)],
) -> Result<(PlaneTriangulation, BTreeSet<VertexId>), RewriteError> {
    if matches.is_empty() {
        return Ok((t.clone(), w.clone()));
    }
    let mut faces: BTreeSet<[VertexId; 3]> = trace_faces(t).faces.into_iter().map(normalize).collect();
    let mut used = HashSet::new();
    let mut removed = BTreeSet::new();
    let mut added = BTreeSet::new();
    let mut next = t.max_vertex() + 1;
    for (m, rep) in matches {
        for f in &m.proper_faces {
            if !used.insert(*f) {
                return Err(RewriteError::Overlap(*f));
            }
            faces.remove(f);
        }
        let phi = rep.sigma_compatible(&m.pattern).ok_or_else(|| RewriteError::Incompatible {
            replacement: rep.name.clone(),
            configuration: m.pattern.name.clone(),
        })?;
        let mut to_graph: BTreeMap<VertexId, VertexId> =
            phi.iter().map(|(&r, &c)| (r, m.embedding[&c])).collect();
        for v in rep.interior() {
            to_graph.insert(v, next);
            next += 1;
        }
        for f in rep.faces() {
            faces.insert(normalize(f.map(|v| to_graph[&v])));
        }
        removed.extend(m.embedding.values().copied());
        added.extend(rep.marked().iter().map(|v| to_graph[v]));
    }
    let old_outer = t.outer_face();
    let outer = if faces.contains(&normalize(old_outer)) {
        old_outer
    } else {
        let g = t.g();
        let f = faces.iter().find(|f| f.contains(&g)).expect("g keeps a face");
        let k = f.iter().position(|&x| x == g).unwrap();
        [f[k], f[(k + 1) % 3], f[(k + 2) % 3]]
    };
    let faces: Vec<[VertexId; 3]> = faces.into_iter().collect();
    let result = PlaneTriangulation::from_oriented_faces(t.g(), outer, &faces)?;
    let mut w2: BTreeSet<VertexId> = w.difference(&removed).copied().collect();
    w2.extend(added);
    Ok((result, w2))
}
