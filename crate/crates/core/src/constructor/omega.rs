use std::collections::{BTreeMap, BTreeSet};

use crate::catalog::{Catalog, FamilyKey};
use crate::family::{bfs_levels, outer_cycle};
use crate::planar::{PlaneTriangulation, VertexId};
use crate::rewrite::{match_configuration, replace_patterns, ConfigurationMatch, Pattern};

use super::ConstructError;

/// An `M`-site: the `c²` vertex `t`, its family `k` and the run of
/// `c(H)` vertices it rests on (two for `k ≠ 3`, three for `k = 3`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MSite {
    pub k: u32,
    pub t: VertexId,
    pub z: Vec<VertexId>,
}

/// `M_1 … M_4` of `(H, X)`, keyed by position on `c²(H)`. Errors if a
/// position qualifies for two sets.
pub fn m_sets(h: &PlaneTriangulation, x: &BTreeSet<VertexId>) -> Result<BTreeMap<usize, MSite>, ConstructError> {
    let z = outer_cycle(h);
    let m = z.len();
    let levels = bfs_levels(h);
    let ts = crate::family::layer_cycle(h, 2).map_err(|e| ConstructError::Recognition(e.to_string()))?.vertices;
    let d = |v: VertexId| h.degree(v).unwrap();
    let inx = |v: VertexId| x.contains(&v);
    let mut out = BTreeMap::new();
    for (i, &t) in ts.iter().enumerate() {
        if inx(t) || d(t) > 5 || levels.level(t) != Some(2) {
            continue;
        }
        // faces z_j z_{j+1} t
        let faces: Vec<usize> = (0..m).filter(|&j| h.are_adjacent(z[j], t) && h.are_adjacent(z[(j + 1) % m], t)).collect();
        let pair = |j: usize| (z[j], z[(j + 1) % m]);
        let pick = |ok: &dyn Fn(VertexId, VertexId) -> bool| -> Option<usize> {
            let hits: Vec<usize> = faces.iter().copied().filter(|&j| ok(pair(j).0, pair(j).1)).collect();
            (hits.len() == 1).then(|| hits[0])
        };
        let mut found: Vec<MSite> = Vec::new();
        if d(t) >= 4 {
            if let Some(j) = pick(&|a, b| inx(a) && !inx(b) && d(a) == 5 && d(b) == 5) {
                found.push(MSite { k: 1, t, z: vec![pair(j).0, pair(j).1] });
            }
        }
        if let Some(j) = pick(&|a, b| inx(a) && inx(b) && (4..=5).contains(&d(a)) && (4..=5).contains(&d(b))) {
            found.push(MSite { k: 2, t, z: vec![pair(j).0, pair(j).1] });
        }
        if d(t) >= 4 {
            let runs: Vec<usize> = faces
                .iter()
                .copied()
                .filter(|&j| faces.contains(&((j + m - 1) % m)))
                .filter(|&j| {
                    let (a, b, c) = (z[(j + m - 1) % m], z[j], z[(j + 1) % m]);
                    inx(a) && !inx(b) && inx(c) && d(b) == 4 && d(a) == 5 && d(c) == 5
                })
                .collect();
            if runs.len() == 1 {
                let j = runs[0];
                found.push(MSite { k: 3, t, z: vec![z[(j + m - 1) % m], z[j], z[(j + 1) % m]] });
            }
            if let Some(j) = pick(&|a, b| !inx(a) && inx(b) && d(a) == 5 && d(b) == 5) {
                found.push(MSite { k: 4, t, z: vec![pair(j).0, pair(j).1] });
            }
        }
        match found.len() {
            0 => {}
            1 => {
                out.insert(i, found.remove(0));
            }
            _ => return Err(ConstructError::Omega(format!("position {i} lies in more than one M-set"))),
        }
    }
    Ok(out)
}

/// Largest index `ω̄` may take at a site of family `k` whose apex has degree `d`.
pub fn omega_bound(k: u32, d: usize, star: bool) -> u32 {
    match (k, d) {
        (2, 3) => 6,
        (3, 4) => 5,
        (1, 4) if star => 2,
        (1 | 2, 4) => 3,
        (3, 5) | (4, 4) => 2,
        (1 | 2 | 4, 5) => 1,
        _ => 0,
    }
}

/// Where the zero member of family `k` sits on `site`, as an occurrence in `h`.
fn locate(h: &PlaneTriangulation, zero: &Pattern, site: &MSite) -> Option<ConfigurationMatch> {
    // local names: 1, 2 the base edge (1, 4, 2 the run for k = 3), 3 the apex
    let want: Vec<(VertexId, VertexId)> = match site.k {
        3 => vec![(1, site.z[0]), (4, site.z[1]), (2, site.z[2]), (3, site.t)],
        _ => vec![(1, site.z[0]), (2, site.z[1]), (3, site.t)],
    };
    (0..outer_cycle(h).len())
        .filter_map(|s| match_configuration(h, zero, s))
        .find(|m| want.iter().all(|&(p, v)| m.image(p) == Some(v)))
}

/// `ω`: replaces the configuration at every site `i` of `omega` by member
/// `ω̄(i)` of its `Υ` family and returns `(ω(H), ω(X))`.
pub fn apply_omega(
    c: &Catalog,
    h: &PlaneTriangulation,
    x: &BTreeSet<VertexId>,
    omega: &BTreeMap<usize, u32>,
    star: bool,
) -> Result<(PlaneTriangulation, BTreeSet<VertexId>), ConstructError> {
    let sites = m_sets(h, x)?;
    let mut matches = Vec::new();
    for (&i, &j) in omega {
        let site = sites.get(&i).ok_or_else(|| ConstructError::Omega(format!("position {i} is in no M-set")))?;
        let d = h.degree(site.t).unwrap();
        let bound = omega_bound(site.k, d, star);
        if j > bound {
            return Err(ConstructError::Omega(format!(
                "index {j} at position {i} exceeds the bound {bound} for M_{} with degree {d}",
                site.k
            )));
        }
        if j == 0 {
            continue;
        }
        let key = FamilyKey::new("Upsilon", site.k, None);
        let missing = || ConstructError::Omega(format!("catalog lacks {}", key.member_name(j)));
        let zero = c.member(&key, 0).ok_or_else(missing)?;
        let rep = c.member(&key, j).ok_or_else(missing)?;
        let m = locate(h, zero, site)
            .ok_or_else(|| ConstructError::Omega(format!("no Upsilon_{} configuration at position {i}", site.k)))?;
        matches.push((m, rep.clone()));
    }
    replace_patterns(h, x, &matches).map_err(|e| ConstructError::Omega(e.to_string()))
}
