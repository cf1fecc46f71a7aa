//! Membership in the degree-bounded family, BFS levels around `g`, the layer
//! cycles `c^k`, the stratum of a member and the peeling inverse of `A`.

use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

use crate::planar::{canonical_labeling, PlaneTriangulation, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("not a member of the family: {0}")]
    NotMember(String),
    #[error("level {k} is outside 1..={height}")]
    LevelOutOfRange { k: usize, height: usize },
    #[error("level {k} is neither the expected cycle nor a path: {detail}")]
    StructureViolation { k: usize, detail: String },
    #[error("height is 1, nothing to peel")]
    HeightOne,
    #[error("result-not-simple: {0}")]
    ResultNotSimple(String),
    #[error("result-not-in-family: {0}")]
    ResultNotInFamily(String),
}

/// Distances from `g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevelStructure {
    labels: Vec<VertexId>,
    level: Vec<usize>,
    height: usize,
}

impl LevelStructure {
    pub fn height(&self) -> usize {
        self.height
    }

    pub fn level(&self, v: VertexId) -> Option<usize> {
        self.labels.binary_search(&v).ok().map(|i| self.level[i])
    }

    /// Vertices at distance `k`, ascending.
    pub fn layer(&self, k: usize) -> Vec<VertexId> {
        self.labels
            .iter()
            .zip(&self.level)
            .filter(|(_, &l)| l == k)
            .map(|(&v, _)| v)
            .collect()
    }

    pub fn layer_sizes(&self) -> Vec<usize> {
        let mut s = vec![0; self.height + 1];
        for &l in &self.level {
            s[l] += 1;
        }
        s
    }

    #[cfg(test)]
    pub(crate) fn dense(&self) -> &[usize] {
        &self.level
    }
}

pub fn bfs_levels(t: &PlaneTriangulation) -> LevelStructure {
    let level = dense_levels(t);
    let height = level.iter().copied().max().unwrap_or(0);
    LevelStructure { labels: t.vertices().to_vec(), level, height }
}

pub(crate) fn dense_levels(t: &PlaneTriangulation) -> Vec<usize> {
    let mut level = vec![usize::MAX; t.n()];
    let g = t.g_idx();
    level[g as usize] = 0;
    let mut q = VecDeque::from([g]);
    while let Some(v) = q.pop_front() {
        for &u in t.rot(v) {
            if level[u as usize] == usize::MAX {
                level[u as usize] = level[v as usize] + 1;
                q.push_back(u);
            }
        }
    }
    level
}

/// Which generating class a member belongs to: the cycle class, or the path
/// class indexed by the number of top-level vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Stratum {
    Cycle,
    Path(usize),
}

impl Stratum {
    /// 0 for the cycle class, `n` for the path class with `n` vertices.
    pub fn index(self) -> usize {
        match self {
            Stratum::Cycle => 0,
            Stratum::Path(n) => n,
        }
    }
}

impl fmt::Display for Stratum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "G{}", self.index())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyClass {
    pub member: bool,
    pub stratum: Option<Stratum>,
    pub height: usize,
    /// First violated degree bound, if any.
    pub violation: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LayerKind {
    Cycle,
    Path,
}

/// Ordered vertices of `c^k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Layer {
    pub vertices: Vec<VertexId>,
    pub kind: LayerKind,
}

impl Layer {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Cyclic access; for paths the index is clamped by the caller.
    pub fn at(&self, i: isize) -> VertexId {
        let m = self.vertices.len() as isize;
        self.vertices[i.rem_euclid(m) as usize]
    }

    pub fn position(&self, v: VertexId) -> Option<usize> {
        self.vertices.iter().position(|&x| x == v)
    }
}

fn degree_violation(t: &PlaneTriangulation) -> Option<String> {
    let g = t.g_idx();
    for v in 0..t.n() as u32 {
        if v == g {
            continue;
        }
        let d = t.deg(v);
        if d > 6 {
            return Some(format!("vertex {} has degree {d} > 6", t.label(v)));
        }
        if d > 5 && t.adjacent(v, g) {
            return Some(format!("vertex {} is adjacent to g and has degree {d} > 5", t.label(v)));
        }
    }
    None
}

pub fn check_family_membership(t: &PlaneTriangulation) -> FamilyClass {
    let levels = dense_levels(t);
    let height = levels.iter().copied().max().unwrap_or(0);
    if let Some(v) = degree_violation(t) {
        return FamilyClass { member: false, stratum: None, height, violation: Some(v) };
    }
    let stratum = top_layer(t, &levels, height).ok().map(|l| match l.kind {
        LayerKind::Cycle => Stratum::Cycle,
        LayerKind::Path => Stratum::Path(l.len()),
    });
    FamilyClass { member: true, stratum, height, violation: None }
}

/// The layer `c^k`, oriented counterclockwise. Cycles start at the vertex
/// with the least canonical position; paths start at the end with the
/// smaller canonical position.
pub fn layer_cycle(t: &PlaneTriangulation, k: usize) -> Result<Layer, FamilyError> {
    if let Some(v) = degree_violation(t) {
        return Err(FamilyError::NotMember(v));
    }
    let levels = dense_levels(t);
    let height = levels.iter().copied().max().unwrap_or(0);
    if k == 0 || k > height {
        return Err(FamilyError::LevelOutOfRange { k, height });
    }
    let dense = if k < height {
        inner_cycle(t, &levels, k)?
    } else {
        return top_layer(t, &levels, height);
    };
    Ok(Layer { vertices: start_at_least(t, dense), kind: LayerKind::Cycle })
}

/// Dense vertex order of `c^k` for `k` below the top, unrotated.
pub(crate) fn inner_cycle(
    t: &PlaneTriangulation,
    levels: &[usize],
    k: usize,
) -> Result<Vec<u32>, FamilyError> {
    let members: Vec<u32> = (0..t.n() as u32).filter(|&v| levels[v as usize] == k).collect();
    let order = walk(t, levels, k, members[0]).map_err(|detail| FamilyError::StructureViolation { k, detail })?;
    if order.len() != members.len() || order.len() < 3 {
        return Err(FamilyError::StructureViolation {
            k,
            detail: format!("walk closes after {} of {} vertices", order.len(), members.len()),
        });
    }
    Ok(order)
}

/// Follows "next neighbour after the block of lower-level neighbours" from
/// `start` until it returns.
fn walk(t: &PlaneTriangulation, levels: &[usize], k: usize, start: u32) -> Result<Vec<u32>, String> {
    let mut order = vec![start];
    let mut v = start;
    loop {
        let next = successor(t, levels, k, v)?;
        if next == start {
            return Ok(order);
        }
        if order.contains(&next) || order.len() > t.n() {
            return Err(format!("walk revisits vertex {}", t.label(next)));
        }
        order.push(next);
        v = next;
    }
}

fn successor(t: &PlaneTriangulation, levels: &[usize], k: usize, v: u32) -> Result<u32, String> {
    let r = t.rot(v);
    let low = |u: u32| levels[u as usize] + 1 == k;
    let blocks = (0..r.len()).filter(|&i| low(r[i]) && !low(r[(i + 1) % r.len()])).count();
    if blocks != 1 {
        return Err(format!("vertex {} sees {blocks} blocks of level {}", t.label(v), k - 1));
    }
    let end = (0..r.len()).find(|&i| low(r[i]) && !low(r[(i + 1) % r.len()])).unwrap();
    let next = r[(end + 1) % r.len()];
    if levels[next as usize] != k {
        return Err(format!("vertex {} leaves level {k}", t.label(v)));
    }
    Ok(next)
}

fn top_layer(t: &PlaneTriangulation, levels: &[usize], h: usize) -> Result<Layer, FamilyError> {
    let members: Vec<u32> = (0..t.n() as u32).filter(|&v| levels[v as usize] == h).collect();
    let inside = |u: u32| levels[u as usize] == h;
    let degs: Vec<usize> = members.iter().map(|&v| t.rot(v).iter().filter(|&&u| inside(u)).count()).collect();
    let edges: usize = degs.iter().sum::<usize>() / 2;
    let is_path = edges + 1 == members.len()
        && degs.iter().all(|&d| d <= 2)
        && connected(t, &members, inside);
    if is_path {
        let labels = canonical_labeling(t);
        let vertices = if members.len() == 1 {
            vec![members[0]]
        } else {
            let ends: Vec<u32> = members.iter().zip(&degs).filter(|(_, &d)| d == 1).map(|(&v, _)| v).collect();
            let start = *ends.iter().min_by_key(|&&v| labels[&t.label(v)]).unwrap();
            let mut path = vec![start];
            let mut prev = u32::MAX;
            let mut cur = start;
            while let Some(&nx) = t.rot(cur).iter().find(|&&u| inside(u) && u != prev && !path.contains(&u)) {
                path.push(nx);
                prev = cur;
                cur = nx;
            }
            path
        };
        return Ok(Layer { vertices: vertices.iter().map(|&v| t.label(v)).collect(), kind: LayerKind::Path });
    }
    if members.len() >= 3 {
        if let Ok(order) = walk(t, levels, h, members[0]) {
            if order.len() == members.len() {
                return Ok(Layer { vertices: start_at_least(t, order), kind: LayerKind::Cycle });
            }
        }
    }
    Err(FamilyError::StructureViolation {
        k: h,
        detail: format!("{} top-level vertices span neither a cycle nor an induced path", members.len()),
    })
}

fn connected(t: &PlaneTriangulation, members: &[u32], inside: impl Fn(u32) -> bool) -> bool {
    let mut seen = vec![members[0]];
    let mut stack = vec![members[0]];
    while let Some(v) = stack.pop() {
        for &u in t.rot(v) {
            if inside(u) && !seen.contains(&u) {
                seen.push(u);
                stack.push(u);
            }
        }
    }
    seen.len() == members.len()
}

fn start_at_least(t: &PlaneTriangulation, order: Vec<u32>) -> Vec<VertexId> {
    let labels = canonical_labeling(t);
    let k = (0..order.len()).min_by_key(|&i| labels[&t.label(order[i])]).unwrap();
    (0..order.len()).map(|i| t.label(order[(k + i) % order.len()])).collect()
}

/// `c(G)`: the outer cycle of `G - g`, counterclockwise, starting at the least
/// canonical position. Defined for every triangulation since it is the
/// reversed rotation at `g`.
pub fn outer_cycle(t: &PlaneTriangulation) -> Vec<VertexId> {
    let order: Vec<u32> = t.rot(t.g_idx()).iter().rev().copied().collect();
    start_at_least(t, order)
}

/// Dense outer cycle in counterclockwise order, starting anywhere.
pub(crate) fn dense_outer_cycle(t: &PlaneTriangulation) -> Vec<u32> {
    t.rot(t.g_idx()).iter().rev().copied().collect()
}

/// `G^{-1}`: delete `c(G)` and join `g` to every vertex of level 2.
pub fn peel(t: &PlaneTriangulation) -> Result<PlaneTriangulation, FamilyError> {
    if let Some(v) = degree_violation(t) {
        return Err(FamilyError::NotMember(v));
    }
    let levels = dense_levels(t);
    let height = levels.iter().copied().max().unwrap_or(0);
    if height <= 1 {
        return Err(FamilyError::HeightOne);
    }
    let g = t.g_idx();
    let second: Vec<u32> = (0..t.n() as u32).filter(|&v| levels[v as usize] == 2).collect();
    let mut new_rot: Vec<Option<Vec<u32>>> = vec![None; t.n()];
    for &v in &second {
        let r = t.rot(v);
        let low = |u: u32| levels[u as usize] == 1;
        let starts: Vec<usize> =
            (0..r.len()).filter(|&i| low(r[i]) && !low(r[(i + r.len() - 1) % r.len()])).collect();
        if starts.len() != 1 {
            return Err(FamilyError::ResultNotSimple(format!(
                "vertex {} would be joined to g {} times",
                t.label(v),
                starts.len()
            )));
        }
        let mut nr = vec![g];
        let mut i = starts[0];
        while low(r[i % r.len()]) {
            i += 1;
        }
        for k in 0..r.len() {
            let u = r[(i + k) % r.len()];
            if !low(u) {
                nr.push(u);
            }
        }
        new_rot[v as usize] = Some(nr);
    }
    let cycle = walk(t, &levels, 2, second[0]).map_err(FamilyError::ResultNotSimple)?;
    if cycle.len() != second.len() || cycle.len() < 3 {
        return Err(FamilyError::ResultNotSimple(format!(
            "level 2 has {} vertices but its boundary walk has {}",
            second.len(),
            cycle.len()
        )));
    }
    new_rot[g as usize] = Some(cycle.iter().rev().copied().collect());
    for v in 0..t.n() as u32 {
        if levels[v as usize] >= 3 {
            new_rot[v as usize] = Some(t.rot(v).to_vec());
        }
    }
    let keep: Vec<u32> = (0..t.n() as u32).filter(|&v| levels[v as usize] != 1).collect();
    let mut remap = vec![u32::MAX; t.n()];
    for (i, &v) in keep.iter().enumerate() {
        remap[v as usize] = i as u32;
    }
    let labels: Vec<VertexId> = keep.iter().map(|&v| t.label(v)).collect();
    let rot: Vec<Vec<u32>> = keep
        .iter()
        .map(|&v| new_rot[v as usize].as_ref().unwrap().iter().map(|&u| remap[u as usize]).collect())
        .collect();
    let outer = [remap[g as usize], remap[cycle[0] as usize], remap[cycle[1] as usize]];
    let peeled = PlaneTriangulation::from_dense(labels, rot, remap[g as usize], outer)
        .map_err(|e| FamilyError::ResultNotSimple(e.to_string()))?;
    if let Some(v) = degree_violation(&peeled) {
        return Err(FamilyError::ResultNotInFamily(v));
    }
    Ok(peeled)
}
