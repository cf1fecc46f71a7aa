use std::collections::HashMap;
use std::fmt;

use super::{PlaneTriangulation, VertexId};

/// Byte string identifying a triangulation up to orientation-preserving
/// isomorphism fixing `g`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCode(Vec<u8>);

impl CanonicalCode {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn from_hex(s: &str) -> Option<Self> {
        if s.len() % 2 != 0 {
            return None;
        }
        (0..s.len())
            .step_by(2)
            .map(|i| u8::from_str_radix(&s[i..i + 2], 16).ok())
            .collect::<Option<Vec<u8>>>()
            .map(CanonicalCode)
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in &self.0 {
            write!(f, "{b:02x}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalCode({self})")
    }
}

/// Breadth-first relabelling from the dart (g, x): every vertex lists its
/// neighbours counterclockwise starting at the one it was discovered from.
/// Returns the code words and the dense-index → canonical-index map.
fn bfs_code(t: &PlaneTriangulation, x: u32, best: Option<&[u32]>) -> Option<(Vec<u32>, Vec<u32>)> {
    let n = t.n();
    let g = t.g_idx();
    let mut label = vec![u32::MAX; n];
    let mut entry = vec![u32::MAX; n];
    let mut order = Vec::with_capacity(n);
    let mut code = Vec::with_capacity(2 * t.edge_count() + n);
    label[g as usize] = 0;
    entry[g as usize] = x;
    order.push(g);
    let mut head = 0;
    let mut smaller = false;
    while head < order.len() {
        let v = order[head];
        head += 1;
        let r = t.rot(v);
        let start = t.pos(v, entry[v as usize]);
        for k in 0..r.len() {
            let u = r[(start + k) % r.len()];
            if label[u as usize] == u32::MAX {
                label[u as usize] = order.len() as u32;
                entry[u as usize] = v;
                order.push(u);
            }
            code.push(label[u as usize]);
            if !smaller {
                if let Some(b) = best {
                    let i = code.len() - 1;
                    match code[i].cmp(&b[i]) {
                        std::cmp::Ordering::Greater => return None,
                        std::cmp::Ordering::Less => smaller = true,
                        std::cmp::Ordering::Equal => {}
                    }
                }
            }
        }
        code.push(u32::MAX);
        if !smaller {
            if let Some(b) = best {
                let i = code.len() - 1;
                if code[i] != b[i] {
                    // separator sorts last, so the candidate is longer here
                    return None;
                }
            }
        }
    }
    Some((code, label))
}

fn minimizing_root(t: &PlaneTriangulation) -> (Vec<u32>, Vec<u32>) {
    let mut best: Option<(Vec<u32>, Vec<u32>)> = None;
    for &x in t.rot(t.g_idx()) {
        if let Some(cand) = bfs_code(t, x, best.as_ref().map(|b| b.0.as_slice())) {
            if best.as_ref().is_none_or(|b| cand.0 < b.0) {
                best = Some(cand);
            }
        }
    }
    best.expect("g has neighbours")
}

/// Canonical code; equal codes iff the triangulations are op-equivalent.
pub fn canonical_code(t: &PlaneTriangulation) -> CanonicalCode {
    let (code, _) = minimizing_root(t);
    let n = t.n();
    let width: u8 = if n < 0xff { 1 } else if n < 0xffff { 2 } else { 4 };
    let mut bytes = Vec::with_capacity(1 + 4 + code.len() * width as usize);
    bytes.push(width);
    bytes.extend_from_slice(&(n as u32).to_be_bytes());
    for w in code {
        let w = if w == u32::MAX { u32::MAX >> (32 - 8 * width as u32) } else { w };
        bytes.extend_from_slice(&w.to_be_bytes()[4 - width as usize..]);
    }
    CanonicalCode(bytes)
}

/// Map from vertex identifier to canonical position (g is 0).
pub fn canonical_labeling(t: &PlaneTriangulation) -> HashMap<VertexId, u32> {
    let (_, label) = minimizing_root(t);
    label.iter().enumerate().map(|(i, &l)| (t.label(i as u32), l)).collect()
}

/// Orientation-preserving isomorphism from `a` onto `b` sending g to g.
pub fn op_isomorphism(
    a: &PlaneTriangulation,
    b: &PlaneTriangulation,
) -> Option<HashMap<VertexId, VertexId>> {
    if a.n() != b.n() {
        return None;
    }
    let (ca, la) = minimizing_root(a);
    let (cb, lb) = minimizing_root(b);
    if ca != cb {
        return None;
    }
    let mut inv_b = vec![0u32; b.n()];
    for (i, &l) in lb.iter().enumerate() {
        inv_b[l as usize] = i as u32;
    }
    Some(
        la.iter()
            .enumerate()
            .map(|(i, &l)| (a.label(i as u32), b.label(inv_b[l as usize])))
            .collect(),
    )
}

/// Whether an isomorphism of `a − g` onto `b − g` preserves orientation and
/// the outer cycle.
pub fn op_equivalent(a: &PlaneTriangulation, b: &PlaneTriangulation) -> bool {
    a.n() == b.n() && a.edge_count() == b.edge_count() && canonical_code(a) == canonical_code(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{icosahedron, k4, octahedron};
    use crate::planar::mirror_reflect;
    use proptest::prelude::*;

    fn shuffled(t: &PlaneTriangulation, perm: &[u32]) -> PlaneTriangulation {
        let vs = t.vertices().to_vec();
        t.relabel(|v| perm[vs.iter().position(|&x| x == v).unwrap()] + 100).unwrap()
    }

    #[test]
    fn code_is_reflexive_and_label_free() {
        for t in [k4(), octahedron(), icosahedron()] {
            assert!(op_equivalent(&t, &t));
            let relabeled = t.relabel(|v| 3 * v + 11).unwrap();
            assert_eq!(canonical_code(&t), canonical_code(&relabeled));
            let iso = op_isomorphism(&t, &relabeled).unwrap();
            for &v in t.vertices() {
                let rv: Vec<_> = t.rotation(v).unwrap().iter().map(|u| iso[u]).collect();
                let target = relabeled.rotation(iso[&v]).unwrap();
                let k = target.iter().position(|&x| x == rv[0]).unwrap();
                let rotated: Vec<_> = (0..rv.len()).map(|i| target[(k + i) % rv.len()]).collect();
                assert_eq!(rv, rotated);
            }
        }
    }

    #[test]
    fn outer_face_choice_does_not_matter() {
        let t = icosahedron();
        let g = t.g();
        let other = t.with_g(g).unwrap();
        assert!(op_equivalent(&t, &other));
    }

    #[test]
    fn solids_are_mirror_symmetric() {
        for t in [k4(), octahedron(), icosahedron()] {
            assert!(op_equivalent(&t, &mirror_reflect(&t)));
        }
    }

    #[test]
    fn hex_round_trip() {
        let c = canonical_code(&octahedron());
        assert_eq!(CanonicalCode::from_hex(&c.to_string()), Some(c));
    }

    proptest! {
        #[test]
        fn relabel_invariance(perm in Just((0u32..12).collect::<Vec<_>>()).prop_shuffle()) {
            let t = icosahedron();
            let s = shuffled(&t, &perm);
            prop_assert_eq!(canonical_code(&t), canonical_code(&s));
            prop_assert!(op_isomorphism(&s, &t).is_some());
        }
    }
}
