//! Parametric starting graphs built directly.

use crate::planar::{PlaneTriangulation, VertexId};

/// `g` (vertex 1) joined to the `k`-cycle `2..=k+1`, with `inner` the
/// triangles of `G - g` listed in any orientation.
fn cone(k: u32, inner: &[[VertexId; 3]]) -> PlaneTriangulation {
    let ring = |i: u32| 2 + i % k;
    let mut tris: Vec<[VertexId; 3]> = (0..k).map(|i| [1, ring(i + 1), ring(i)]).collect();
    tris.extend_from_slice(inner);
    PlaneTriangulation::from_triangles(1, [1, ring(1), ring(0)], &tris).expect("cone over a triangulated disk")
}

/// `G_n`: `g` over an `n`-gon triangulated as a zigzag, so each polygon
/// vertex meets at most two diagonals. The two ears sit at `2` and near the
/// opposite side.
pub fn g_n(n: u32) -> PlaneTriangulation {
    assert!(n >= 3);
    let ring = |i: u32| 2 + i % n;
    let mut tris = vec![[ring(n - 1), ring(0), ring(1)]];
    let (mut l, mut r) = (1, n - 1);
    let mut left = true;
    while l + 1 < r {
        if left {
            tris.push([ring(l), ring(l + 1), ring(r)]);
            l += 1;
        } else {
            tris.push([ring(l), ring(r - 1), ring(r)]);
            r -= 1;
        }
        left = !left;
    }
    cone(n, &tris)
}

/// `J`: `g` over a hexagon whose inner triangle uses every other vertex.
pub fn j() -> PlaneTriangulation {
    let ring = |i: u32| 2 + i % 6;
    let tris = [
        [ring(0), ring(2), ring(4)],
        [ring(0), ring(1), ring(2)],
        [ring(2), ring(3), ring(4)],
        [ring(4), ring(5), ring(0)],
    ];
    cone(6, &tris)
}

/// `F_n`. For `n ≥ 3`, `G - g` is a cycle of `2n - 2` vertices of degree 5
/// wrapped around a path `p_1 … p_n`; `F_1` and `F_2` are a triangle around
/// one vertex and around an edge.
pub fn f_n(n: u32) -> PlaneTriangulation {
    assert!(n >= 1);
    match n {
        1 => cone(3, &[[2, 3, 5], [3, 4, 5], [4, 2, 5]]),
        2 => cone(3, &[[2, 3, 5], [3, 4, 6], [3, 6, 5], [4, 2, 5], [4, 5, 6]]),
        _ => {
            let m = 2 * n - 2;
            let x = |i: u32| 2 + i % m;
            let p = |k: u32| 2 + m + k;
            // p_0 … p_{n-1} … p_1 around the cycle
            let y: Vec<VertexId> = (0..n).chain((1..n - 1).rev()).map(p).collect();
            let mut tris = Vec::new();
            for i in 0..m {
                tris.push([x(i), x(i + 1), y[i as usize]]);
                tris.push([y[i as usize], y[((i + 1) % m) as usize], x(i + 1)]);
            }
            cone(m, &tris)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{bfs_levels, check_family_membership, layer_cycle, Stratum};
    use crate::planar::{mirror_reflect, op_equivalent};

    #[test]
    fn g_n_shape() {
        for n in 3..12 {
            let t = g_n(n);
            assert_eq!(t.vertex_count(), n as usize + 1);
            assert_eq!(bfs_levels(&t).height(), 1);
            let c = check_family_membership(&t);
            assert!(c.member);
            assert_eq!(c.stratum, Some(Stratum::Cycle));
            let ears = (2..n + 2).filter(|&v| t.degree(v) == Some(3)).count();
            assert_eq!(ears, if n == 3 { 3 } else { 2 });
        }
    }

    #[test]
    fn g3_is_k4() {
        assert!(op_equivalent(&g_n(3), &crate::fixtures::k4()));
    }

    #[test]
    fn chirality() {
        assert!(op_equivalent(&g_n(4), &mirror_reflect(&g_n(4))));
        for n in [5, 7, 9] {
            assert!(op_equivalent(&g_n(n), &mirror_reflect(&g_n(n))), "G_{n}");
        }
        for n in [6, 8, 10] {
            assert!(!op_equivalent(&g_n(n), &mirror_reflect(&g_n(n))), "G_{n}");
        }
    }

    #[test]
    fn j_shape() {
        let t = j();
        assert_eq!(t.vertex_count(), 7);
        assert!(check_family_membership(&t).member);
        assert!(!op_equivalent(&t, &g_n(6)));
    }

    #[test]
    fn f_n_shape() {
        for n in 1..8 {
            let t = f_n(n);
            let c = check_family_membership(&t);
            assert!(c.member, "F_{n}: {:?}", c.violation);
            assert_eq!(c.stratum, Some(Stratum::Path(n as usize)));
            assert_eq!(c.height, 2);
            assert!(op_equivalent(&t, &mirror_reflect(&t)));
            if n >= 3 {
                assert_eq!(t.vertex_count(), 3 * n as usize - 1);
                let top = layer_cycle(&t, 2).unwrap();
                assert_eq!(top.len(), n as usize);
                for &x in &layer_cycle(&t, 1).unwrap().vertices {
                    assert_eq!(t.degree(x), Some(5));
                }
            }
        }
    }
}
