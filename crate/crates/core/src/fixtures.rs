//! Small named triangulations used throughout tests, benches and docs.

use crate::planar::{CubicPlaneGraph, PlaneTriangulation, VertexId};

/// The tetrahedron with g=1 and outer face (1,2,3).
pub fn k4() -> PlaneTriangulation {
    PlaneTriangulation::from_rotations(
        1,
        [1, 2, 3],
        &[(1, vec![2, 4, 3]), (2, vec![3, 4, 1]), (3, vec![1, 4, 2]), (4, vec![3, 1, 2])],
    )
    .unwrap()
}

/// Bipyramid over an `m`-cycle: apexes 1 and `m+2`, ring `2..=m+1`, g=1.
pub fn bipyramid(m: u32) -> PlaneTriangulation {
    assert!(m >= 3);
    let ring = |k: u32| 2 + k % m;
    let bottom = m + 2;
    let mut tris = Vec::new();
    for k in 0..m {
        tris.push([1, ring(k), ring(k + 1)]);
        tris.push([bottom, ring(k + 1), ring(k)]);
    }
    PlaneTriangulation::from_triangles(1, [1, 2, 3], &tris).unwrap()
}

/// Octahedron: top 1, ring 2..=5, bottom 6.
pub fn octahedron() -> PlaneTriangulation {
    bipyramid(4)
}

/// Icosahedron: top 1, upper ring 2..=6, lower ring 7..=11, bottom 12.
pub fn icosahedron() -> PlaneTriangulation {
    let up = |k: u32| 2 + k % 5;
    let low = |k: u32| 7 + k % 5;
    let mut tris: Vec<[VertexId; 3]> = Vec::new();
    for k in 0..5 {
        tris.push([1, up(k), up(k + 1)]);
        tris.push([up(k), low(k), up(k + 1)]);
        tris.push([up(k + 1), low(k), low(k + 1)]);
        tris.push([12, low(k + 1), low(k)]);
    }
    PlaneTriangulation::from_triangles(1, [1, 2, 3], &tris).unwrap()
}

/// Octahedron with a vertex stacked into each face around vertex 2, giving
/// vertex 2 degree 8.
pub fn stacked_octahedron() -> PlaneTriangulation {
    let o = octahedron();
    let mut tris: Vec<[VertexId; 3]> = Vec::new();
    let mut next = 7;
    for f in crate::planar::trace_faces(&o).faces {
        if f.contains(&2) {
            let [a, b, c] = f;
            tris.extend([[a, b, next], [b, c, next], [c, a, next]]);
            next += 1;
        } else {
            tris.push(f);
        }
    }
    PlaneTriangulation::from_triangles(1, [1, 3, 4], &tris).unwrap()
}

type Segment = ((f64, f64), (f64, f64));

fn polyline(points: &[(f64, f64)], closed: bool) -> Vec<Segment> {
    let mut s: Vec<Segment> = points.windows(2).map(|w| (w[0], w[1])).collect();
    if closed {
        s.push((points[points.len() - 1], points[0]));
    }
    s
}

/// Non-hamiltonian cubic plane graph on 44 vertices: three pairwise
/// non-adjacent octagons, all other faces pentagons and hexagons.
pub fn grinberg_tutte() -> CubicPlaneGraph {
    let mut s = polyline(&[(-4.0, -4.0), (4.0, -4.0), (4.0, 4.0), (-4.0, 4.0)], true);
    s.extend(polyline(&[(-3.0, -3.0), (3.0, -3.0), (3.0, 3.0), (-3.0, 3.0)], true));
    s.extend([
        ((-4.0, -4.0), (-3.0, -3.0)),
        ((4.0, -4.0), (3.0, -3.0)),
        ((4.0, 4.0), (3.0, 3.0)),
        ((-4.0, 4.0), (-3.0, 3.0)),
        ((0.0, 4.0), (0.0, 3.0)),
        ((-3.0, 0.0), (-2.0, 0.0)),
        ((3.0, 0.0), (2.0, 0.0)),
        ((-2.0, -3.0), (-2.0, 3.0)),
        ((2.0, -3.0), (2.0, 3.0)),
        ((0.0, -2.0), (0.0, -1.0)),
        ((0.0, 2.0), (0.0, 1.0)),
    ]);
    for x in [-1.0, 1.0] {
        s.extend([((x, -3.0), (x, -2.0)), ((x, -1.0), (x, 1.0)), ((x, 2.0), (x, 3.0))]);
    }
    for y in [-2.0, -1.0, 0.0, 1.0, 2.0] {
        s.push(((-1.0, y), (1.0, y)));
    }
    // four corner vertices between the ladder and the side columns
    for (sx, sy) in [(-1.0, -1.0), (1.0, -1.0), (1.0, 1.0), (-1.0, 1.0)] {
        let c = (1.5 * sx, 1.5 * sy);
        s.extend([((sx, 2.0 * sy), c), (c, (sx, sy)), ((2.0 * sx, 1.5 * sy), c)]);
    }
    CubicPlaneGraph::from_segments(&s).expect("valid drawing")
}

/// Non-hamiltonian cubic plane graph on 42 vertices: two non-adjacent faces
/// of size 11, all other faces of size 4 or 5.
pub fn faulkner_younger() -> CubicPlaneGraph {
    let inner = [(2.0, 0.0), (2.0, 4.0), (0.0, 5.0), (-2.0, 4.0), (-2.0, 0.0), (-1.0, -2.0), (1.0, -2.0)];
    let outer = [(6.0, 0.0), (6.0, 4.0), (0.0, 7.0), (-6.0, 4.0), (-6.0, 0.0), (-2.0, -4.0), (2.0, -4.0)];
    let mut s = polyline(&inner, true);
    s.extend(polyline(&outer, true));
    s.extend([((1.0, -2.0), (2.0, -4.0)), ((-1.0, -2.0), (-2.0, -4.0)), ((0.0, 5.0), (0.0, 7.0))]);
    let wing: [Segment; 9] = [
        ((2.0, 0.0), (6.0, 0.0)),
        ((2.0, 1.0), (6.0, 1.0)),
        ((3.0, 2.0), (5.0, 2.0)),
        ((2.0, 3.0), (6.0, 3.0)),
        ((2.0, 4.0), (6.0, 4.0)),
        ((3.0, 1.0), (3.0, 3.0)),
        ((5.0, 1.0), (5.0, 3.0)),
        ((4.0, 0.0), (4.0, 1.0)),
        ((4.0, 3.0), (4.0, 4.0)),
    ];
    for side in [1.0, -1.0] {
        s.extend(wing.iter().map(|&((ax, ay), (bx, by))| ((side * ax, ay), (side * bx, by))));
    }
    CubicPlaneGraph::from_segments(&s).expect("valid drawing")
}
