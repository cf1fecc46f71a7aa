//! Shared inputs for the benchmarks.

use barnette::planar::PlaneTriangulation;
use barnette::rewrite::enumerate_family;

/// Every class with exactly `n` vertices.
pub fn classes_of_size(n: usize) -> Vec<PlaneTriangulation> {
    enumerate_family(n).into_iter().filter(|c| c.graph.vertex_count() == n).map(|c| c.graph).collect()
}
