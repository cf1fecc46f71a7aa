use std::collections::{BTreeMap, HashSet};

use rayon::prelude::*;

use crate::catalog::{f_n, g_n};
use crate::family::dense_outer_cycle;
use crate::planar::{canonical_code, CanonicalCode, PlaneTriangulation};

use super::{apply_edge_operation, DerivationTrace, EdgeOp, Step};

/// One op-equivalence class with a representative and how it was reached.
#[derive(Clone, Debug)]
pub struct EnumeratedClass {
    pub code: CanonicalCode,
    pub graph: PlaneTriangulation,
    pub trace: DerivationTrace,
}

/// Every graph one generating step away: `A`, and `B`, `C` at each site
/// where they apply.
pub fn children(t: &PlaneTriangulation) -> Vec<(Step, PlaneTriangulation)> {
    let m = dense_outer_cycle(t).len();
    let mut out = vec![(Step::A, Step::A.apply(t).unwrap())];
    for op in [EdgeOp::B, EdgeOp::C] {
        for site in 0..m {
            let s = Step::Edge(op, site);
            if let Ok(c) = s.apply(t) {
                out.push((s, c));
            }
        }
    }
    out
}

/// All classes reachable from `starts` with at most `max_vertices`
/// vertices, ordered by vertex count and then by code. Every operation adds
/// vertices, so graphs are processed one vertex count at a time and each
/// count's frontier is expanded in parallel.
pub fn enumerate(
    starts: Vec<(DerivationTrace, PlaneTriangulation)>,
    max_vertices: usize,
) -> Vec<EnumeratedClass> {
    let mut buckets: BTreeMap<usize, Vec<EnumeratedClass>> = BTreeMap::new();
    let mut seen: HashSet<CanonicalCode> = HashSet::new();
    let mut admit = |buckets: &mut BTreeMap<usize, Vec<EnumeratedClass>>, trace, graph: PlaneTriangulation| {
        if graph.vertex_count() > max_vertices {
            return;
        }
        let code = canonical_code(&graph);
        if seen.insert(code.clone()) {
            buckets.entry(graph.vertex_count()).or_default().push(EnumeratedClass { code, graph, trace });
        }
    };
    for (trace, graph) in starts {
        admit(&mut buckets, trace, graph);
    }
    let mut done = Vec::new();
    while let Some((_, mut level)) = buckets.pop_first() {
        level.sort_by(|a, b| a.code.cmp(&b.code));
        let kids: Vec<Vec<(Step, PlaneTriangulation)>> = level
            .par_iter()
            .map(|c| {
                children(&c.graph).into_iter().filter(|(_, g)| g.vertex_count() <= max_vertices).collect()
            })
            .collect();
        for (parent, ks) in level.iter().zip(kids) {
            for (step, g) in ks {
                admit(&mut buckets, parent.trace.then(step), g);
            }
        }
        done.extend(level);
    }
    done
}

/// The starting graphs with at most `max_vertices` vertices: `G_3` and
/// every `F_n` that fits.
pub fn family_starts(max_vertices: usize) -> Vec<(DerivationTrace, PlaneTriangulation)> {
    let mut out = vec![(DerivationTrace::new("G", Some(3)), g_n(3))];
    for k in 1.. {
        let f = f_n(k);
        if f.vertex_count() > max_vertices {
            break;
        }
        out.push((DerivationTrace::new("F", Some(k)), f));
    }
    out
}

/// Every class of the family with at most `max_vertices` vertices.
pub fn enumerate_family(max_vertices: usize) -> Vec<EnumeratedClass> {
    enumerate(family_starts(max_vertices), max_vertices)
}

/// Every class generated from `start` by the given edge operations alone,
/// `start` included, keyed by canonical code.
pub fn closure(start: &PlaneTriangulation, ops: &[EdgeOp]) -> BTreeMap<CanonicalCode, PlaneTriangulation> {
    let mut seen = BTreeMap::from([(canonical_code(start), start.clone())]);
    let mut stack = vec![start.clone()];
    while let Some(t) = stack.pop() {
        let m = dense_outer_cycle(&t).len();
        for &op in ops {
            for site in 0..m {
                if let Ok(c) = apply_edge_operation(&t, op, site) {
                    if let std::collections::btree_map::Entry::Vacant(e) = seen.entry(canonical_code(&c)) {
                        e.insert(c.clone());
                        stack.push(c);
                    }
                }
            }
        }
    }
    seen
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::check_family_membership;
    use crate::fixtures::k4;
    use crate::planar::op_equivalent;

    fn from_g3(n: usize) -> Vec<EnumeratedClass> {
        enumerate(vec![(DerivationTrace::new("G", Some(3)), k4())], n)
    }

    #[test]
    fn smallest_classes() {
        let v = from_g3(5);
        assert_eq!(v.len(), 2);
        assert_eq!(v[0].graph.vertex_count(), 4);
        assert_eq!(v[1].trace.steps, vec![Step::Edge(EdgeOp::B, 0)]);
    }

    #[test]
    fn members_and_replays() {
        for c in from_g3(9) {
            assert!(check_family_membership(&c.graph).member);
            let back = c.trace.replay(|_, _| Some(k4())).unwrap();
            assert!(op_equivalent(&back, &c.graph));
        }
    }

    #[test]
    fn codes_are_distinct_and_sorted() {
        let v = from_g3(9);
        let codes: HashSet<_> = v.iter().map(|c| c.code.clone()).collect();
        assert_eq!(codes.len(), v.len());
        assert!(v.windows(2).all(|w| w[0].graph.vertex_count() <= w[1].graph.vertex_count()));
    }
}
