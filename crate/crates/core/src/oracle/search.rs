use std::collections::BTreeSet;

use crate::family::outer_cycle;
use crate::planar::{trace_faces, PlaneTriangulation, VertexId};
use crate::verifier::Flavor;

use super::OracleError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchConstraint {
    pub flavor: Flavor,
    /// Stop after this many solutions; 0 collects all.
    pub limit: usize,
    /// Cap on expanded search nodes.
    pub budget: u64,
}

impl SearchConstraint {
    pub fn all(flavor: Flavor) -> Self {
        SearchConstraint { flavor, limit: 0, budget: 50_000_000 }
    }

    pub fn first(flavor: Flavor) -> Self {
        SearchConstraint { flavor, limit: 1, budget: 50_000_000 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchResult {
    /// Solutions in ascending order.
    pub sets: Vec<BTreeSet<VertexId>>,
    /// The whole search space was covered.
    pub exhausted: bool,
    pub nodes: u64,
}

/// Bit-level view of a triangulation.
struct Board {
    labels: Vec<VertexId>,
    adj: Vec<Mask>,
    faces: Vec<Mask>,
    faces_at: Vec<Vec<usize>>,
    g: usize,
    /// `(x_i, x_{i+2})` pairs, for the selected directions, with `d(x_i) ≤ 4`.
    implications: Vec<(usize, usize)>,
}

type Mask = u128;

const MAX_VERTICES: usize = Mask::BITS as usize;

impl Board {
    fn new(t: &PlaneTriangulation, flavor: Flavor) -> Result<Self, OracleError> {
        let n = t.vertex_count();
        if n > MAX_VERTICES {
            return Err(OracleError::TooLarge { n, cap: MAX_VERTICES });
        }
        let labels = t.vertices().to_vec();
        let idx = |v: VertexId| labels.binary_search(&v).unwrap();
        let mut adj = vec![0 as Mask; n];
        for (a, b) in t.edges() {
            adj[idx(a)] |= 1 << idx(b);
            adj[idx(b)] |= 1 << idx(a);
        }
        let mut faces = Vec::new();
        let mut faces_at = vec![Vec::new(); n];
        for f in trace_faces(t).faces {
            let mut mask = 0 as Mask;
            for v in f {
                faces_at[idx(v)].push(faces.len());
                mask |= 1 << idx(v);
            }
            faces.push(mask);
        }
        let c: Vec<usize> = outer_cycle(t).into_iter().map(idx).collect();
        let m = c.len();
        let mut implications = Vec::new();
        for i in 0..m {
            if t.degree(labels[c[i]]).unwrap() > 4 {
                continue;
            }
            if matches!(flavor, Flavor::Compatible | Flavor::Pm) {
                implications.push((c[i], c[(i + 2) % m]));
            }
            if matches!(flavor, Flavor::Minus | Flavor::Pm) {
                implications.push((c[i], c[(i + m - 2) % m]));
            }
        }
        let g = idx(t.g());
        Ok(Board { labels, adj, faces, faces_at, g, implications })
    }

    /// Vertices reachable from `from` inside `allowed`.
    fn flood(&self, from: Mask, allowed: Mask) -> Mask {
        let mut seen = from & allowed;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            let mut f = frontier;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= self.adj[v];
            }
            next &= allowed & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }
}

struct Search<'a> {
    board: &'a Board,
    order: Vec<usize>,
    c: SearchConstraint,
    nodes: u64,
    out_of_budget: bool,
    found: Vec<Mask>,
    forced_in: Mask,
    forced_out: Mask,
}

impl Search<'_> {
    fn stop(&self) -> bool {
        self.out_of_budget || (self.c.limit > 0 && self.found.len() >= self.c.limit)
    }

    fn rec(&mut self, k: usize, inc: Mask, exc: Mask) {
        if self.stop() {
            return;
        }
        self.nodes += 1;
        if self.nodes > self.c.budget {
            self.out_of_budget = true;
            return;
        }
        let b = self.board;
        if k == self.order.len() {
            if inc != 0 {
                self.found.push(inc);
            }
            return;
        }
        let v = self.order[k];
        let bit = (1 as Mask) << v;
        let undecided = !(inc | exc) & !bit;

        // include v
        let nb = if self.forced_out & bit != 0 { 0 } else { b.adj[v] & inc };
        let mut acyclic = true;
        let mut rest = nb;
        while rest != 0 {
            let u = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let comp = b.flood(1 << u, inc);
            if comp & rest != 0 {
                acyclic = false;
                break;
            }
        }
        if self.forced_out & bit == 0 && acyclic && self.connectable(inc | bit, undecided) {
            self.rec(k + 1, inc | bit, exc);
        }

        // exclude v
        let exc2 = exc | bit;
        let covered = b.faces_at[v].iter().all(|&f| b.faces[f] & !exc2 != 0);
        let implied = b
            .implications
            .iter()
            .all(|&(x, y)| exc2 >> x & 1 == 0 || exc2 >> y & 1 == 0);
        if self.forced_in & bit == 0 && covered && implied && (inc == 0 || self.connectable(inc, undecided)) {
            self.rec(k + 1, inc, exc2);
        }
    }

    fn connectable(&self, inc: Mask, undecided: Mask) -> bool {
        if inc == 0 {
            return true;
        }
        let start = inc & inc.wrapping_neg();
        self.board.flood(start, inc | undecided) & inc == inc
    }
}

/// Branch and bound over vertex inclusion. A branch is cut only when it
/// closes an induced cycle, leaves a face without candidates, strands part
/// of the set, or breaks a required implication on `c(G)`.
pub fn enumerate_hamiltonian_sets(
    t: &PlaneTriangulation,
    c: SearchConstraint,
) -> Result<SearchResult, OracleError> {
    complete_hamiltonian_set(t, c, &BTreeSet::new(), &BTreeSet::new())
}

/// Like [`enumerate_hamiltonian_sets`], restricted to sets containing every
/// vertex of `include` and none of `exclude`.
pub fn complete_hamiltonian_set(
    t: &PlaneTriangulation,
    c: SearchConstraint,
    include: &BTreeSet<VertexId>,
    exclude: &BTreeSet<VertexId>,
) -> Result<SearchResult, OracleError> {
    if c.budget == 0 {
        return Err(OracleError::ZeroBudget);
    }
    let board = Board::new(t, c.flavor)?;
    // outer cycle first so face and implication cuts fire early
    let mut order: Vec<usize> = Vec::new();
    let cycle: Vec<usize> = outer_cycle(t).into_iter().map(|v| board.labels.binary_search(&v).unwrap()).collect();
    order.extend(&cycle);
    let mut reached: Mask = cycle.iter().fold(0, |m, &v| m | 1 << v) | 1 << board.g;
    while order.len() + 1 < board.labels.len() {
        let mut next: Vec<usize> = Vec::new();
        for &v in &order {
            let mut nb = board.adj[v] & !reached;
            while nb != 0 {
                let u = nb.trailing_zeros() as usize;
                nb &= nb - 1;
                reached |= 1 << u;
                next.push(u);
            }
        }
        order.extend(next);
    }
    let mask = |vs: &BTreeSet<VertexId>| -> Result<Mask, OracleError> {
        vs.iter().try_fold(0 as Mask, |m, v| {
            board.labels.binary_search(v).map(|i| m | 1 << i).map_err(|_| OracleError::UnknownVertex(*v))
        })
    };
    let (forced_in, forced_out) = (mask(include)?, mask(exclude)?);
    if forced_in & forced_out != 0 || forced_in >> board.g & 1 == 1 {
        return Ok(SearchResult { sets: Vec::new(), exhausted: true, nodes: 0 });
    }
    let mut s = Search {
        board: &board,
        order,
        c,
        nodes: 0,
        out_of_budget: false,
        found: Vec::new(),
        forced_in,
        forced_out,
    };
    s.rec(0, 0, 1 << board.g);
    let exhausted = !s.stop();
    let mut sets: Vec<BTreeSet<VertexId>> = s
        .found
        .iter()
        .map(|&m| (0..board.labels.len()).filter(|&i| m >> i & 1 == 1).map(|i| board.labels[i]).collect())
        .collect();
    sets.sort();
    Ok(SearchResult { sets, exhausted, nodes: s.nodes })
}

/// Every subset of `V - g`, checked against the definitions directly.
pub fn naive_hamiltonian_sets(t: &PlaneTriangulation, flavor: Flavor) -> Vec<BTreeSet<VertexId>> {
    let vs: Vec<VertexId> = t.vertices().iter().copied().filter(|&v| v != t.g()).collect();
    assert!(vs.len() < 24, "naive scan is for small graphs");
    let faces = trace_faces(t).faces;
    let edges = t.edges();
    let c = outer_cycle(t);
    let m = c.len();
    let mut out = Vec::new();
    for mask in 1u32..(1 << vs.len()) {
        let u: BTreeSet<VertexId> = (0..vs.len()).filter(|&i| mask >> i & 1 == 1).map(|i| vs[i]).collect();
        if !faces.iter().all(|f| f.iter().any(|v| u.contains(v))) {
            continue;
        }
        let inner: Vec<_> = edges.iter().filter(|(a, b)| u.contains(a) && u.contains(b)).collect();
        if inner.len() + 1 != u.len() {
            continue;
        }
        // union-find on the induced edges
        let mut parent: std::collections::HashMap<VertexId, VertexId> = u.iter().map(|&v| (v, v)).collect();
        fn root(p: &mut std::collections::HashMap<VertexId, VertexId>, v: VertexId) -> VertexId {
            let mut r = v;
            while p[&r] != r {
                r = p[&r];
            }
            r
        }
        for &&(a, b) in &inner {
            let (ra, rb) = (root(&mut parent, a), root(&mut parent, b));
            parent.insert(ra, rb);
        }
        let roots: BTreeSet<_> = u.iter().map(|&v| root(&mut parent, v)).collect();
        if roots.len() != 1 {
            continue;
        }
        let holds = |step: usize| {
            (0..m).all(|i| u.contains(&c[i]) || t.degree(c[i]).unwrap() > 4 || u.contains(&c[(i + step) % m]))
        };
        let ok = match flavor {
            Flavor::Any => true,
            Flavor::Compatible => holds(2),
            Flavor::Minus => holds(m - 2),
            Flavor::Pm => holds(2) && holds(m - 2),
        };
        if ok {
            out.push(u);
        }
    }
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{bipyramid, icosahedron, k4, octahedron};
    use crate::verifier::verify_hamiltonian_set;

    #[test]
    fn k4_sets_match_subset_scan() {
        let t = k4();
        let r = enumerate_hamiltonian_sets(&t, SearchConstraint::all(Flavor::Any)).unwrap();
        assert!(r.exhausted);
        // any two of the three vertices other than g
        assert_eq!(r.sets, naive_hamiltonian_sets(&t, Flavor::Any));
        assert_eq!(r.sets.len(), 3);
    }

    #[test]
    fn search_equals_scan_on_solids() {
        for t in [octahedron(), bipyramid(5), icosahedron()] {
            for flavor in [Flavor::Any, Flavor::Compatible, Flavor::Minus, Flavor::Pm] {
                let r = enumerate_hamiltonian_sets(&t, SearchConstraint::all(flavor)).unwrap();
                assert!(r.exhausted);
                assert_eq!(r.sets, naive_hamiltonian_sets(&t, flavor), "{flavor}");
                for s in &r.sets {
                    assert!(verify_hamiltonian_set(&t, s).satisfies(flavor));
                }
            }
        }
    }

    #[test]
    fn budget_and_limit_flags() {
        let t = icosahedron();
        let r = enumerate_hamiltonian_sets(&t, SearchConstraint { flavor: Flavor::Any, limit: 0, budget: 5 }).unwrap();
        assert!(!r.exhausted);
        let r = enumerate_hamiltonian_sets(&t, SearchConstraint::first(Flavor::Any)).unwrap();
        assert_eq!(r.sets.len(), 1);
        assert!(!r.exhausted);
        assert!(enumerate_hamiltonian_sets(&t, SearchConstraint { flavor: Flavor::Any, limit: 0, budget: 0 }).is_err());
    }

    #[test]
    fn forced_vertices_filter_the_full_list() {
        let t = icosahedron();
        let all = enumerate_hamiltonian_sets(&t, SearchConstraint::all(Flavor::Any)).unwrap().sets;
        let (inc, exc) = (BTreeSet::from([2, 7]), BTreeSet::from([3]));
        let r = complete_hamiltonian_set(&t, SearchConstraint::all(Flavor::Any), &inc, &exc).unwrap();
        assert!(r.exhausted);
        let expected: Vec<_> =
            all.into_iter().filter(|s| s.is_superset(&inc) && s.is_disjoint(&exc)).collect();
        assert!(!expected.is_empty());
        assert_eq!(r.sets, expected);
        assert!(complete_hamiltonian_set(&t, SearchConstraint::all(Flavor::Any), &BTreeSet::from([1]), &exc)
            .unwrap()
            .sets
            .is_empty());
    }

    #[test]
    fn deterministic() {
        let t = icosahedron();
        let a = enumerate_hamiltonian_sets(&t, SearchConstraint::all(Flavor::Compatible)).unwrap();
        let b = enumerate_hamiltonian_sets(&t, SearchConstraint::all(Flavor::Compatible)).unwrap();
        assert_eq!(a, b);
    }
}
