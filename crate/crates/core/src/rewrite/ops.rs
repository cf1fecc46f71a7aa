use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use crate::family::{bfs_levels, check_family_membership, dense_outer_cycle};
use crate::planar::{PlaneTriangulation, VertexId};

use super::{match_configuration, replace_patterns, Pattern, Region, RewriteError};

/// The four local operations on an edge `x_i x_{i+1}` of `c(G)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EdgeOp {
    B,
    C,
    BBar,
    CBar,
}

impl EdgeOp {
    pub const ALL: [EdgeOp; 4] = [EdgeOp::B, EdgeOp::C, EdgeOp::BBar, EdgeOp::CBar];
}

impl fmt::Display for EdgeOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EdgeOp::B => "B",
            EdgeOp::C => "C",
            EdgeOp::BBar => "Bbar",
            EdgeOp::CBar => "Cbar",
        })
    }
}

impl FromStr for EdgeOp {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "B" => Ok(EdgeOp::B),
            "C" => Ok(EdgeOp::C),
            "Bbar" => Ok(EdgeOp::BBar),
            "Cbar" => Ok(EdgeOp::CBar),
            _ => Err(format!("unknown operation {s:?}")),
        }
    }
}

// pattern-local names
const G: VertexId = 0;
const A: VertexId = 1;
const B: VertexId = 2;
const Y1: VertexId = 3;
const Y2: VertexId = 4;
const V: VertexId = 5;
const W: VertexId = 6;
const P: VertexId = 7;

fn build(name: &str, faces: Vec<[VertexId; 3]>) -> Pattern {
    Pattern::new(name, faces, G, [], Region::Unbounded).expect("operation pattern")
}

/// Configuration and replacement pattern of an operation. In both, `0` is
/// the anchor (matched to `g`), `1` and `2` are `x_i` and `x_{i+1}`.
pub fn edge_op_patterns(op: EdgeOp) -> &'static (Pattern, Pattern) {
    static CELLS: [OnceLock<(Pattern, Pattern)>; 4] =
        [OnceLock::new(), OnceLock::new(), OnceLock::new(), OnceLock::new()];
    let i = op as usize;
    CELLS[i].get_or_init(|| match op {
        EdgeOp::B => (
            build("Gamma_B", vec![[A, B, G]]),
            build("Delta_1", vec![[A, B, W], [B, G, W], [G, A, W]]),
        ),
        EdgeOp::C => (
            build("Gamma_C", vec![[A, B, G], [B, A, Y1]]),
            build("Delta_2", vec![[A, Y1, W], [Y1, B, W], [B, G, W], [G, A, W]]),
        ),
        EdgeOp::BBar => (
            build("Gamma_Bbar", vec![[A, B, G], [B, A, Y1], [B, Y1, Y2]]),
            build(
                "Delta_3",
                vec![[G, A, P], [B, G, P], [A, Y1, P], [Y1, Y2, W], [Y2, B, W], [P, Y1, W], [P, W, B]],
            ),
        ),
        EdgeOp::CBar => (
            build("Gamma_Cbar", vec![[A, B, G], [B, A, Y1], [B, Y1, Y2], [Y2, Y1, V]]),
            build(
                "Delta_4",
                vec![
                    [G, A, P],
                    [B, G, P],
                    [A, Y1, P],
                    [P, Y1, W],
                    [P, W, B],
                    [Y2, B, W],
                    [Y1, V, W],
                    [V, Y2, W],
                ],
            ),
        ),
    })
}

/// `A(G)`: a new layer of `|c(G)|` vertices of degree 5 around `c(G)`.
/// New identifiers are allocated above the maximum, following `c(G)`.
pub fn apply_a(t: &PlaneTriangulation) -> PlaneTriangulation {
    let ys = crate::family::outer_cycle(t);
    let m = ys.len();
    let first = t.max_vertex() + 1;
    let x = |i: usize| first + (i % m) as VertexId;
    let g = t.g();
    let mut rotations: Vec<(VertexId, Vec<VertexId>)> = Vec::with_capacity(t.vertex_count() + m);
    let pos: std::collections::HashMap<VertexId, usize> = ys.iter().enumerate().map(|(i, &y)| (y, i)).collect();
    for &v in t.vertices() {
        if v == g {
            continue;
        }
        let r = t.rotation(v).unwrap();
        let nr = match pos.get(&v) {
            Some(&i) => r
                .into_iter()
                .flat_map(|u| if u == g { vec![x(i), x(i + 1)] } else { vec![u] })
                .collect(),
            None => r,
        };
        rotations.push((v, nr));
    }
    for i in 0..m {
        let prev = x(i + m - 1);
        rotations.push((x(i), vec![prev, g, x(i + 1), ys[i], ys[(i + m - 1) % m]]));
    }
    rotations.push((g, (0..m).rev().map(x).collect()));
    PlaneTriangulation::from_rotations(g, [g, x(0), x(1)], &rotations).expect("layer addition keeps a triangulation")
}

fn degree(t: &PlaneTriangulation, v: VertexId) -> usize {
    t.degree(v).unwrap()
}

/// Applies `op` at edge `site` of `c(G)` after checking the site conditions.
pub fn apply_edge_operation(
    t: &PlaneTriangulation,
    op: EdgeOp,
    site: usize,
) -> Result<PlaneTriangulation, RewriteError> {
    let len = dense_outer_cycle(t).len();
    if site >= len {
        return Err(RewriteError::SiteOutOfRange { site, len });
    }
    let fail = |msg: String| RewriteError::Precondition { op: op.to_string(), site, msg };
    let (gamma, delta) = edge_op_patterns(op);
    let m = match_configuration(t, gamma, site).ok_or_else(|| fail("configuration not present".into()))?;
    let img = |v| m.image(v).unwrap();
    let levels = bfs_levels(t);
    let at_most = |v: VertexId, d: usize, what: &str| {
        let dv = degree(t, img(v));
        if dv > d {
            Err(fail(format!("d({what})={dv} exceeds {d}")))
        } else {
            Ok(())
        }
    };
    let on_level = |v: VertexId, k: usize, what: &str| {
        let l = levels.level(img(v)).unwrap();
        if l != k {
            Err(fail(format!("{what} lies on level {l}, not {k}")))
        } else {
            Ok(())
        }
    };
    match op {
        EdgeOp::B => {
            at_most(A, 4, "x_i")?;
            at_most(B, 4, "x_i+1")?;
        }
        EdgeOp::C => {
            on_level(Y1, 2, "y_i")?;
            at_most(Y1, 5, "y_i")?;
        }
        EdgeOp::BBar => {
            on_level(Y1, 2, "y_i")?;
            on_level(Y2, 2, "y_i+1")?;
            at_most(Y1, 5, "y_i")?;
            at_most(Y2, 5, "y_i+1")?;
        }
        EdgeOp::CBar => {
            on_level(Y1, 2, "y_i")?;
            on_level(Y2, 2, "y_i+1")?;
            on_level(V, 3, "v_i")?;
            at_most(V, 5, "v_i")?;
        }
    }
    let (result, _) = replace_patterns(t, &BTreeSet::new(), &[(m, delta.clone())])?;
    let class = check_family_membership(&result);
    if !class.member || class.stratum.is_none() {
        return Err(RewriteError::NotInFamily(
            class.violation.unwrap_or_else(|| "top layer is neither a cycle nor a path".into()),
        ));
    }
    Ok(result)
}
