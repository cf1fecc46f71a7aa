//! Zero members and growth rules of the replacement families.

use crate::planar::VertexId;
use crate::rewrite::{edge_op_patterns, EdgeOp, Pattern};

use std::collections::BTreeMap;

use super::base::g_n;
use super::snake::{alpha, distinguished_edges, snake_configuration, snake_paths};
use super::synth::{pattern, FamilySpec, MarkRule, Moves};

const TWO_FACES: [[VertexId; 3]; 2] = [[1, 2, 0], [2, 1, 3]];
const WEDGE: [[VertexId; 3]; 4] = [[1, 4, 0], [4, 2, 0], [4, 1, 3], [2, 4, 3]];

pub(crate) fn upsilon_zero(k: u32) -> Pattern {
    match k {
        1 => pattern("Upsilon", TWO_FACES.to_vec(), &[1]),
        2 => pattern("Upsilon", TWO_FACES.to_vec(), &[1, 2]),
        3 => pattern("Upsilon", WEDGE.to_vec(), &[1, 2]),
        4 => pattern("Upsilon", TWO_FACES.to_vec(), &[2]),
        _ => unreachable!(),
    }
}

/// Faces of all triangles at `x_i, x_{i+1}, y_i, y_{i+1}` in a double layer:
/// `1, 2` are `x_i, x_{i+1}`, `3, 4` are `y_i, y_{i+1}`, `5` is `v_i`, and
/// `6..=11` are `x_{i-1}, x_{i+2}, y_{i-1}, y_{i+2}, v_{i-1}, v_{i+1}`.
pub(crate) fn lambda_faces() -> Vec<[VertexId; 3]> {
    vec![
        [6, 1, 0],
        [1, 6, 8],
        [1, 8, 3],
        [3, 8, 10],
        [1, 2, 0],
        [2, 1, 3],
        [2, 3, 4],
        [4, 3, 5],
        [2, 7, 0],
        [7, 2, 4],
        [7, 4, 9],
        [9, 4, 11],
        [3, 10, 5],
        [4, 5, 11],
    ]
}

pub(crate) fn delta_zero(k: u32) -> Pattern {
    let gamma = edge_op_patterns(EdgeOp::CBar).0.faces().to_vec();
    match k {
        1 => pattern("Delta", gamma, &[1, 4, 5]),
        2 => pattern("Delta", gamma, &[1, 2, 5]),
        3 => pattern("Delta", lambda_faces(), &[6, 10, 11, 7, 2, 3]),
        _ => unreachable!(),
    }
}

pub(crate) fn spec(family: &'static str, k: u32) -> FamilySpec {
    match family {
        "Upsilon" => FamilySpec {
            family,
            zero: upsilon_zero(k),
            apex: vec![3],
            moves: Moves::Outer,
            max_gain: if k == 2 { 3 } else { 2 },
            n: [3, 6, 5, 2][k as usize - 1],
            contains: Vec::new(),
            keep_groups: false,
            regroup: Vec::new(),
            rule: MarkRule::Replacement,
        },
        "Delta" => FamilySpec {
            family,
            zero: delta_zero(k),
            apex: if k == 3 { vec![5, 10, 11] } else { vec![5] },
            moves: Moves::Lifted,
            max_gain: if k == 2 { 3 } else { 2 },
            n: [3, 6, 6][k as usize - 1],
            contains: match k {
                3 => Vec::new(),
                _ => vec![delta_zero(k)],
            },
            keep_groups: k == 3,
            regroup: if k == 3 { vec![2] } else { Vec::new() },
            rule: MarkRule::Replacement,
        },
        _ => unreachable!(),
    }
}

/// Three faces fanned around `x = 1`: `g x v`, `x v z`, `x z y` with
/// `v = 2`, `z = 3`, `y = 4`.
const FAN: [[VertexId; 3]; 3] = [[1, 2, 0], [2, 1, 3], [3, 1, 4]];

pub(crate) fn fan_spec(k: u32) -> FamilySpec {
    let marked: &[VertexId] = if k == 5 { &[1] } else { &[2, 4] };
    FamilySpec {
        family: "Delta",
        zero: pattern("Delta", FAN.to_vec(), marked),
        apex: vec![3],
        moves: Moves::Outer,
        max_gain: 1,
        n: 1,
        contains: Vec::new(),
        keep_groups: false,
        regroup: Vec::new(),
        rule: MarkRule::Replacement,
    }
}

/// `Φ` around the first distinguished edge of the least `G_n` (`n ≥ 6`)
/// with a snake path `W` of `α_1(W) = k` whose neighbourhood induces a
/// cycle in `A(G_n)`, with `g` relabelled `0`. Also returns the images of
/// `u` and `v`.
pub(crate) fn snake_zero(k: u32) -> (Pattern, Vec<VertexId>) {
    for n in 6..=12 {
        let t = g_n(n);
        let e = distinguished_edges(&t)[0];
        for path in snake_paths(&t) {
            if alpha(&path, e) != k {
                continue;
            }
            let (faces, marked, _) = snake_configuration(n, &path, e);
            let mut ids: BTreeMap<VertexId, VertexId> = BTreeMap::from([(t.g(), 0)]);
            for v in faces.iter().flatten() {
                let next = ids.len() as VertexId;
                ids.entry(*v).or_insert(next);
            }
            let faces = faces.iter().map(|f| f.map(|v| ids[&v])).collect();
            let marked: Vec<VertexId> = marked.iter().map(|v| ids[v]).collect();
            let p = pattern("Psi", faces, &marked);
            if super::local::is_paths(&p, 1) {
                return (p, vec![ids[&e.0], ids[&e.1]]);
            }
        }
    }
    unreachable!("snake configurations exist for every α")
}

pub(crate) fn psi_spec(i: u32, k: u32) -> FamilySpec {
    let (zero, apex) = snake_zero(k);
    FamilySpec {
        family: "Psi",
        zero,
        apex,
        moves: Moves::Outer,
        max_gain: 3,
        n: 5,
        contains: Vec::new(),
        keep_groups: false,
        regroup: Vec::new(),
        rule: if i == 2 { MarkRule::Tree } else { MarkRule::TwoPaths },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::synth::survey;

    #[test]
    #[ignore]
    fn print_survey() {
        for (f, ks) in [("Upsilon", 1..=4), ("Delta", 1..=3)] {
            for k in ks {
                let s = spec(f, k);
                println!("{f} {k}: {:?}", survey(&s));
            }
        }
        for k in [5, 6] {
            println!("Delta {k}: {:?}", survey(&fan_spec(k)));
        }
        for i in [1, 2] {
            for k in 1..=4 {
                let s = psi_spec(i, k);
                println!("Psi {i} {k}: zero {} {:?} {:?}", s.zero.vertices().len(), s.zero.marked(), survey(&s));
            }
        }
    }
}
