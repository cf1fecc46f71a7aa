//! Builds the shipped catalog from first principles and keeps the files in
//! `catalog/` in step with it. Set `BARNETTE_WRITE_CATALOG=1` to rewrite them.

use std::collections::BTreeSet;

use crate::family::{bfs_levels, outer_cycle};
use crate::oracle::{enumerate_hamiltonian_sets, SearchConstraint};
use crate::planar::{canonical_code, PlaneTriangulation, VertexId};
use crate::rewrite::{apply_a, apply_edge_operation, closure, edge_op_patterns, DerivationTrace, EdgeOp, Pattern};
use crate::verifier::Flavor;

use super::specs::{fan_spec, psi_spec, spec};
use super::synth::synthesize;
use super::{f_n, g_n, j, BaseEntry, Catalog, FamilyKey, Member};

fn least_set(t: &PlaneTriangulation, flavor: Flavor) -> Option<BTreeSet<VertexId>> {
    let r = enumerate_hamiltonian_sets(t, SearchConstraint::all(flavor)).expect("small graph");
    assert!(r.exhausted);
    r.sets.into_iter().min_by_key(|s| (s.len(), s.clone()))
}

fn entry(name: &str, param: Option<u32>, graph: PlaneTriangulation, flavor: Flavor) -> BaseEntry {
    let marked = least_set(&graph, flavor).unwrap_or_else(|| panic!("{name} {param:?} has no {flavor} set"));
    BaseEntry { name: name.into(), param, graph, marked: Some(marked), flavor: Some(flavor) }
}

fn traced(text: &str) -> PlaneTriangulation {
    let t: DerivationTrace = text.parse().expect("trace");
    t.replay(|name, n| super::instantiate_base_graph(&Catalog::default(), name, n).ok().map(|e| e.graph))
        .expect("trace replays")
}

/// Least class, by canonical code, among the graphs reachable from `t` by at
/// most `steps` applications of `op` that satisfy `keep`.
fn least_reachable(
    t: &PlaneTriangulation,
    op: EdgeOp,
    steps: usize,
    keep: impl Fn(&PlaneTriangulation) -> bool,
) -> PlaneTriangulation {
    let mut layer = vec![t.clone()];
    let mut hits = Vec::new();
    for _ in 0..steps {
        let mut next = Vec::new();
        for s in &layer {
            for site in 0..outer_cycle(s).len() {
                if let Ok(c) = apply_edge_operation(s, op, site) {
                    if keep(&c) {
                        hits.push(c.clone());
                    }
                    next.push(c);
                }
            }
        }
        layer = next;
    }
    hits.into_iter().min_by_key(canonical_code).expect("a candidate exists")
}

fn deg(t: &PlaneTriangulation, v: VertexId) -> usize {
    t.degree(v).unwrap()
}

/// `A²(P)` with `C̄` once under each third-layer vertex of degree 5.
fn d_graph() -> PlaneTriangulation {
    let p = traced("start G 3\nstep A\nstep C 0\nstep C 1\nstep C 1");
    let a2 = apply_a(&apply_a(&p));
    let low: Vec<VertexId> = outer_cycle(&p).into_iter().filter(|&v| deg(&a2, v) == 5).collect();
    assert_eq!(low.len(), 3);
    least_reachable(&a2, EdgeOp::CBar, 3, |c| low.iter().all(|&v| deg(c, v) == 6))
}

/// `D` after one `C` whose apex, on the second layer, has degree 5.
fn e_graph(d: &PlaneTriangulation) -> PlaneTriangulation {
    let low: Vec<VertexId> = bfs_levels(d).layer(2).into_iter().filter(|&v| deg(d, v) == 5).collect();
    least_reachable(d, EdgeOp::C, 1, |c| low.iter().any(|&v| deg(c, v) == 6))
}

/// `A²(G_3)` after two `C̄` under the same third-layer vertex.
fn r_graph() -> PlaneTriangulation {
    let g3 = g_n(3);
    let a2 = apply_a(&apply_a(&g3));
    let vs = outer_cycle(&g3);
    least_reachable(&a2, EdgeOp::CBar, 2, |c| vs.iter().any(|&v| deg(c, v) == deg(&a2, v) + 2))
}

/// The class generated from `A(G_7)` by `B` and `C` with no `(±)` set.
fn h7() -> PlaneTriangulation {
    let all = closure(&apply_a(&g_n(7)), &[EdgeOp::B, EdgeOp::C]);
    let bad: Vec<&PlaneTriangulation> = all.values().filter(|t| least_set(t, Flavor::Pm).is_none()).collect();
    assert_eq!(bad.len(), 1, "exactly one class lacks a (±) set");
    bad[0].clone()
}

fn base_entries() -> Vec<BaseEntry> {
    let mut out = Vec::new();
    for n in 3..=9 {
        out.push(entry("G", Some(n), g_n(n), Flavor::Pm));
    }
    out.push(entry("J", None, j(), Flavor::Pm));
    for n in 1..=4 {
        out.push(entry("F", Some(n), f_n(n), Flavor::Pm));
    }
    for (k, g) in [(1, g_n(3)), (5, g_n(4)), (7, g_n(5)), (8, j())] {
        out.push(entry("A", Some(k), apply_a(&g), Flavor::Pm));
    }
    out.push(entry("A", Some(4), traced("start G 3\nstep A\nstep C 0\nstep C 0\nstep C 2\nstep C 2\nstep C 1\nstep C 1"), Flavor::Minus));
    out.push(entry("P", None, traced("start G 3\nstep A\nstep C 0\nstep C 1\nstep C 1"), Flavor::Any));
    out.push(entry("Q", None, traced("start F 1\nstep A\nstep C 0\nstep C 1\nstep C 1"), Flavor::Any));
    out.push(entry("H", Some(7), h7(), Flavor::Compatible));
    let d = d_graph();
    out.push(entry("E", None, e_graph(&d), Flavor::Pm));
    out.push(entry("D", None, d, Flavor::Pm));
    out.push(entry("R", None, r_graph(), Flavor::Pm));
    out
}

fn family(c: &mut Catalog, key: FamilyKey, members: Vec<Pattern>) {
    let n = key.max_index().unwrap() as usize;
    assert!(members.len() > n, "{key}: only {} members", members.len());
    let ms = members.into_iter().take(n + 1).enumerate().map(|(j, pattern)| Member { j: j as u32, pattern }).collect();
    c.families.insert(key, ms);
}

pub(crate) fn build() -> Catalog {
    let mut c = Catalog { base: base_entries(), ..Default::default() };
    for k in 1..=4 {
        family(&mut c, FamilyKey::new("Upsilon", k, None), synthesize(&spec("Upsilon", k)));
    }
    for k in 1..=3 {
        family(&mut c, FamilyKey::new("Delta", k, None), synthesize(&spec("Delta", k)));
    }
    for k in [5, 6] {
        family(&mut c, FamilyKey::new("Delta", k, None), synthesize(&fan_spec(k)));
    }
    for i in [1, 2] {
        for k in 1..=4 {
            family(&mut c, FamilyKey::new("Psi", k, Some(i)), synthesize(&psi_spec(i, k)));
        }
    }
    for (k, op) in (1..).zip(EdgeOp::ALL) {
        let (gamma, delta) = edge_op_patterns(op);
        family(&mut c, FamilyKey::new("Op", k, None), vec![gamma.clone(), delta.clone()]);
    }
    c
}

#[test]
fn shipped_files_match_the_generator() {
    let files = build().to_files();
    let dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("catalog");
    if std::env::var_os("BARNETTE_WRITE_CATALOG").is_some() {
        for (name, text) in &files {
            std::fs::write(dir.join(name), text).unwrap();
        }
        return;
    }
    for ((name, text), (shipped_name, shipped)) in files.iter().zip(super::SHIPPED) {
        assert_eq!(name, shipped_name);
        assert!(text == shipped, "{name} is stale; rerun with BARNETTE_WRITE_CATALOG=1");
    }
}

