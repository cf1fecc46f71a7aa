use std::fmt;

use crate::family::check_family_membership;
use crate::planar::op_equivalent;
use crate::rewrite::Pattern;
use crate::verifier::verify_hamiltonian_set;

use super::local::{
    before_is_marked, boundary_groups, contains_configuration, is_forest, is_paths, minus_violations,
};
use super::{instantiate_base_graph, Catalog, FamilyKey};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Check {
    /// σ-compatibility with the zero member.
    SigmaCompatible,
    /// The marked set dominates every proper face and avoids the anchor.
    Dominates,
    /// `|D| - e(D)` equals the zero member's.
    EdgeCount,
    /// The zero members of the first two families sit inside the member.
    SubConfiguration,
    /// Every marked component reaches the boundary, in the zero member's groups.
    BoundaryLinks,
    /// The `(-)` implication on the first layer.
    PathCondition,
    /// The marked set is a tree, or two paths.
    InducedShape,
    /// No two members of a family have the same shape.
    Distinct,
    /// A base graph belongs to the family.
    Member,
    /// A stored set passes the verifier at its flavor.
    KnownSet,
    /// A stored parametric graph matches the one built in code.
    Parametric,
}

impl Check {
    pub fn label(self) -> &'static str {
        match self {
            Check::SigmaCompatible => "a",
            Check::Dominates => "b",
            Check::EdgeCount => "c",
            Check::SubConfiguration => "d",
            Check::BoundaryLinks => "e",
            Check::PathCondition => "f",
            Check::InducedShape => "g",
            Check::Distinct => "distinct",
            Check::Member => "member",
            Check::KnownSet => "known-set",
            Check::Parametric => "parametric",
        }
    }
}

#[derive(Clone, Debug)]
pub struct CheckEntry {
    pub subject: String,
    pub check: Check,
    pub ok: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Default)]
pub struct ValidationReport {
    pub entries: Vec<CheckEntry>,
}

impl ValidationReport {
    pub fn all_pass(&self) -> bool {
        self.entries.iter().all(|e| e.ok)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckEntry> {
        self.entries.iter().filter(|e| !e.ok)
    }

    fn push(&mut self, subject: &str, check: Check, ok: bool, detail: impl Into<String>) {
        self.entries.push(CheckEntry { subject: subject.into(), check, ok, detail: detail.into() });
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in &self.entries {
            write!(f, "{} ({}) {}", if e.ok { "pass" } else { "FAIL" }, e.check.label(), e.subject)?;
            if !e.detail.is_empty() {
                write!(f, ": {}", e.detail)?;
            }
            writeln!(f)?;
        }
        let bad = self.failures().count();
        writeln!(f, "{} checks, {} failed", self.entries.len(), bad)
    }
}

fn excess(p: &Pattern) -> isize {
    p.marked().len() as isize - p.marked_edges() as isize
}

fn zero_of<'a>(c: &'a Catalog, key: &FamilyKey) -> Option<&'a Pattern> {
    let zero_key = match key.family.as_str() {
        "Psi" => FamilyKey::new("Psi", key.k, Some(2)),
        _ => key.clone(),
    };
    c.member(&zero_key, 0)
}

fn check_member(c: &Catalog, key: &FamilyKey, j: u32, p: &Pattern, r: &mut ValidationReport) {
    let name = key.member_name(j);
    let Some(zero) = zero_of(c, key) else {
        r.push(&name, Check::SigmaCompatible, false, "family has no zero member");
        return;
    };
    let is_zero = std::ptr::eq(zero, p);
    if key.family == "Op" {
        if j == 1 {
            r.push(&name, Check::SigmaCompatible, p.sigma_compatible(zero).is_some(), "");
        }
        return;
    }
    if !is_zero {
        r.push(&name, Check::SigmaCompatible, p.sigma_compatible(zero).is_some(), "");
    }
    let dominated = p.marked_dominates();
    let d_free = !p.marked().contains(&p.d());
    let detail = match (dominated, d_free) {
        (true, true) => String::new(),
        (false, _) => "a proper face has no marked vertex".into(),
        (_, false) => "anchor is marked".into(),
    };
    r.push(&name, Check::Dominates, dominated && d_free, detail);
    match key.family.as_str() {
        "Upsilon" | "Delta" => {
            let (a, b) = (excess(p), excess(zero));
            r.push(&name, Check::EdgeCount, is_forest(p) && a == b, format!("|D|-e = {a}, zero member {b}"));
            let sigma: std::collections::BTreeSet<_> = p.sigma().iter().copied().collect();
            let mut ok = p.marked_components().iter().all(|comp| !comp.is_disjoint(&sigma));
            if key.family == "Delta" && key.k == 3 && j != 2 {
                ok &= boundary_groups(p) == boundary_groups(zero);
            }
            r.push(&name, Check::BoundaryLinks, ok, "");
        }
        _ => {}
    }
    if key.family == "Delta" {
        let subs: Vec<(u32, &Pattern)> = match (key.k, j) {
            (1 | 2, _) => vec![(key.k, zero)],
            (3, 0) => [1, 2].iter().filter_map(|&k| c.member(&FamilyKey::new("Delta", k, None), 0).map(|z| (k, z))).collect(),
            _ => Vec::new(),
        };
        for (k, sub) in subs {
            r.push(&name, Check::SubConfiguration, contains_configuration(p, sub), format!("contains Delta_{k}^0"));
        }
        if key.k == 3 && (4..=6).contains(&j) {
            let bad = minus_violations(p, before_is_marked(zero));
            r.push(&name, Check::PathCondition, bad.is_empty(), format!("{bad:?}"));
        }
    }
    if key.family == "Psi" {
        let ok = match key.i {
            Some(2) => is_paths(p, 1) || (is_forest(p) && p.marked_components().len() == 1),
            _ => is_paths(p, 2),
        };
        r.push(&name, Check::InducedShape, ok, if key.i == Some(2) { "tree" } else { "two paths" });
    }
}

/// Runs every check on every pattern and base graph.
pub fn validate_catalog(c: &Catalog) -> ValidationReport {
    let mut r = ValidationReport::default();
    for (key, members) in &c.families {
        for m in members {
            check_member(c, key, m.j, &m.pattern, &mut r);
        }
        let bare: Vec<Pattern> = members.iter().map(|m| m.pattern.with_marked([])).collect();
        let clash = (0..bare.len())
            .flat_map(|a| (a + 1..bare.len()).map(move |b| (a, b)))
            .find(|&(a, b)| bare[a].same_as(&bare[b]));
        let detail = clash.map(|(a, b)| format!("members {a} and {b} coincide")).unwrap_or_default();
        r.push(&key.to_string(), Check::Distinct, clash.is_none(), detail);
    }
    for e in &c.base {
        let label = e.label();
        let class = check_family_membership(&e.graph);
        r.push(&label, Check::Member, class.member, class.violation.unwrap_or_default());
        if let (Some(set), Some(flavor)) = (&e.marked, e.flavor) {
            let rep = verify_hamiltonian_set(&e.graph, set);
            r.push(&label, Check::KnownSet, rep.satisfies(flavor), format!("flavor {flavor}"));
        }
        if matches!(e.name.as_str(), "G" | "F" | "J") || (e.name == "A" && matches!(e.param, Some(1 | 5 | 7 | 8))) {
            let built = instantiate_base_graph(&Catalog::default(), &e.name, e.param);
            let ok = built.is_ok_and(|b| op_equivalent(&b.graph, &e.graph));
            r.push(&label, Check::Parametric, ok, "");
        }
    }
    r
}
