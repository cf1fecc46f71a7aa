//! Hamiltonian sets by induction on height.
//!
//! A compatible set of `G` is the mirror image of a `(-)`compatible set of
//! `r(G)`. A `(-)`compatible set of `H` comes from a catalog entry, from the
//! oracle when `H` is in the base regime, or else from a compatible set `U`
//! of `H⁻²` lifted to `A²(H⁻²)` and carried onto `H`: the lift fixes every
//! vertex of `H⁻²`, and the two outer layers are completed around `U`.

mod decompose;
mod lift;
mod omega;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

use crate::catalog::{default_catalog, BaseEntry, Catalog};
use crate::family::{check_family_membership, peel, Stratum};
use crate::oracle::{complete_hamiltonian_set, OracleError, SearchConstraint};
use crate::planar::{canonical_code, mirror_reflect, op_isomorphism, CanonicalCode, PlaneTriangulation, VertexId};
use crate::rewrite::DerivationTrace;
use crate::verifier::{verify_hamiltonian_set, Flavor};

pub use decompose::decompose;
pub use lift::{double_layer, lift_level2, lifted_set, n_sets, DoubleLayer, Lift};
pub use omega::{apply_omega, m_sets, omega_bound, MSite};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstructError {
    #[error("not in the family: {0}")]
    NotInFamily(String),
    #[error("recognition failed: {0}")]
    Recognition(String),
    #[error("omega: {0}")]
    Omega(String),
    #[error("no {flavor} hamiltonian set exists (search exhausted: {exhausted})")]
    NoSet { flavor: Flavor, exhausted: bool },
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error("internal: the verifier rejected the constructed set: {0}")]
    Gate(String),
}

/// The two graphs without a compatible hamiltonian set.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Exceptional {
    P,
    Q,
}

impl fmt::Display for Exceptional {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Exceptional::P => "P",
            Exceptional::Q => "Q",
        })
    }
}

/// Positions on `c(G⁻²)` split by `N_1 … N_4`, positions on `c²(H)` split by
/// `M_1 … M_4`, and the indices chosen at `M`-sites.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SiteClassification {
    pub n_sets: [Vec<usize>; 4],
    pub m_sets: [Vec<usize>; 4],
    pub omega: BTreeMap<usize, u32>,
}

/// One step of a construction, outermost first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Stage {
    Catalog { name: String, mirrored: bool },
    Oracle { vertices: usize, flavor: Flavor, nodes: u64 },
    Mirror { vertices: usize },
    Lift { from: usize, to: usize, n_sets: [usize; 4] },
    /// `H` is `A²(H⁻²)`, and `W` is the set.
    Image,
    /// The outer two layers were completed around the lifted set.
    Completion { nodes: u64 },
    /// Completion around the lifted set failed; searched the whole graph.
    Fallback { nodes: u64 },
    /// `H⁻²` is exceptional and its plain set was lifted.
    PlainBelow(Exceptional),
}

impl fmt::Display for Stage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Stage::Catalog { name, mirrored } => write!(f, "catalog {name}{}", if *mirrored { " mirrored" } else { "" }),
            Stage::Oracle { vertices, flavor, nodes } => write!(f, "oracle n={vertices} flavor={flavor} nodes={nodes}"),
            Stage::Mirror { vertices } => write!(f, "mirror n={vertices}"),
            Stage::Lift { from, to, n_sets: [a, b, c, d] } => write!(f, "lift {from} -> {to} N={a},{b},{c},{d}"),
            Stage::Image => write!(f, "image"),
            Stage::Completion { nodes } => write!(f, "completion nodes={nodes}"),
            Stage::Fallback { nodes } => write!(f, "fallback nodes={nodes}"),
            Stage::PlainBelow(e) => write!(f, "plain-below {e}"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct ConstructionResult {
    pub set: BTreeSet<VertexId>,
    pub flavor_achieved: Flavor,
    pub trace: DerivationTrace,
    pub stages: Vec<Stage>,
    pub exception: Option<Exceptional>,
}

impl ConstructionResult {
    pub fn to_text(&self) -> String {
        let ids: Vec<String> = self.set.iter().map(|v| v.to_string()).collect();
        let mut s = format!("set={}\nflavor={}\n", ids.join(" "), self.flavor_achieved);
        if let Some(e) = self.exception {
            s += &format!("exception={e}\n");
        }
        for st in &self.stages {
            s += &format!("stage={st}\n");
        }
        s + "trace=\n" + &self.trace.to_string()
    }
}

/// Reads the `set=` line of a construction result.
pub fn parse_set_line(text: &str) -> Option<BTreeSet<VertexId>> {
    let line = text.lines().find_map(|l| l.trim().strip_prefix("set="))?;
    line.split_whitespace().map(|t| t.parse().ok()).collect()
}

struct Ctx<'a> {
    catalog: &'a Catalog,
    exceptional: Vec<(Exceptional, CanonicalCode, &'a BaseEntry)>,
    stages: Vec<Stage>,
}

fn mapped(from: &PlaneTriangulation, to: &PlaneTriangulation, set: &BTreeSet<VertexId>) -> Option<BTreeSet<VertexId>> {
    let f = op_isomorphism(from, to)?;
    Some(set.iter().map(|v| f[v]).collect())
}

fn in_base_regime(t: &PlaneTriangulation) -> bool {
    let class = check_family_membership(t);
    match class.stratum {
        Some(Stratum::Cycle) => class.height <= 2,
        Some(Stratum::Path(_)) => class.height <= 3,
        None => true,
    }
}

impl<'a> Ctx<'a> {
    fn new(catalog: &'a Catalog) -> Self {
        let exceptional = [(Exceptional::P, "P"), (Exceptional::Q, "Q")]
            .into_iter()
            .filter_map(|(x, name)| catalog.base_entry(name, None).map(|e| (x, canonical_code(&e.graph), e)))
            .collect();
        Ctx { catalog, exceptional, stages: Vec::new() }
    }

    fn exception(&self, t: &PlaneTriangulation) -> Option<(Exceptional, BTreeSet<VertexId>)> {
        let code = canonical_code(t);
        let (x, _, e) = self.exceptional.iter().find(|(_, c, _)| *c == code)?;
        Some((*x, mapped(&e.graph, t, e.marked.as_ref()?)?))
    }

    /// A catalog set for `t` that satisfies `flavor`, directly or through
    /// the mirror.
    fn lookup(&mut self, t: &PlaneTriangulation, flavor: Flavor) -> Option<BTreeSet<VertexId>> {
        let n = t.vertex_count();
        let r = mirror_reflect(t);
        let mirrored = |f: Flavor| match f {
            Flavor::Compatible => Flavor::Minus,
            Flavor::Minus => Flavor::Compatible,
            o => o,
        };
        for e in self.catalog.base.iter().filter(|e| e.graph.vertex_count() == n) {
            let (Some(set), Some(have)) = (&e.marked, e.flavor) else { continue };
            for (target, need, is_mirror) in [(t, flavor, false), (&r, mirrored(flavor), true)] {
                let ok = have == need || have == Flavor::Pm || need == Flavor::Any;
                if let Some(s) = ok.then(|| mapped(&e.graph, target, set)).flatten() {
                    self.stages.push(Stage::Catalog { name: e.label(), mirrored: is_mirror });
                    return Some(s);
                }
            }
        }
        None
    }

    fn oracle(&mut self, t: &PlaneTriangulation, flavor: Flavor) -> Result<BTreeSet<VertexId>, ConstructError> {
        let none = BTreeSet::new();
        let r = complete_hamiltonian_set(t, SearchConstraint::first(flavor), &none, &none)?;
        self.stages.push(Stage::Oracle { vertices: t.vertex_count(), flavor, nodes: r.nodes });
        r.sets.into_iter().next().ok_or(ConstructError::NoSet { flavor, exhausted: r.exhausted })
    }

    fn compatible(&mut self, t: &PlaneTriangulation) -> Result<BTreeSet<VertexId>, ConstructError> {
        if let Some(s) = self.lookup(t, Flavor::Compatible) {
            return Ok(s);
        }
        self.stages.push(Stage::Mirror { vertices: t.vertex_count() });
        // mirroring keeps identifiers
        self.minus(&mirror_reflect(t))
    }

    fn minus(&mut self, h: &PlaneTriangulation) -> Result<BTreeSet<VertexId>, ConstructError> {
        if let Some(s) = self.lookup(h, Flavor::Minus) {
            return Ok(s);
        }
        if in_base_regime(h) {
            return self.oracle(h, Flavor::Minus);
        }
        let below = peel(&peel(h).map_err(|e| ConstructError::Recognition(e.to_string()))?)
            .map_err(|e| ConstructError::Recognition(e.to_string()))?;
        let u = match self.exception(&below) {
            Some((x, plain)) => {
                self.stages.push(Stage::PlainBelow(x));
                plain
            }
            None => self.compatible(&below)?,
        };
        let lift = lift_level2(&below, &u, h)?;
        self.stages.push(Stage::Lift {
            from: below.vertex_count(),
            to: h.vertex_count(),
            n_sets: lift.sites.n_sets.clone().map(|s| s.len()),
        });
        if let Some(x) = lift.image {
            self.stages.push(Stage::Image);
            return Ok(x);
        }
        let exclude: BTreeSet<VertexId> =
            below.vertices().iter().copied().filter(|v| *v != below.g() && !u.contains(v)).collect();
        let r = complete_hamiltonian_set(h, SearchConstraint::first(Flavor::Minus), &u, &exclude)?;
        if let Some(x) = r.sets.into_iter().next() {
            self.stages.push(Stage::Completion { nodes: r.nodes });
            return Ok(x);
        }
        let none = BTreeSet::new();
        let r = complete_hamiltonian_set(h, SearchConstraint::first(Flavor::Minus), &none, &none)?;
        self.stages.push(Stage::Fallback { nodes: r.nodes });
        r.sets.into_iter().next().ok_or(ConstructError::NoSet { flavor: Flavor::Minus, exhausted: r.exhausted })
    }
}

/// Base-regime sets: catalog entries first, then the exhaustive search.
pub fn base_case_lookup(
    c: &Catalog,
    t: &PlaneTriangulation,
    flavor: Flavor,
) -> Result<ConstructionResult, ConstructError> {
    let mut ctx = Ctx::new(c);
    let set = match ctx.lookup(t, flavor) {
        Some(s) => s,
        None => ctx.oracle(t, flavor)?,
    };
    finish(t, set, flavor, ctx.stages, None)
}

fn finish(
    t: &PlaneTriangulation,
    set: BTreeSet<VertexId>,
    flavor: Flavor,
    stages: Vec<Stage>,
    exception: Option<Exceptional>,
) -> Result<ConstructionResult, ConstructError> {
    let report = verify_hamiltonian_set(t, &set);
    if !report.satisfies(flavor) {
        return Err(ConstructError::Gate(report.to_key_values()));
    }
    let trace = decompose(t)?;
    Ok(ConstructionResult { set, flavor_achieved: flavor, trace, stages, exception })
}

/// A hamiltonian set of `t` with the requested flavor, using the shipped
/// catalog. See [`construct_with_catalog`].
pub fn construct_hamiltonian_set(t: &PlaneTriangulation, flavor: Flavor) -> Result<ConstructionResult, ConstructError> {
    construct_with_catalog(default_catalog(), t, flavor)
}

/// For `compatible` and `any` this is the induction; on `P` and `Q` a
/// compatible request returns their plain set with the exception marked.
/// `minus` runs the induction on the mirror image. `pm` uses catalog
/// entries and otherwise the exhaustive search, which reports when no such
/// set exists. Every returned set has passed the verifier.
pub fn construct_with_catalog(
    c: &Catalog,
    t: &PlaneTriangulation,
    flavor: Flavor,
) -> Result<ConstructionResult, ConstructError> {
    let class = check_family_membership(t);
    if !class.member {
        return Err(ConstructError::NotInFamily(class.violation.unwrap_or_default()));
    }
    let mut ctx = Ctx::new(c);
    match flavor {
        Flavor::Compatible | Flavor::Any => {
            if let Some((x, plain)) = ctx.exception(t) {
                return finish(t, plain, Flavor::Any, vec![Stage::Catalog { name: x.to_string(), mirrored: false }], Some(x));
            }
            let set = ctx.compatible(t)?;
            finish(t, set, Flavor::Compatible, ctx.stages, None)
        }
        Flavor::Minus => {
            let r = mirror_reflect(t);
            let set = match ctx.exception(&r) {
                Some(_) => ctx.oracle(t, Flavor::Minus)?,
                None => {
                    ctx.stages.push(Stage::Mirror { vertices: t.vertex_count() });
                    ctx.compatible(&r)?
                }
            };
            finish(t, set, Flavor::Minus, ctx.stages, None)
        }
        Flavor::Pm => {
            let set = match ctx.lookup(t, Flavor::Pm) {
                Some(s) => s,
                None => ctx.oracle(t, Flavor::Pm)?,
            };
            finish(t, set, Flavor::Pm, ctx.stages, None)
        }
    }
}
