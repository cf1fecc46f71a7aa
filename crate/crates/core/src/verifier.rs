//! Definition-level checks of hamiltonian sets and derivations.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;

use crate::family::outer_cycle;
use crate::planar::{op_equivalent, trace_faces, PlaneTriangulation, VertexId};
use crate::rewrite::DerivationTrace;

/// Which directional condition on `c(G)` a set must meet.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Flavor {
    Any,
    Compatible,
    Minus,
    Pm,
}

impl fmt::Display for Flavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Flavor::Any => "any",
            Flavor::Compatible => "compat",
            Flavor::Minus => "minus",
            Flavor::Pm => "pm",
        })
    }
}

impl FromStr for Flavor {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "any" => Ok(Flavor::Any),
            "compat" | "compatible" => Ok(Flavor::Compatible),
            "minus" => Ok(Flavor::Minus),
            "pm" => Ok(Flavor::Pm),
            _ => Err(format!("unknown flavor {s:?} (expected any, compat, minus or pm)")),
        }
    }
}

/// First reason a set fails to be hamiltonian.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HamiltonianFailure {
    UnknownVertex(VertexId),
    ContainsG,
    Empty,
    MissingFace([VertexId; 3]),
    Cycle,
    Disconnected,
}

impl fmt::Display for HamiltonianFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HamiltonianFailure::UnknownVertex(v) => write!(f, "unknown-vertex {v}"),
            HamiltonianFailure::ContainsG => write!(f, "contains-g"),
            HamiltonianFailure::Empty => write!(f, "empty"),
            HamiltonianFailure::MissingFace([a, b, c]) => write!(f, "missing-face {a} {b} {c}"),
            HamiltonianFailure::Cycle => write!(f, "cycle-in-induced"),
            HamiltonianFailure::Disconnected => write!(f, "disconnected"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompatibilityReport {
    pub is_hamiltonian: bool,
    pub failure: Option<HamiltonianFailure>,
    pub compatible: bool,
    pub minus_compatible: bool,
    pub pm: bool,
    /// Positions `i` on `c(G)` where the compatible implication fails.
    pub compatible_witnesses: Vec<usize>,
    pub minus_witnesses: Vec<usize>,
    pub outer_cycle: Vec<VertexId>,
}

impl CompatibilityReport {
    pub fn satisfies(&self, flavor: Flavor) -> bool {
        self.is_hamiltonian
            && match flavor {
                Flavor::Any => true,
                Flavor::Compatible => self.compatible,
                Flavor::Minus => self.minus_compatible,
                Flavor::Pm => self.pm,
            }
    }

    /// `key=value` lines.
    pub fn to_key_values(&self) -> String {
        let list = |v: &[usize]| v.iter().map(usize::to_string).collect::<Vec<_>>().join(" ");
        let mut s = format!("is_hamiltonian={}\n", self.is_hamiltonian);
        if let Some(f) = &self.failure {
            s += &format!("failure={f}\n");
        }
        s += &format!("compatible={}\n", self.compatible);
        s += &format!("minus_compatible={}\n", self.minus_compatible);
        s += &format!("pm={}\n", self.pm);
        s += &format!("compatible_witnesses={}\n", list(&self.compatible_witnesses));
        s += &format!("minus_witnesses={}\n", list(&self.minus_witnesses));
        s
    }
}

fn hamiltonian_failure(t: &PlaneTriangulation, u: &BTreeSet<VertexId>) -> Option<HamiltonianFailure> {
    if let Some(&v) = u.iter().find(|&&v| !t.contains(v)) {
        return Some(HamiltonianFailure::UnknownVertex(v));
    }
    if u.contains(&t.g()) {
        return Some(HamiltonianFailure::ContainsG);
    }
    if u.is_empty() {
        return Some(HamiltonianFailure::Empty);
    }
    for f in trace_faces(t).faces {
        if !f.iter().any(|v| u.contains(v)) {
            return Some(HamiltonianFailure::MissingFace(f));
        }
    }
    let edges = t.edges().iter().filter(|(a, b)| u.contains(a) && u.contains(b)).count();
    let start = *u.iter().next().unwrap();
    let mut seen = HashSet::from([start]);
    let mut stack = vec![start];
    while let Some(v) = stack.pop() {
        for w in t.rotation(v).unwrap() {
            if u.contains(&w) && seen.insert(w) {
                stack.push(w);
            }
        }
    }
    if seen.len() != u.len() {
        return Some(HamiltonianFailure::Disconnected);
    }
    if edges != u.len() - 1 {
        return Some(HamiltonianFailure::Cycle);
    }
    None
}

/// Positions `i` where `x_i ∉ U`, `d(x_i) ≤ 4` and `x_{i+step} ∉ U`.
fn violations(t: &PlaneTriangulation, c: &[VertexId], u: &BTreeSet<VertexId>, step: isize) -> Vec<usize> {
    let m = c.len() as isize;
    (0..c.len())
        .filter(|&i| {
            let x = c[i];
            let ahead = c[((i as isize + step) % m + m) as usize % c.len()];
            !u.contains(&x) && t.degree(x).unwrap() <= 4 && !u.contains(&ahead)
        })
        .collect()
}

pub fn verify_hamiltonian_set(t: &PlaneTriangulation, u: &BTreeSet<VertexId>) -> CompatibilityReport {
    let failure = hamiltonian_failure(t, u);
    let c = outer_cycle(t);
    let compatible_witnesses = violations(t, &c, u, 2);
    let minus_witnesses = violations(t, &c, u, -2);
    let compatible = compatible_witnesses.is_empty();
    let minus_compatible = minus_witnesses.is_empty();
    CompatibilityReport {
        is_hamiltonian: failure.is_none(),
        failure,
        compatible,
        minus_compatible,
        pm: compatible && minus_compatible,
        compatible_witnesses,
        minus_witnesses,
        outer_cycle: c,
    }
}

/// Outcome of replaying a trace against a target.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivationCheck {
    pub ok: bool,
    /// 1-based index of the step that failed, 0 for the start.
    pub failed_step: Option<usize>,
    pub message: String,
}

pub fn verify_derivation(
    trace: &DerivationTrace,
    target: &PlaneTriangulation,
    resolve: impl Fn(&str, Option<u32>) -> Option<PlaneTriangulation>,
) -> DerivationCheck {
    match trace.replay(resolve) {
        Ok(t) if op_equivalent(&t, target) => {
            DerivationCheck { ok: true, failed_step: None, message: "replay matches target".into() }
        }
        Ok(_) => DerivationCheck {
            ok: false,
            failed_step: None,
            message: "replay is not op-equivalent to the target".into(),
        },
        Err(crate::rewrite::RewriteError::Replay { step, msg }) => {
            DerivationCheck { ok: false, failed_step: Some(step), message: msg }
        }
        Err(e) => DerivationCheck { ok: false, failed_step: Some(0), message: e.to_string() },
    }
}
