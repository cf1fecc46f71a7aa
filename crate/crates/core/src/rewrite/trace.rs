use std::fmt;
use std::str::FromStr;

use crate::planar::PlaneTriangulation;

use super::{apply_a, apply_edge_operation, EdgeOp, RewriteError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    A,
    Edge(EdgeOp, usize),
}

impl Step {
    pub fn apply(self, t: &PlaneTriangulation) -> Result<PlaneTriangulation, RewriteError> {
        match self {
            Step::A => Ok(apply_a(t)),
            Step::Edge(op, site) => apply_edge_operation(t, op, site),
        }
    }
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Step::A => write!(f, "step A"),
            Step::Edge(op, site) => write!(f, "step {op} {site}"),
        }
    }
}

/// A starting graph and the operations that produce a target from it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivationTrace {
    pub start: String,
    pub param: Option<u32>,
    pub steps: Vec<Step>,
}

impl DerivationTrace {
    pub fn new(start: impl Into<String>, param: Option<u32>) -> Self {
        DerivationTrace { start: start.into(), param, steps: Vec::new() }
    }

    pub fn then(&self, step: Step) -> Self {
        let mut t = self.clone();
        t.steps.push(step);
        t
    }

    /// Rebuilds the target; `resolve` supplies the starting graph.
    pub fn replay(
        &self,
        resolve: impl Fn(&str, Option<u32>) -> Option<PlaneTriangulation>,
    ) -> Result<PlaneTriangulation, RewriteError> {
        let mut t = resolve(&self.start, self.param).ok_or_else(|| RewriteError::Replay {
            step: 0,
            msg: format!("unknown starting graph {}", self.start_label()),
        })?;
        for (k, s) in self.steps.iter().enumerate() {
            t = s.apply(&t).map_err(|e| RewriteError::Replay { step: k + 1, msg: e.to_string() })?;
        }
        Ok(t)
    }

    pub fn start_label(&self) -> String {
        match self.param {
            Some(p) => format!("{} {p}", self.start),
            None => self.start.clone(),
        }
    }
}

impl fmt::Display for DerivationTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "start {}", self.start_label())?;
        for s in &self.steps {
            writeln!(f, "{s}")?;
        }
        Ok(())
    }
}

impl FromStr for DerivationTrace {
    type Err = RewriteError;

    fn from_str(text: &str) -> Result<Self, RewriteError> {
        let mut trace: Option<DerivationTrace> = None;
        for (n, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap().trim();
            if line.is_empty() {
                continue;
            }
            let err = |msg: String| RewriteError::TraceSyntax { line: n + 1, msg };
            let words: Vec<&str> = line.split_whitespace().collect();
            match (words[0], &mut trace) {
                ("start", None) => {
                    let param = match words.get(2) {
                        Some(p) => Some(p.parse().map_err(|_| err(format!("bad parameter {p:?}")))?),
                        None => None,
                    };
                    if words.len() < 2 || words.len() > 3 {
                        return Err(err("expected `start <name> [param]`".into()));
                    }
                    trace = Some(DerivationTrace::new(words[1], param));
                }
                ("start", Some(_)) => return Err(err("second start line".into())),
                ("step", None) => return Err(err("step before start".into())),
                ("step", Some(t)) => {
                    let step = match words[1..] {
                        ["A"] => Step::A,
                        [op, site] => {
                            let op = op.parse().map_err(err)?;
                            let site = site.parse().map_err(|_| err(format!("bad site {site:?}")))?;
                            Step::Edge(op, site)
                        }
                        _ => return Err(err("expected `step A` or `step <op> <site>`".into())),
                    };
                    t.steps.push(step);
                }
                (w, _) => return Err(err(format!("unknown keyword {w:?}"))),
            }
        }
        trace.ok_or(RewriteError::TraceSyntax { line: 0, msg: "missing start line".into() })
    }
}
