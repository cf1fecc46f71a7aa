//! Named starting graphs, exceptional graphs and pattern families.
//!
//! Graphs and patterns live in `.cat` files. A built-in copy of the shipped
//! files is always available through [`default_catalog`].

mod base;
mod file;
mod local;
mod snake;
mod validate;

#[cfg(test)]
mod generate;
#[cfg(test)]
mod specs;
#[cfg(test)]
mod synth;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::path::Path;
use std::sync::OnceLock;

use thiserror::Error;

use crate::planar::{PlaneTriangulation, VertexId};
use crate::rewrite::{apply_a, Pattern};
use crate::verifier::Flavor;

pub use base::{f_n, g_n, j};
pub use snake::{alpha, distinguished_edges, is_snake_path, snake_configuration, snake_paths};
pub use validate::{validate_catalog, Check, CheckEntry, ValidationReport};

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("{file}:{line}: {msg}")]
    Syntax { file: String, line: usize, msg: String },
    #[error("{0}")]
    Range(String),
    #[error("duplicate {0}")]
    Duplicate(String),
    #[error("unknown base graph {0}")]
    UnknownBase(String),
    #[error("parameter {param:?} out of range for {name}")]
    ParamOutOfRange { name: String, param: Option<u32> },
    #[error("reading {path}: {source}")]
    Io { path: String, source: std::io::Error },
}

/// A starting or exceptional graph with an optional known hamiltonian set.
#[derive(Clone, Debug)]
pub struct BaseEntry {
    pub name: String,
    pub param: Option<u32>,
    pub graph: PlaneTriangulation,
    pub marked: Option<BTreeSet<VertexId>>,
    pub flavor: Option<Flavor>,
}

impl BaseEntry {
    pub fn label(&self) -> String {
        match self.param {
            Some(p) => format!("{}_{p}", self.name),
            None => self.name.clone(),
        }
    }
}

/// One indexed family: `Upsilon`, `Delta`, `Psi` (with `i`) or `Op`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FamilyKey {
    pub family: String,
    pub k: u32,
    pub i: Option<u32>,
}

impl FamilyKey {
    pub fn new(family: &str, k: u32, i: Option<u32>) -> Self {
        FamilyKey { family: family.into(), k, i }
    }

    pub fn member_name(&self, j: u32) -> String {
        match self.i {
            Some(i) => format!("{}_{}^({i},{j})", self.family, self.k),
            None => format!("{}_{}^{j}", self.family, self.k),
        }
    }

    /// Largest member index the family allows.
    pub fn max_index(&self) -> Result<u32, String> {
        let bad = || format!("no family {self}");
        let k = self.k as usize;
        let n = match (self.family.as_str(), self.i) {
            ("Upsilon", None) => *[3, 6, 5, 2].get(k.wrapping_sub(1)).ok_or_else(bad)?,
            ("Delta", None) => match k {
                1 => 3,
                2 | 3 => 6,
                5 | 6 => 1,
                _ => return Err(bad()),
            },
            ("Psi", Some(1 | 2)) if (1..=4).contains(&k) => 5,
            ("Op", None) if (1..=4).contains(&k) => 1,
            _ => return Err(bad()),
        };
        Ok(n)
    }
}

impl fmt::Display for FamilyKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.i {
            Some(i) => write!(f, "{} {} (i={i})", self.family, self.k),
            None => write!(f, "{} {}", self.family, self.k),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Member {
    pub j: u32,
    pub pattern: Pattern,
}

#[derive(Clone, Debug, Default)]
pub struct Catalog {
    pub base: Vec<BaseEntry>,
    pub families: BTreeMap<FamilyKey, Vec<Member>>,
}

impl Catalog {
    pub fn base_entry(&self, name: &str, param: Option<u32>) -> Option<&BaseEntry> {
        self.base.iter().find(|e| e.name == name && e.param == param)
    }

    pub fn member(&self, key: &FamilyKey, j: u32) -> Option<&Pattern> {
        self.families.get(key)?.iter().find(|m| m.j == j).map(|m| &m.pattern)
    }

    pub fn pattern_count(&self) -> usize {
        self.families.values().map(Vec::len).sum()
    }

    /// Catalog files, each rendered as text.
    pub fn to_files(&self) -> Vec<(String, String)> {
        let base: String = self.base.iter().map(|e| file::write_base(e) + "\n").collect();
        let patterns: String = self
            .families
            .iter()
            .flat_map(|(k, ms)| ms.iter().map(move |m| file::write_pattern(k, m) + "\n"))
            .collect();
        vec![("base.cat".into(), base), ("patterns.cat".into(), patterns)]
    }
}

/// Parses `(file name, contents)` pairs into a catalog. Structure and index
/// ranges are checked; family checks are left to [`validate_catalog`].
pub fn load_catalog(files: &[(String, String)]) -> Result<Catalog, CatalogError> {
    let mut c = Catalog::default();
    for (name, text) in files {
        for s in file::parse(name, text)? {
            match s {
                file::Section::Base(e) => {
                    if c.base_entry(&e.name, e.param).is_some() {
                        return Err(CatalogError::Duplicate(format!("base graph {}", e.label())));
                    }
                    c.base.push(e);
                }
                file::Section::Pattern(key, j, pattern) => {
                    let n = key.max_index().map_err(CatalogError::Range)?;
                    if j > n {
                        return Err(CatalogError::Range(format!("{key}: index {j} exceeds {n}")));
                    }
                    let ms = c.families.entry(key.clone()).or_default();
                    if ms.iter().any(|m| m.j == j) {
                        return Err(CatalogError::Duplicate(format!("pattern {}", key.member_name(j))));
                    }
                    ms.push(Member { j, pattern });
                }
            }
        }
    }
    for (key, ms) in &mut c.families {
        ms.sort_by_key(|m| m.j);
        if ms.iter().enumerate().any(|(i, m)| m.j != i as u32) {
            return Err(CatalogError::Range(format!("{key}: member indices must run from 0 without gaps")));
        }
    }
    Ok(c)
}

/// Loads every `*.cat` file of `dir`, in name order.
pub fn load_catalog_dir(dir: &Path) -> Result<Catalog, CatalogError> {
    let io = |e| CatalogError::Io { path: dir.display().to_string(), source: e };
    let mut paths: Vec<_> = std::fs::read_dir(dir)
        .map_err(io)?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "cat"))
        .collect();
    paths.sort();
    let mut files = Vec::new();
    for p in paths {
        let text = std::fs::read_to_string(&p).map_err(|e| CatalogError::Io { path: p.display().to_string(), source: e })?;
        files.push((p.file_name().unwrap().to_string_lossy().into_owned(), text));
    }
    load_catalog(&files)
}

pub(crate) const SHIPPED: [(&str, &str); 2] =
    [("base.cat", include_str!("../../catalog/base.cat")), ("patterns.cat", include_str!("../../catalog/patterns.cat"))];

/// The catalog shipped with the crate.
pub fn default_catalog() -> &'static Catalog {
    static CELL: OnceLock<Catalog> = OnceLock::new();
    CELL.get_or_init(|| {
        let files: Vec<(String, String)> = SHIPPED.iter().map(|(n, t)| (n.to_string(), t.to_string())).collect();
        load_catalog(&files).expect("shipped catalog loads")
    })
}

/// A base graph by name: catalog entries first, then the parametric
/// families built in code (`G n`, `F n`, `J`, and `A j` for `j` in 1, 5, 7, 8).
pub fn instantiate_base_graph(c: &Catalog, name: &str, n: Option<u32>) -> Result<BaseEntry, CatalogError> {
    if let Some(e) = c.base_entry(name, n) {
        return Ok(e.clone());
    }
    let out_of_range = || CatalogError::ParamOutOfRange { name: name.into(), param: n };
    let graph = match (name, n) {
        ("G", Some(k)) if k >= 3 => g_n(k),
        ("F", Some(k)) if k >= 1 => f_n(k),
        ("J", None) => j(),
        ("A", Some(1)) => apply_a(&g_n(3)),
        ("A", Some(5)) => apply_a(&g_n(4)),
        ("A", Some(7)) => apply_a(&g_n(5)),
        ("A", Some(8)) => apply_a(&j()),
        ("G" | "F" | "J" | "A", _) => return Err(out_of_range()),
        _ => {
            return Err(if c.base.iter().any(|e| e.name == name) {
                out_of_range()
            } else {
                CatalogError::UnknownBase(name.into())
            })
        }
    };
    Ok(BaseEntry { name: name.into(), param: n, graph, marked: None, flavor: None })
}
