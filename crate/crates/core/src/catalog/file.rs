//! Reading and writing catalog files.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::planar::{parse_triangulation, write_triangulation, VertexId};
use crate::rewrite::{Pattern, Region};
use crate::verifier::Flavor;

use super::{BaseEntry, CatalogError, FamilyKey, Member};

pub(crate) enum Section {
    Base(BaseEntry),
    Pattern(FamilyKey, u32, Pattern),
}

fn ids(s: &str) -> Result<Vec<VertexId>, String> {
    s.split_whitespace().map(|t| t.parse().map_err(|_| format!("expected a vertex id, found `{t}`"))).collect()
}

struct Raw {
    line: usize,
    header: Vec<String>,
    body: Vec<(usize, String)>,
}

fn split(text: &str) -> Result<Vec<Raw>, (usize, String)> {
    let mut out: Vec<Raw> = Vec::new();
    for (i, l) in text.lines().enumerate() {
        let line = i + 1;
        let l = l.split('#').next().unwrap_or("").trim();
        if l.is_empty() {
            continue;
        }
        if let Some(h) = l.strip_prefix('[') {
            let h = h.strip_suffix(']').ok_or((line, "unterminated section header".to_string()))?;
            out.push(Raw { line, header: h.split_whitespace().map(String::from).collect(), body: Vec::new() });
        } else {
            out.last_mut().ok_or((line, "content before the first section".to_string()))?.body.push((line, l.into()));
        }
    }
    Ok(out)
}

fn base(raw: &Raw) -> Result<BaseEntry, (usize, String)> {
    let name = raw.header.get(1).ok_or((raw.line, "base section needs a name".to_string()))?.clone();
    let param = match raw.header.get(2) {
        Some(p) => Some(p.parse::<u32>().map_err(|_| (raw.line, format!("bad parameter `{p}`")))?),
        None => None,
    };
    if raw.header.len() > 3 {
        return Err((raw.line, "trailing words in base header".into()));
    }
    let mut graph = String::new();
    let mut marked = None;
    let mut flavor = None;
    for (line, l) in &raw.body {
        if let Some(v) = l.strip_prefix("marked=") {
            marked = Some(ids(v).map_err(|e| (*line, e))?.into_iter().collect::<BTreeSet<_>>());
        } else if let Some(v) = l.strip_prefix("flavor=") {
            flavor = Some(v.trim().parse::<Flavor>().map_err(|e| (*line, e))?);
        } else {
            graph.push_str(l);
            graph.push('\n');
        }
    }
    let first = raw.body.first().map_or(raw.line, |b| b.0);
    let graph = parse_triangulation(&graph).map_err(|e| (first, format!("base {name}: {e}")))?;
    Ok(BaseEntry { name, param, graph, marked, flavor })
}

/// `j` or `i:j`.
fn index(tok: &str) -> Option<(Option<u32>, u32)> {
    match tok.split_once(':') {
        Some((i, j)) => Some((Some(i.parse().ok()?), j.parse().ok()?)),
        None => Some((None, tok.parse().ok()?)),
    }
}

fn pattern(raw: &Raw) -> Result<(FamilyKey, u32, Pattern), (usize, String)> {
    let err = |m: &str| (raw.line, m.to_string());
    if raw.header.len() != 4 {
        return Err(err("expected `[pattern <family> <k> <j>]`"));
    }
    let family = raw.header[1].clone();
    let k: u32 = raw.header[2].parse().map_err(|_| err("bad family index k"))?;
    let (i, j) = index(&raw.header[3]).ok_or_else(|| err("bad member index j"))?;
    let mut faces = Vec::new();
    let (mut sigma, mut d, mut marked, mut region) = (None, None, Vec::new(), None);
    for (line, l) in &raw.body {
        let at = |e: String| (*line, e);
        if let Some((key, v)) = l.split_once('=') {
            match key {
                "sigma" => sigma = Some(ids(v).map_err(at)?),
                "d" => d = Some(ids(v).map_err(at)?.first().copied().ok_or((*line, "empty d".to_string()))?),
                "D" => marked = ids(v).map_err(at)?,
                "region" => {
                    region = Some(match v.trim() {
                        "bounded" => Region::Bounded,
                        "unbounded" => Region::Unbounded,
                        o => return Err((*line, format!("unknown region `{o}`"))),
                    })
                }
                o => return Err((*line, format!("unknown key `{o}`"))),
            }
        } else {
            let f = ids(l).map_err(at)?;
            let f: [VertexId; 3] = f.try_into().map_err(|_| (*line, "a face has three vertices".to_string()))?;
            faces.push(f);
        }
    }
    let d = d.ok_or_else(|| err("missing d="))?;
    let region = region.ok_or_else(|| err("missing region="))?;
    let key = FamilyKey { family: family.clone(), k, i };
    let name = key.member_name(j);
    let p = Pattern::new(name, faces, d, marked, region).map_err(|e| (raw.line, e.to_string()))?;
    if let Some(s) = sigma {
        if s != p.sigma() {
            return Err(err(&format!("sigma= does not match the traced boundary {:?}", p.sigma())));
        }
    }
    Ok((key, j, p))
}

pub(crate) fn parse(file: &str, text: &str) -> Result<Vec<Section>, CatalogError> {
    let syntax = |(line, msg): (usize, String)| CatalogError::Syntax { file: file.into(), line, msg };
    let mut out = Vec::new();
    for raw in split(text).map_err(syntax)? {
        match raw.header.first().map(String::as_str) {
            Some("base") => out.push(Section::Base(base(&raw).map_err(syntax)?)),
            Some("pattern") => {
                let (k, j, p) = pattern(&raw).map_err(syntax)?;
                out.push(Section::Pattern(k, j, p));
            }
            _ => return Err(syntax((raw.line, "section must be `base` or `pattern`".into()))),
        }
    }
    Ok(out)
}

pub(crate) fn write_base(e: &BaseEntry) -> String {
    let mut s = format!("[base {}", e.name);
    if let Some(p) = e.param {
        write!(s, " {p}").unwrap();
    }
    s.push_str("]\n");
    s.push_str(&write_triangulation(&e.graph));
    if let Some(m) = &e.marked {
        writeln!(s, "marked={}", join(m.iter())).unwrap();
    }
    if let Some(f) = e.flavor {
        writeln!(s, "flavor={f}").unwrap();
    }
    s
}

fn join<'a>(v: impl Iterator<Item = &'a VertexId>) -> String {
    v.map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

pub(crate) fn write_pattern(key: &FamilyKey, m: &Member) -> String {
    let idx = match key.i {
        Some(i) => format!("{i}:{}", m.j),
        None => m.j.to_string(),
    };
    let mut s = format!("[pattern {} {} {idx}]\n", key.family, key.k);
    for f in m.pattern.faces() {
        writeln!(s, "{} {} {}", f[0], f[1], f[2]).unwrap();
    }
    writeln!(s, "sigma={}", join(m.pattern.sigma().iter())).unwrap();
    writeln!(s, "d={}", m.pattern.d()).unwrap();
    writeln!(s, "D={}", join(m.pattern.marked().iter())).unwrap();
    let region = match m.pattern.region() {
        Region::Bounded => "bounded",
        Region::Unbounded => "unbounded",
    };
    writeln!(s, "region={region}").unwrap();
    s
}
