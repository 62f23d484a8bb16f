//! The line-based algebra description format.
//!
//! ```text
//! # comment
//! field 3
//! vertex 1
//! vertex 2
//! arrow alpha 1 2
//! arrow beta 2 1
//! rel alpha.beta.alpha
//! rel beta.alpha.beta
//! ```
//!
//! `rel` takes terms joined by `+` or `-`, each `[<int>*]<path>`, where a
//! path is arrow names joined by `.`. Directives may appear in any order;
//! `field` defaults to 2.

use std::fmt::Write as _;

use crate::algebra::AlgebraTable;
use crate::error::{Error, Result};
use crate::families::FamilyPresentation;
use crate::linalg::PrimeField;
use crate::quiver::{Quiver, Relation};

pub const DEFAULT_PRIME: u32 = 2;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecFile {
    pub field: PrimeField,
    pub quiver: Quiver,
    pub relations: Vec<Relation>,
    /// The vertex ids as written, in declaration order.
    pub vertex_ids: Vec<String>,
}

fn perr(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

impl SpecFile {
    pub fn parse(text: &str) -> Result<SpecFile> {
        let mut prime: Option<(usize, u32)> = None;
        let mut vertex_ids: Vec<String> = Vec::new();
        let mut arrows: Vec<(usize, String, String, String)> = Vec::new();
        let mut rels: Vec<(usize, String)> = Vec::new();
        for (k, raw) in text.lines().enumerate() {
            let line = k + 1;
            let content = raw.split('#').next().unwrap().trim();
            if content.is_empty() {
                continue;
            }
            let (head, rest) = content.split_once(char::is_whitespace).unwrap_or((content, ""));
            let args: Vec<&str> = rest.split_whitespace().collect();
            match head {
                "field" => {
                    if prime.is_some() {
                        return Err(perr(line, "field declared twice"));
                    }
                    let [p] = args[..] else {
                        return Err(perr(line, "expected `field <p>`"));
                    };
                    let p = p.parse().map_err(|_| perr(line, format!("bad prime `{p}`")))?;
                    prime = Some((line, p));
                }
                "vertex" => {
                    let [id] = args[..] else {
                        return Err(perr(line, "expected `vertex <id>`"));
                    };
                    if vertex_ids.iter().any(|v| v == id) {
                        return Err(perr(line, format!("duplicate vertex `{id}`")));
                    }
                    vertex_ids.push(id.to_string());
                }
                "arrow" => {
                    let [name, s, t] = args[..] else {
                        return Err(perr(line, "expected `arrow <name> <src> <dst>`"));
                    };
                    arrows.push((line, name.into(), s.into(), t.into()));
                }
                "rel" => {
                    if rest.trim().is_empty() {
                        return Err(perr(line, "empty relation"));
                    }
                    rels.push((line, rest.trim().to_string()));
                }
                other => return Err(perr(line, format!("unknown directive `{other}`"))),
            }
        }
        let field = match prime {
            Some((line, p)) => PrimeField::new(p).map_err(|e| perr(line, e.to_string()))?,
            None => PrimeField::new(DEFAULT_PRIME)?,
        };
        if vertex_ids.is_empty() {
            return Err(perr(0, "no vertices declared"));
        }
        let mut owned = Vec::new();
        for (line, name, s, t) in &arrows {
            let find = |id: &String| {
                vertex_ids
                    .iter()
                    .position(|v| v == id)
                    .map(|i| i + 1)
                    .ok_or_else(|| perr(*line, format!("unknown vertex `{id}`")))
            };
            owned.push((name.clone(), find(s)?, find(t)?));
        }
        let quiver = Quiver::from_owned(vertex_ids.len(), owned).map_err(|e| {
            let line = arrows.first().map_or(0, |a| a.0);
            perr(line, e.to_string())
        })?;
        let relations = rels
            .iter()
            .map(|(line, expr)| parse_relation(&quiver, field, expr).map_err(|e| perr(*line, e.to_string())))
            .collect::<Result<Vec<_>>>()?;
        Ok(SpecFile {
            field,
            quiver,
            relations,
            vertex_ids,
        })
    }

    pub fn build(&self, max_len: usize) -> Result<AlgebraTable> {
        AlgebraTable::build(self.quiver.clone(), self.field, self.relations.clone(), max_len)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "field {}", self.field.p()).unwrap();
        for id in &self.vertex_ids {
            writeln!(out, "vertex {id}").unwrap();
        }
        for a in self.quiver.arrows() {
            let (s, t) = (&self.vertex_ids[a.source], &self.vertex_ids[a.target]);
            writeln!(out, "arrow {} {s} {t}", a.name).unwrap();
        }
        for r in &self.relations {
            writeln!(out, "rel {}", r.display(&self.quiver, self.field)).unwrap();
        }
        out
    }
}

impl From<FamilyPresentation> for SpecFile {
    fn from(fp: FamilyPresentation) -> Self {
        SpecFile {
            vertex_ids: (1..=fp.quiver.vertex_count()).map(|v| v.to_string()).collect(),
            field: fp.field,
            quiver: fp.quiver,
            relations: fp.relations,
        }
    }
}

/// Parses `t1 + c*t2 - t3`.
pub fn parse_relation(q: &Quiver, field: PrimeField, expr: &str) -> Result<Relation> {
    let bad = |msg: String| Error::InvalidRelation(msg);
    let mut terms = Vec::new();
    let mut rest = expr.trim();
    let mut first = true;
    while !rest.is_empty() {
        let mut negative = false;
        if let Some(r) = rest.strip_prefix('+') {
            rest = r.trim_start();
        } else if let Some(r) = rest.strip_prefix('-') {
            negative = true;
            rest = r.trim_start();
        } else if !first {
            return Err(bad(format!("expected `+` or `-` before `{rest}`")));
        }
        first = false;
        let end = rest.find(['+', '-']).unwrap_or(rest.len());
        let term = rest[..end].trim();
        rest = rest[end..].trim_start();
        let (coeff, path) = match term.split_once('*') {
            Some((c, p)) => {
                let c: i64 = c.trim().parse().map_err(|_| bad(format!("bad coefficient `{c}`")))?;
                (c, p.trim())
            }
            None => (1, term),
        };
        if path.is_empty() {
            return Err(bad(format!("missing path in `{expr}`")));
        }
        let path = q.parse_path(path)?;
        let c = field.from_i64(if negative { -coeff } else { coeff });
        terms.push((c, path));
    }
    Relation::new(q, field, terms)
}
