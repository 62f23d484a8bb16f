//! Quivers, paths and relations.
//!
//! Vertices are numbered `1..=V` at the API boundary and stored 0-based.
//! Paths compose left to right: in `a.b` the arrow `a` is traversed first,
//! so `target(a) == source(b)`. This is the convention of right modules.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::linalg::PrimeField;

/// Index of a vertex, 0-based. Displayed 1-based.
pub type Vertex = usize;

/// Index of an arrow in declaration order.
pub type ArrowId = usize;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub name: String,
    pub source: Vertex,
    pub target: Vertex,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    vertex_count: usize,
    arrows: Vec<Arrow>,
    by_name: HashMap<String, ArrowId>,
}

impl Quiver {
    /// `arrows` are `(name, source, target)` with 1-based vertex ids.
    pub fn new(vertex_count: usize, arrows: &[(&str, usize, usize)]) -> Result<Self> {
        let owned: Vec<(String, usize, usize)> = arrows
            .iter()
            .map(|&(n, s, t)| (n.to_string(), s, t))
            .collect();
        Quiver::from_owned(vertex_count, owned)
    }

    pub fn from_owned(vertex_count: usize, arrows: Vec<(String, usize, usize)>) -> Result<Self> {
        if vertex_count == 0 {
            return Err(Error::InvalidQuiver("a quiver needs at least one vertex".into()));
        }
        let mut by_name = HashMap::new();
        let mut list = Vec::with_capacity(arrows.len());
        for (name, s, t) in arrows {
            if !is_identifier(&name) {
                return Err(Error::InvalidQuiver(format!("bad arrow name `{name}`")));
            }
            for v in [s, t] {
                if v == 0 || v > vertex_count {
                    return Err(Error::UnknownVertex(v));
                }
            }
            if by_name.insert(name.clone(), list.len()).is_some() {
                return Err(Error::InvalidQuiver(format!("duplicate arrow name `{name}`")));
            }
            list.push(Arrow {
                name,
                source: s - 1,
                target: t - 1,
            });
        }
        Ok(Quiver {
            vertex_count,
            arrows: list,
            by_name,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow(&self, a: ArrowId) -> &Arrow {
        &self.arrows[a]
    }

    pub fn arrow_id(&self, name: &str) -> Option<ArrowId> {
        self.by_name.get(name).copied()
    }

    fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v < self.vertex_count {
            Ok(())
        } else {
            Err(Error::UnknownVertex(v + 1))
        }
    }

    /// Arrows starting at `v` (the set `v^+`), in declaration order.
    pub fn out_arrows(&self, v: Vertex) -> Result<Vec<ArrowId>> {
        self.check_vertex(v)?;
        Ok((0..self.arrows.len())
            .filter(|&a| self.arrows[a].source == v)
            .collect())
    }

    /// Arrows ending at `v` (the set `v^-`), in declaration order.
    pub fn in_arrows(&self, v: Vertex) -> Result<Vec<ArrowId>> {
        self.check_vertex(v)?;
        Ok((0..self.arrows.len())
            .filter(|&a| self.arrows[a].target == v)
            .collect())
    }

    /// First arrow `a: i -> j` (declaration order) with `i^+ = {a} = j^-`.
    pub fn condition_b(&self) -> Option<ArrowId> {
        (0..self.arrows.len()).find(|&a| {
            let arr = &self.arrows[a];
            self.out_arrows(arr.source).unwrap() == [a] && self.in_arrows(arr.target).unwrap() == [a]
        })
    }

    pub fn has_sink_or_source(&self) -> bool {
        (0..self.vertex_count).any(|v| {
            self.out_arrows(v).unwrap().is_empty() || self.in_arrows(v).unwrap().is_empty()
        })
    }

    /// Connectivity of the underlying undirected graph.
    pub fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.vertex_count];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for a in &self.arrows {
                for (x, y) in [(a.source, a.target), (a.target, a.source)] {
                    if x == v && !seen[y] {
                        seen[y] = true;
                        stack.push(y);
                    }
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// The quiver with every arrow reversed, names kept.
    pub fn opposite(&self) -> Quiver {
        let arrows = self
            .arrows
            .iter()
            .map(|a| (a.name.clone(), a.target + 1, a.source + 1))
            .collect();
        Quiver::from_owned(self.vertex_count, arrows).expect("reversal preserves validity")
    }

    pub fn trivial_path(&self, v: Vertex) -> Path {
        Path::trivial(v)
    }

    /// Parses `a.b.c` (arrow names joined by `.`) into a composable path.
    pub fn parse_path(&self, text: &str) -> Result<Path> {
        let mut arrows = Vec::new();
        for name in text.split('.') {
            let name = name.trim();
            let id = self
                .arrow_id(name)
                .ok_or_else(|| Error::UnknownArrow(name.to_string()))?;
            arrows.push(id);
        }
        Path::from_arrows(self, arrows)
    }

    /// All paths of length exactly `len`, in lexicographic arrow order.
    pub fn paths_of_length(&self, len: usize) -> Vec<Path> {
        let mut cur: Vec<Path> = (0..self.vertex_count).map(Path::trivial).collect();
        for _ in 0..len {
            let mut next = Vec::new();
            for p in &cur {
                let end = p.target(self);
                for (a, arr) in self.arrows.iter().enumerate() {
                    if arr.source == end {
                        let mut q = p.clone();
                        q.arrows.push(a);
                        next.push(q);
                    }
                }
            }
            cur = next;
        }
        cur.sort();
        cur
    }
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '\'')
}

/// A path: a start vertex plus a (possibly empty) arrow sequence.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    start: Vertex,
    arrows: Vec<ArrowId>,
}

impl Path {
    pub fn trivial(v: Vertex) -> Path {
        Path {
            start: v,
            arrows: Vec::new(),
        }
    }

    pub fn from_arrows(q: &Quiver, arrows: Vec<ArrowId>) -> Result<Path> {
        let Some(&first) = arrows.first() else {
            return Err(Error::InvalidPath("empty arrow sequence".into()));
        };
        for w in arrows.windows(2) {
            if q.arrow(w[0]).target != q.arrow(w[1]).source {
                return Err(Error::InvalidPath(format!(
                    "`{}` does not compose with `{}`",
                    q.arrow(w[0]).name,
                    q.arrow(w[1]).name
                )));
            }
        }
        Ok(Path {
            start: q.arrow(first).source,
            arrows,
        })
    }

    pub fn arrow(q: &Quiver, a: ArrowId) -> Path {
        Path {
            start: q.arrow(a).source,
            arrows: vec![a],
        }
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn arrows(&self) -> &[ArrowId] {
        &self.arrows
    }

    pub fn source(&self) -> Vertex {
        self.start
    }

    pub fn target(&self, q: &Quiver) -> Vertex {
        self.arrows.last().map_or(self.start, |&a| q.arrow(a).target)
    }

    pub fn is_cyclic(&self, q: &Quiver) -> bool {
        self.source() == self.target(q)
    }

    /// `self` followed by `other`, or `None` when they do not compose.
    pub fn concat(&self, q: &Quiver, other: &Path) -> Option<Path> {
        if self.target(q) != other.source() {
            return None;
        }
        let mut arrows = self.arrows.clone();
        arrows.extend_from_slice(&other.arrows);
        Some(Path {
            start: self.start,
            arrows,
        })
    }

    /// The same arrow sequence read backwards, as a path of the opposite quiver.
    pub fn reversed(&self, q: &Quiver) -> Path {
        let mut arrows = self.arrows.clone();
        arrows.reverse();
        Path {
            start: self.target(q),
            arrows,
        }
    }

    /// Cyclic rotations of a cyclic path, the path itself first.
    pub fn rotations(&self, q: &Quiver) -> Vec<Path> {
        if self.arrows.is_empty() {
            return vec![self.clone()];
        }
        (0..self.arrows.len())
            .map(|k| {
                let mut arrows = self.arrows[k..].to_vec();
                arrows.extend_from_slice(&self.arrows[..k]);
                Path {
                    start: q.arrow(arrows[0]).source,
                    arrows,
                }
            })
            .collect()
    }

    pub fn display(&self, q: &Quiver) -> String {
        if self.arrows.is_empty() {
            format!("e{}", self.start + 1)
        } else {
            self.arrows
                .iter()
                .map(|&a| q.arrow(a).name.as_str())
                .collect::<Vec<_>>()
                .join(".")
        }
    }
}

/// A linear combination of parallel paths of length at least two.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    terms: Vec<(u32, Path)>,
}

impl Relation {
    /// Validates parallelism, admissibility (length >= 2) and distinct terms.
    /// Zero coefficients are dropped.
    pub fn new(q: &Quiver, field: PrimeField, terms: Vec<(u32, Path)>) -> Result<Relation> {
        let terms: Vec<(u32, Path)> = terms
            .into_iter()
            .map(|(c, p)| (c % field.p(), p))
            .filter(|(c, _)| *c != 0)
            .collect();
        let Some((_, first)) = terms.first() else {
            return Err(Error::InvalidRelation("relation has no nonzero term".into()));
        };
        let (s, t) = (first.source(), first.target(q));
        for (i, (_, p)) in terms.iter().enumerate() {
            if p.len() < 2 {
                return Err(Error::InvalidRelation(format!(
                    "term `{}` has length {} < 2",
                    p.display(q),
                    p.len()
                )));
            }
            if p.source() != s || p.target(q) != t {
                return Err(Error::InvalidRelation(format!(
                    "terms `{}` and `{}` are not parallel",
                    first.display(q),
                    p.display(q)
                )));
            }
            if terms[..i].iter().any(|(_, o)| o == p) {
                return Err(Error::InvalidRelation(format!(
                    "path `{}` occurs twice",
                    p.display(q)
                )));
            }
        }
        Ok(Relation { terms })
    }

    /// Monomial relation with coefficient one.
    pub fn monomial(q: &Quiver, field: PrimeField, path: Path) -> Result<Relation> {
        Relation::new(q, field, vec![(1, path)])
    }

    pub fn terms(&self) -> &[(u32, Path)] {
        &self.terms
    }

    pub fn source(&self) -> Vertex {
        self.terms[0].1.source()
    }

    pub fn target(&self, q: &Quiver) -> Vertex {
        self.terms[0].1.target(q)
    }

    /// The relation read in the opposite quiver.
    pub fn reversed(&self, q: &Quiver) -> Relation {
        Relation {
            terms: self
                .terms
                .iter()
                .map(|(c, p)| (*c, p.reversed(q)))
                .collect(),
        }
    }

    /// Relation after substituting `a -> scale[a] * a` for every arrow.
    pub fn rescaled(&self, field: PrimeField, scale: &[u32]) -> Relation {
        Relation {
            terms: self
                .terms
                .iter()
                .map(|(c, p)| {
                    let k = p.arrows().iter().fold(*c, |acc, &a| field.mul(acc, scale[a]));
                    (k, p.clone())
                })
                .collect(),
        }
    }

    /// Text form `t1 + c*t2 - t3` used by the spec-file format.
    pub fn display(&self, q: &Quiver, field: PrimeField) -> String {
        let mut out = String::new();
        for (i, (c, p)) in self.terms.iter().enumerate() {
            let path = p.display(q);
            let neg = field.p() > 2 && *c == field.p() - 1;
            let coeff = if neg || *c == 1 {
                String::new()
            } else {
                format!("{c}*")
            };
            match (i, neg) {
                (0, false) => out.push_str(&format!("{coeff}{path}")),
                (0, true) => out.push_str(&format!("-{path}")),
                (_, false) => out.push_str(&format!(" + {coeff}{path}")),
                (_, true) => out.push_str(&format!(" - {path}")),
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quiver_ii() -> Quiver {
        Quiver::new(2, &[("alpha", 1, 2), ("beta", 2, 1)]).unwrap()
    }

    fn quiver_iii() -> Quiver {
        Quiver::new(2, &[("rho", 1, 1), ("alpha", 1, 2), ("beta", 2, 1)]).unwrap()
    }

    #[test]
    fn in_and_out_arrows() {
        let q = quiver_iii();
        assert_eq!(q.out_arrows(0).unwrap(), vec![0, 1]);
        assert_eq!(q.in_arrows(0).unwrap(), vec![0, 2]);
        let q = quiver_ii();
        assert_eq!(q.out_arrows(1).unwrap(), vec![1]);
        assert_eq!(q.in_arrows(1).unwrap(), vec![0]);
        let k = Quiver::new(1, &[]).unwrap();
        assert!(k.out_arrows(0).unwrap().is_empty() && k.in_arrows(0).unwrap().is_empty());
        assert_eq!(k.out_arrows(3), Err(Error::UnknownVertex(4)));
    }

    #[test]
    fn condition_b_examples() {
        assert_eq!(quiver_ii().condition_b(), Some(0));
        assert_eq!(quiver_iii().condition_b(), None);
        let loop_q = Quiver::new(1, &[("T", 1, 1)]).unwrap();
        assert_eq!(loop_q.condition_b(), Some(0));
    }

    #[test]
    fn sinks_sources_connectivity() {
        let a2 = Quiver::new(2, &[("a", 1, 2)]).unwrap();
        assert!(a2.has_sink_or_source());
        assert!(!quiver_ii().has_sink_or_source());
        assert!(!quiver_iii().has_sink_or_source());
        assert!(Quiver::new(1, &[]).unwrap().is_connected());
        assert!(!Quiver::new(2, &[]).unwrap().is_connected());
        assert!(quiver_ii().is_connected());
    }

    #[test]
    fn arrow_sets_are_consistent() {
        for q in [quiver_ii(), quiver_iii(), Quiver::new(3, &[("a", 1, 2), ("b", 2, 3), ("c", 3, 3)]).unwrap()] {
            let mut outs = 0;
            let mut ins = 0;
            for v in 0..q.vertex_count() {
                outs += q.out_arrows(v).unwrap().len();
                ins += q.in_arrows(v).unwrap().len();
            }
            assert_eq!(outs, q.arrows().len());
            assert_eq!(ins, q.arrows().len());
            for (a, arr) in q.arrows().iter().enumerate() {
                assert!(q.out_arrows(arr.source).unwrap().contains(&a));
                assert!(q.in_arrows(arr.target).unwrap().contains(&a));
            }
            if let Some(a) = q.condition_b() {
                assert_eq!(q.out_arrows(q.arrow(a).source).unwrap().len(), 1);
                assert_eq!(q.in_arrows(q.arrow(a).target).unwrap().len(), 1);
            }
        }
    }

    #[test]
    fn quiver_validation() {
        assert!(Quiver::new(0, &[]).is_err());
        assert!(Quiver::new(1, &[("a", 1, 2)]).is_err());
        assert!(Quiver::new(1, &[("a", 1, 1), ("a", 1, 1)]).is_err());
        assert!(Quiver::new(1, &[("1x", 1, 1)]).is_err());
    }

    #[test]
    fn path_composition() {
        let q = quiver_ii();
        let ab = q.parse_path("alpha.beta").unwrap();
        assert_eq!(ab.source(), 0);
        assert_eq!(ab.target(&q), 0);
        assert!(q.parse_path("alpha.alpha").is_err());
        let a = Path::arrow(&q, 0);
        let b = Path::arrow(&q, 1);
        let left = a.concat(&q, &b).unwrap().concat(&q, &a).unwrap();
        let right = a.concat(&q, &b.concat(&q, &a).unwrap()).unwrap();
        assert_eq!(left, right);
        assert!(a.concat(&q, &a).is_none());
        assert_eq!(Path::trivial(0).concat(&q, &a), Some(a.clone()));
        let rots = ab.rotations(&q);
        assert_eq!(rots[1].display(&q), "beta.alpha");
        assert_eq!(rots[1].source(), 1);
    }

    #[test]
    fn relation_validation() {
        let q = quiver_iii();
        let f = PrimeField::new(3).unwrap();
        let ab = q.parse_path("alpha.beta").unwrap();
        let rr = q.parse_path("rho.rho").unwrap();
        let r = Relation::new(&q, f, vec![(1, ab.clone()), (2, rr.clone())]).unwrap();
        assert_eq!(r.display(&q, f), "alpha.beta - rho.rho");
        assert!(Relation::new(&q, f, vec![(1, Path::arrow(&q, 0))]).is_err());
        let ra = q.parse_path("rho.alpha").unwrap();
        assert!(Relation::new(&q, f, vec![(1, ab.clone()), (1, ra)]).is_err());
        assert!(Relation::new(&q, f, vec![(1, ab.clone()), (1, ab)]).is_err());
        assert!(Relation::new(&q, f, vec![(3, rr)]).is_err());
    }
}
