//! Generators for the three families of period-four symmetric Nakayama-type
//! algebras: `K[T]/(T^n)`, the two-cycle with `(αβ)^n α = (βα)^n β = 0`,
//! and the two-cycle with a loop and `ρα = βρ = 0`, `αβ = ρ^t`.

use crate::algebra::AlgebraTable;
use crate::error::{Error, Result};
use crate::linalg::PrimeField;
use crate::quiver::{Path, Quiver, Relation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    I,
    II,
    III,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::I => "i",
            Family::II => "ii",
            Family::III => "iii",
        }
    }

    pub fn parse(s: &str) -> Option<Family> {
        match s {
            "i" => Some(Family::I),
            "ii" => Some(Family::II),
            "iii" => Some(Family::III),
            _ => None,
        }
    }

    /// Smallest allowed parameter.
    pub fn min_param(self) -> usize {
        match self {
            Family::III => 2,
            _ => 1,
        }
    }

    pub fn generate(self, param: usize, field: PrimeField) -> Result<FamilyPresentation> {
        match self {
            Family::I => family_i(param, field),
            Family::II => family_ii(param, field),
            Family::III => family_iii(param, field),
        }
    }
}

/// A quiver with relations over a fixed field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyPresentation {
    pub quiver: Quiver,
    pub field: PrimeField,
    pub relations: Vec<Relation>,
}

impl FamilyPresentation {
    pub fn build(&self, max_len: usize) -> Result<AlgebraTable> {
        AlgebraTable::build(self.quiver.clone(), self.field, self.relations.clone(), max_len)
    }
}

fn word(q: &Quiver, names: &[&str]) -> Path {
    q.parse_path(&names.join(".")).expect("generator paths compose")
}

fn repeat(names: &[&'static str], times: usize) -> Vec<&'static str> {
    names.iter().copied().cycle().take(names.len() * times).collect()
}

/// `K[T]/(T^n)`. For `n = 1` the ideal `(T)` is not admissible, so the
/// result is the one-vertex quiver without arrows, i.e. `K` itself.
pub fn family_i(n: usize, field: PrimeField) -> Result<FamilyPresentation> {
    if n < 1 {
        return Err(Error::ParameterOutOfRange(format!("family i needs n >= 1, got {n}")));
    }
    if n == 1 {
        return Ok(FamilyPresentation {
            quiver: Quiver::new(1, &[])?,
            field,
            relations: vec![],
        });
    }
    let q = Quiver::new(1, &[("T", 1, 1)])?;
    let rel = Relation::monomial(&q, field, word(&q, &repeat(&["T"], n)))?;
    Ok(FamilyPresentation {
        quiver: q,
        field,
        relations: vec![rel],
    })
}

/// Arrows `alpha: 1 -> 2`, `beta: 2 -> 1` with `(αβ)^n α = (βα)^n β = 0`.
pub fn family_ii(n: usize, field: PrimeField) -> Result<FamilyPresentation> {
    if n < 1 {
        return Err(Error::ParameterOutOfRange(format!("family ii needs n >= 1, got {n}")));
    }
    let q = Quiver::new(2, &[("alpha", 1, 2), ("beta", 2, 1)])?;
    let mut a = repeat(&["alpha", "beta"], n);
    a.push("alpha");
    let mut b = repeat(&["beta", "alpha"], n);
    b.push("beta");
    let relations = vec![
        Relation::monomial(&q, field, word(&q, &a))?,
        Relation::monomial(&q, field, word(&q, &b))?,
    ];
    Ok(FamilyPresentation {
        quiver: q,
        field,
        relations,
    })
}

/// Loop `rho` at 1, `alpha: 1 -> 2`, `beta: 2 -> 1` with `ρα = βρ = 0`
/// and `αβ = ρ^t`.
pub fn family_iii(t: usize, field: PrimeField) -> Result<FamilyPresentation> {
    if t < 2 {
        return Err(Error::ParameterOutOfRange(format!("family iii needs t >= 2, got {t}")));
    }
    let q = Quiver::new(2, &[("rho", 1, 1), ("alpha", 1, 2), ("beta", 2, 1)])?;
    let relations = vec![
        Relation::monomial(&q, field, word(&q, &["rho", "alpha"]))?,
        Relation::monomial(&q, field, word(&q, &["beta", "rho"]))?,
        Relation::new(
            &q,
            field,
            vec![
                (1, word(&q, &["alpha", "beta"])),
                (field.neg(1), word(&q, &repeat(&["rho"], t))),
            ],
        )?,
    ];
    Ok(FamilyPresentation {
        quiver: q,
        field,
        relations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u32) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    fn shown(fp: &FamilyPresentation) -> Vec<String> {
        fp.relations.iter().map(|r| r.display(&fp.quiver, fp.field)).collect()
    }

    #[test]
    fn generators() {
        let ii = family_ii(1, f(2)).unwrap();
        assert_eq!(ii.quiver.vertex_count(), 2);
        assert_eq!(shown(&ii), ["alpha.beta.alpha", "beta.alpha.beta"]);
        let iii = family_iii(2, f(3)).unwrap();
        assert_eq!(shown(&iii), ["rho.alpha", "beta.rho", "alpha.beta - rho.rho"]);
        let i = family_i(3, f(2)).unwrap();
        assert_eq!(shown(&i), ["T.T.T"]);
        assert!(family_i(1, f(2)).unwrap().quiver.arrows().is_empty());
        assert_eq!(family_i(1, f(2)).unwrap().build(40).unwrap().dim(), 1);
    }

    #[test]
    fn out_of_range() {
        assert!(matches!(family_i(0, f(2)), Err(Error::ParameterOutOfRange(_))));
        assert!(matches!(family_ii(0, f(2)), Err(Error::ParameterOutOfRange(_))));
        assert!(matches!(family_iii(1, f(2)), Err(Error::ParameterOutOfRange(_))));
    }

    #[test]
    fn dimensions() {
        for n in 1..=4 {
            let a = family_ii(n, f(3)).unwrap().build(40).unwrap();
            assert_eq!(a.projective_dim(0), 2 * n + 1);
            assert_eq!(a.dim(), 4 * n + 2);
        }
        for t in 2..=5 {
            let a = family_iii(t, f(2)).unwrap().build(40).unwrap();
            assert_eq!(a.projective_dim(0), t + 2);
            assert_eq!(a.projective_dim(1), 3);
        }
    }
}
