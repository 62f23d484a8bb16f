//! Projective covers, syzygies, Ω-periods, the exact sequence
//! `0 → S_i → P_i → P_i^- → P_i^+ → P_i → S_i → 0` and the translate
//! `τ = D Tr`.

use std::fmt;

use crate::algebra::{AlgebraTable, SymmetrizingForm};
use crate::error::{Error, Result};
use crate::linalg::{Mat, Subspace};
use crate::rep::{
    fitting_split, is_isomorphic, is_projective, projective, quotient, radical_graded, simple,
    submodule, top_multiplicities, dualize, Graded, ModuleMap, Rep,
};
use crate::quiver::Vertex;

/// Default number of Ω steps tried before giving up on a period.
pub const DEFAULT_PERIOD_BOUND: usize = 12;

/// A projective cover `⊕ P_{v_k} -> M`, with the generator chosen for each
/// summand.
#[derive(Clone, Debug)]
pub struct Cover {
    pub projective: Rep,
    pub map: ModuleMap,
    /// Vertex of each indecomposable summand, in order.
    pub summands: Vec<Vertex>,
}

impl Cover {
    pub fn kernel(&self, alg: &AlgebraTable) -> (Rep, ModuleMap) {
        submodule(&self.projective, alg, &self.map.kernel())
    }
}

/// Minimal projective cover, built from a complement of `rad M` at each
/// vertex. Minimality (`ker ⊆ rad P`) is asserted after construction.
pub fn projective_cover(alg: &AlgebraTable, m: &Rep) -> Result<Cover> {
    if m.is_zero() {
        return Err(Error::ZeroModule);
    }
    let f = alg.field();
    let v = alg.vertex_count();
    let rad = radical_graded(m, alg);
    let mut summands = Vec::new();
    let mut generators = Vec::new();
    for i in 0..v {
        let qt = Subspace::full(f, m.dims()[i]).quotient(&rad[i])?;
        for g in qt.section {
            summands.push(i);
            generators.push(g);
        }
    }
    let parts: Vec<Rep> = summands.iter().map(|&i| projective(alg, i)).collect();
    let p = Rep::direct_sum_all(alg, &parts);
    let mut maps: Vec<Mat> = (0..v).map(|j| Mat::zeros(f, m.dims()[j], 0)).collect();
    for (&i, g) in summands.iter().zip(&generators) {
        for (j, mj) in maps.iter_mut().enumerate() {
            let cols: Vec<Vec<u32>> = alg
                .block(i, j)
                .into_iter()
                .map(|k| m.path_action(alg, alg.basis_path(k)).mul_vec(g))
                .collect();
            *mj = mj.hstack(&Mat::from_columns(f, m.dims()[j], &cols));
        }
    }
    let map = ModuleMap { maps };
    debug_assert!(map.is_hom(alg, &p, m));
    debug_assert!(map.is_surjective());
    let cover = Cover {
        projective: p,
        map,
        summands,
    };
    let ker = cover.map.kernel();
    let rad_p = radical_graded(&cover.projective, alg);
    assert!(
        ker.iter().zip(&rad_p).all(|(k, r)| r.contains_subspace(k)),
        "projective cover is not minimal"
    );
    Ok(cover)
}

/// Result of removing projective direct summands.
#[derive(Clone, Debug)]
pub struct Stripped {
    pub rep: Rep,
    /// Number of copies of each `P_i` removed.
    pub removed: Vec<usize>,
    pub certified: bool,
}

/// Removes all projective direct summands. Over a selfinjective algebra the
/// multiplicity of `P_i` equals the rank of `M e_i -> M, m ↦ m·s_i` where
/// `s_i` spans `soc(e_i Λ)`; the corresponding copies are injective and are
/// factored out directly. Otherwise the module is decomposed.
pub fn strip_projective_summands(alg: &AlgebraTable, m: &Rep, seed: u64) -> Result<Stripped> {
    let v = alg.vertex_count();
    if m.is_zero() {
        return Ok(Stripped {
            rep: m.clone(),
            removed: vec![0; v],
            certified: true,
        });
    }
    if alg.is_selfinjective() {
        let f = alg.field();
        let mut removed = vec![0; v];
        let mut gens: Vec<(Vertex, Vec<u32>)> = Vec::new();
        for i in 0..v {
            let soc = alg.socle_of_projective(i);
            let s = &soc.basis()[0];
            let target = alg.pair(s.iter().position(|&x| x != 0).unwrap()).1;
            let mut act = Mat::zeros(f, m.dims()[target], m.dims()[i]);
            for (k, &c) in s.iter().enumerate() {
                if c != 0 {
                    act.add_scaled(c, &m.path_action(alg, alg.basis_path(k)));
                }
            }
            let ker = Subspace::kernel_of(&act);
            let qt = Subspace::full(f, m.dims()[i]).quotient(&ker)?;
            removed[i] = qt.section.len();
            gens.extend(qt.section.into_iter().map(|g| (i, g)));
        }
        if gens.is_empty() {
            return Ok(Stripped {
                rep: m.clone(),
                removed,
                certified: true,
            });
        }
        // The submodule generated by the chosen elements is ⊕ P_i^{r_i}.
        let mut cols: Vec<Vec<Vec<u32>>> = vec![Vec::new(); v];
        for (i, g) in &gens {
            for (j, c) in cols.iter_mut().enumerate() {
                for k in alg.block(*i, j) {
                    c.push(m.path_action(alg, alg.basis_path(k)).mul_vec(g));
                }
            }
        }
        let sub: Graded = cols
            .iter()
            .enumerate()
            .map(|(j, c)| Subspace::span(f, m.dims()[j], c))
            .collect();
        let expected: usize = removed.iter().enumerate().map(|(i, &r)| r * alg.projective_dim(i)).sum();
        assert_eq!(sub.iter().map(|s| s.dim()).sum::<usize>(), expected);
        let (rest, _) = quotient(m, alg, &sub);
        return Ok(Stripped {
            rep: rest,
            removed,
            certified: true,
        });
    }
    let d = fitting_split(alg, m, seed)?;
    let mut removed = vec![0; v];
    let mut keep = Vec::new();
    for s in d.summands {
        if is_projective(alg, &s.rep) {
            let t = top_multiplicities(&s.rep, alg);
            let i = t.iter().position(|&x| x == 1).unwrap();
            removed[i] += 1;
        } else {
            keep.push(s.rep);
        }
    }
    Ok(Stripped {
        rep: Rep::direct_sum_all(alg, &keep),
        removed,
        certified: d.certified,
    })
}

/// `Ω(M)`: kernel of the projective cover of `M` with its projective
/// summands removed. `Ω` of a projective module is zero.
pub fn omega(alg: &AlgebraTable, m: &Rep, seed: u64) -> Result<Rep> {
    let s = strip_projective_summands(alg, m, seed)?;
    if s.rep.is_zero() {
        return Ok(s.rep);
    }
    Ok(projective_cover(alg, &s.rep)?.kernel(alg).0)
}

pub fn omega_power(alg: &AlgebraTable, m: &Rep, k: usize, seed: u64) -> Result<Rep> {
    let mut x = m.clone();
    for _ in 0..k {
        x = omega(alg, &x, seed)?;
    }
    Ok(x)
}

fn require_form(alg: &AlgebraTable, form: &SymmetrizingForm) -> Result<()> {
    if alg.verify_form(form) {
        Ok(())
    } else {
        Err(Error::MissingForm)
    }
}

/// `Ω^{-1}(M) = D Ω_{Λ^op} D(M)`: the dual of a minimal projective cover of
/// `D M` is a minimal injective envelope of `M`.
pub fn cosyzygy(alg: &AlgebraTable, form: &SymmetrizingForm, m: &Rep, seed: u64) -> Result<Rep> {
    require_form(alg, form)?;
    let op = alg.opposite();
    Ok(dualize(&omega(op, &dualize(m), seed)?))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Period {
    Projective,
    Finite(usize),
    AperiodicUpTo(usize),
}

impl Period {
    pub fn divides_four(&self) -> bool {
        matches!(self, Period::Finite(k) if 4 % k == 0)
    }
}

impl fmt::Display for Period {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Period::Projective => write!(f, "projective"),
            Period::Finite(k) => write!(f, "{k}"),
            Period::AperiodicUpTo(b) => write!(f, "aperiodic-up-to-bound({b})"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct PeriodReport {
    pub period: Period,
    /// `Ω^period(M) ≅ M`, from the projective-free part of `M` to
    /// `Ω^period(M)`.
    pub witness: Option<ModuleMap>,
    /// Copies of each `P_i` removed from `M` before iterating.
    pub stripped: Vec<usize>,
    /// Total dimensions of `M, Ω M, Ω² M, ...` as computed.
    pub dims: Vec<usize>,
    /// False if some non-isomorphism along the way was only probabilistic.
    pub certified: bool,
    pub seed: u64,
}

/// Least `k <= bound` with `Ω^k(M) ≅ M`, where `M` has its projective
/// summands removed first.
pub fn omega_period(alg: &AlgebraTable, m: &Rep, bound: usize, seed: u64) -> Result<PeriodReport> {
    if bound == 0 {
        return Err(Error::ParameterOutOfRange("period bound must be at least 1".into()));
    }
    let s = strip_projective_summands(alg, m, seed)?;
    let start = s.rep;
    let mut certified = s.certified;
    let mut dims = vec![start.total_dim()];
    if start.is_zero() {
        return Ok(PeriodReport {
            period: Period::Projective,
            witness: None,
            stripped: s.removed,
            dims,
            certified,
            seed,
        });
    }
    let mut x = start.clone();
    for k in 1..=bound {
        x = omega(alg, &x, seed)?;
        dims.push(x.total_dim());
        if x.is_zero() {
            break;
        }
        let r = is_isomorphic(alg, &start, &x, seed)?;
        certified &= r.is_certain();
        if let Some(phi) = r.map() {
            return Ok(PeriodReport {
                period: Period::Finite(k),
                witness: Some(phi.clone()),
                stripped: s.removed,
                dims,
                certified,
                seed,
            });
        }
    }
    Ok(PeriodReport {
        period: Period::AperiodicUpTo(bound),
        witness: None,
        stripped: s.removed,
        dims,
        certified,
        seed,
    })
}

fn require_period_divides_four(alg: &AlgebraTable, i: Vertex, seed: u64) -> Result<PeriodReport> {
    if i >= alg.vertex_count() {
        return Err(Error::UnknownVertex(i + 1));
    }
    let r = omega_period(alg, &simple(alg, i), 4, seed)?;
    if !r.period.divides_four() {
        return Err(Error::PeriodHypothesisFails {
            vertex: i + 1,
            period: r.period.to_string(),
        });
    }
    Ok(r)
}

/// One term of the exact sequence, with its total dimension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainTerm {
    pub name: String,
    pub dim: usize,
}

#[derive(Clone, Debug)]
pub struct FourTermSequence {
    pub vertex: Vertex,
    /// `S_i, P_3, P_2, P_1, P_0, S_i` from left to right.
    pub terms: Vec<ChainTerm>,
    /// `P_0 ≅ P_i`, `P_1 ≅ P_i^+`, `P_2 ≅ P_i^-`, `P_3 ≅ P_i`.
    pub terms_match: bool,
    /// Rank conditions at every position.
    pub exact: bool,
    /// `Im d_k ≅ Ω^k(S_i)` for `k = 1, 2, 3`, and `ker d_3 ≅ S_i`.
    pub images_match: [bool; 4],
    pub certified: bool,
}

impl FourTermSequence {
    pub fn holds(&self) -> bool {
        self.terms_match && self.exact && self.images_match.iter().all(|&b| b)
    }

    pub fn dims(&self) -> Vec<usize> {
        self.terms.iter().map(|t| t.dim).collect()
    }
}

fn sorted(mut v: Vec<Vertex>) -> Vec<Vertex> {
    v.sort_unstable();
    v
}

/// Builds the minimal projective resolution of `S_i` to degree 3 and checks
/// it against `0 → S_i → P_i → P_i^- → P_i^+ → P_i → S_i → 0`.
pub fn four_term_sequence(alg: &AlgebraTable, i: Vertex, seed: u64) -> Result<FourTermSequence> {
    require_period_divides_four(alg, i, seed)?;
    let q = alg.quiver();
    let s = simple(alg, i);
    let mut certified = true;
    let mut covers = Vec::new();
    let mut kernels = Vec::new();
    let mut current = s.clone();
    for _ in 0..4 {
        let c = projective_cover(alg, &current)?;
        let (k, incl) = c.kernel(alg);
        current = k.clone();
        kernels.push((k, incl));
        covers.push(c);
        if current.is_zero() {
            break;
        }
    }
    if covers.len() < 4 {
        return Err(Error::PeriodHypothesisFails {
            vertex: i + 1,
            period: "projective resolution stops".into(),
        });
    }
    // d_k = ι_k ∘ π_k : P_k -> P_{k-1}
    let d: Vec<ModuleMap> = (1..4)
        .map(|k| kernels[k - 1].1.after(&covers[k].map))
        .collect();
    let dim = |r: &Rep| r.total_dim();
    let p: Vec<&Rep> = covers.iter().map(|c| &c.projective).collect();
    let plus: Vec<Vertex> = q.out_arrows(i)?.iter().map(|&a| q.arrow(a).target).collect();
    let minus: Vec<Vertex> = q.in_arrows(i)?.iter().map(|&a| q.arrow(a).source).collect();
    let terms_match = covers[0].summands == vec![i]
        && sorted(covers[1].summands.clone()) == sorted(plus)
        && sorted(covers[2].summands.clone()) == sorted(minus)
        && covers[3].summands == vec![i];
    let r: Vec<usize> = d.iter().map(|x| x.rank()).collect();
    let eps = covers[0].map.rank();
    let ker_d3 = kernels[3].0.total_dim();
    let exact = eps == 1
        && r[0] + eps == dim(p[0])
        && r[0] + r[1] == dim(p[1])
        && r[1] + r[2] == dim(p[2])
        && r[2] + ker_d3 == dim(p[3]);
    let mut images_match = [false; 4];
    let mut omega_k = s.clone();
    for k in 0..3 {
        omega_k = omega(alg, &omega_k, seed)?;
        let (img, _) = submodule(p[k], alg, &d[k].image());
        let res = is_isomorphic(alg, &img, &omega_k, seed)?;
        certified &= res.is_certain();
        images_match[k] = res.is_iso();
    }
    let res = is_isomorphic(alg, &kernels[3].0, &s, seed)?;
    certified &= res.is_certain();
    images_match[3] = res.is_iso();
    let name = |label: &str| format!("{label}{}", i + 1);
    let terms = vec![
        ChainTerm { name: name("S"), dim: ker_d3 },
        ChainTerm { name: name("P"), dim: dim(p[3]) },
        ChainTerm { name: format!("{}^-", name("P")), dim: dim(p[2]) },
        ChainTerm { name: format!("{}^+", name("P")), dim: dim(p[1]) },
        ChainTerm { name: name("P"), dim: dim(p[0]) },
        ChainTerm { name: name("S"), dim: 1 },
    ];
    Ok(FourTermSequence {
        vertex: i,
        terms,
        terms_match,
        exact,
        images_match,
        certified,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimensionIdentity {
    pub vertex: Vertex,
    pub omega2: usize,
    pub p_i: usize,
    pub p_plus: usize,
    pub p_minus: usize,
    pub s_i: usize,
}

impl DimensionIdentity {
    /// `|Ω²(S_i)| + |P_i| = |P_i^+| + |S_i| = |P_i^-| + |S_i|`.
    pub fn holds(&self) -> bool {
        let lhs = self.omega2 + self.p_i;
        lhs == self.p_plus + self.s_i && lhs == self.p_minus + self.s_i
    }
}

pub fn dimension_identity(alg: &AlgebraTable, i: Vertex, seed: u64) -> Result<DimensionIdentity> {
    require_period_divides_four(alg, i, seed)?;
    let q = alg.quiver();
    let s = simple(alg, i);
    let omega2 = omega_power(alg, &s, 2, seed)?.total_dim();
    let p_plus = q.out_arrows(i)?.iter().map(|&a| alg.projective_dim(q.arrow(a).target)).sum();
    let p_minus = q.in_arrows(i)?.iter().map(|&a| alg.projective_dim(q.arrow(a).source)).sum();
    Ok(DimensionIdentity {
        vertex: i,
        omega2,
        p_i: alg.projective_dim(i),
        p_plus,
        p_minus,
        s_i: 1,
    })
}

/// `τ M = D Tr M`. With a minimal presentation `P_1 -> P_0 -> M -> 0`
/// given by entries `x_kl ∈ e_{i_k} Λ e_{j_l}`, the transpose is the
/// cokernel of `⊕_k e_{i_k}Λ^op -> ⊕_l e_{j_l}Λ^op`, `z ↦ (z x_kl)_l`.
pub fn tau(alg: &AlgebraTable, form: &SymmetrizingForm, m: &Rep, seed: u64) -> Result<Rep> {
    require_form(alg, form)?;
    let stripped = strip_projective_summands(alg, m, seed)?;
    if stripped.removed.iter().any(|&r| r > 0) {
        return Err(Error::PremiseFails("τ needs a module without projective summands".into()));
    }
    if m.is_zero() {
        return Ok(m.clone());
    }
    let f = alg.field();
    let op = alg.opposite();
    let v = alg.vertex_count();
    let c0 = projective_cover(alg, m)?;
    let (k, incl) = c0.kernel(alg);
    if k.is_zero() {
        return Err(Error::PremiseFails("τ of a projective module".into()));
    }
    let c1 = projective_cover(alg, &k)?;
    let d1 = incl.after(&c1.map);
    let offsets0 = summand_offsets(alg, &c0.summands);
    let offsets1 = summand_offsets(alg, &c1.summands);
    // x[k][l]: the component in the k-th summand of P_0 of the image of the
    // l-th generator of P_1, as an element of Λ.
    let x: Vec<Vec<Vec<u32>>> = c0
        .summands
        .iter()
        .enumerate()
        .map(|(kk, &ik)| {
            c1.summands
                .iter()
                .enumerate()
                .map(|(l, &jl)| {
                    // generator of the l-th summand is e_{jl}, the first
                    // element of block (jl, jl)
                    let gen_col = offsets1[l][jl];
                    let col = d1.maps[jl].column(gen_col);
                    let mut elem = vec![0; alg.dim()];
                    for (r, b) in alg.block(ik, jl).into_iter().enumerate() {
                        elem[b] = col[offsets0[kk][jl] + r];
                    }
                    elem
                })
                .collect()
        })
        .collect();
    let q0: Vec<Rep> = c0.summands.iter().map(|&i| projective(op, i)).collect();
    let q1: Vec<Rep> = c1.summands.iter().map(|&j| projective(op, j)).collect();
    let big0 = Rep::direct_sum_all(op, &q0);
    let big1 = Rep::direct_sum_all(op, &q1);
    let op_off0 = summand_offsets(op, &c0.summands);
    let op_off1 = summand_offsets(op, &c1.summands);
    let maps: Vec<Mat> = (0..v)
        .map(|w| {
            let mut mat = Mat::zeros(f, big1.dims()[w], big0.dims()[w]);
            for (kk, &ik) in c0.summands.iter().enumerate() {
                // basis of (e_{ik} Λ^op) at w: Λ-elements of e_w Λ e_{ik}
                for (cz, z) in op.block(ik, w).into_iter().enumerate() {
                    for (l, &jl) in c1.summands.iter().enumerate() {
                        let prod = alg.mul(&alg.unit_vector(z), &x[kk][l]);
                        for (r, b) in op.block(jl, w).into_iter().enumerate() {
                            mat.set(op_off1[l][w] + r, op_off0[kk][w] + cz, prod[b]);
                        }
                    }
                }
            }
            mat
        })
        .collect();
    let map = ModuleMap { maps };
    debug_assert!(map.is_hom(op, &big0, &big1));
    let (tr, _) = quotient(&big1, op, &map.image());
    Ok(dualize(&tr))
}

/// `offsets[k][w]`: position of the `k`-th summand's block at vertex `w`
/// inside `⊕_k P_{v_k}`.
fn summand_offsets(alg: &AlgebraTable, summands: &[Vertex]) -> Vec<Vec<usize>> {
    let v = alg.vertex_count();
    let mut acc = vec![0; v];
    summands
        .iter()
        .map(|&i| {
            let here = acc.clone();
            for (w, a) in acc.iter_mut().enumerate() {
                *a += alg.block(i, w).len();
            }
            here
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TauReport {
    pub checked: usize,
    /// Indices into the corpus where `τ M ≇ Ω² M`.
    pub failures: Vec<usize>,
    pub certified: bool,
}

impl TauReport {
    pub fn holds(&self) -> bool {
        self.failures.is_empty()
    }
}

pub fn verify_tau_is_omega_squared(
    alg: &AlgebraTable,
    form: &SymmetrizingForm,
    corpus: &[Rep],
    seed: u64,
) -> Result<TauReport> {
    let mut failures = Vec::new();
    let mut certified = true;
    for (idx, m) in corpus.iter().enumerate() {
        let t = tau(alg, form, m, seed)?;
        let o2 = omega_power(alg, m, 2, seed)?;
        let r = is_isomorphic(alg, &t, &o2, seed)?;
        certified &= r.is_certain();
        if !r.is_iso() {
            failures.push(idx);
        }
    }
    Ok(TauReport {
        checked: corpus.len(),
        failures,
        certified,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::DEFAULT_MAX_LEN;
    use crate::families::{family_i, family_ii, family_iii};
    use crate::linalg::PrimeField;
    use crate::quiver::Quiver;
    use crate::rep::{heart, radical, radical_quotient, top};

    fn f(p: u32) -> PrimeField {
        PrimeField::new(p).unwrap()
    }
    fn fam_i(n: usize, p: u32) -> AlgebraTable {
        family_i(n, f(p)).unwrap().build(DEFAULT_MAX_LEN).unwrap()
    }
    fn fam_ii(n: usize, p: u32) -> AlgebraTable {
        family_ii(n, f(p)).unwrap().build(DEFAULT_MAX_LEN).unwrap()
    }
    fn fam_iii(t: usize, p: u32) -> AlgebraTable {
        family_iii(t, f(p)).unwrap().build(DEFAULT_MAX_LEN).unwrap()
    }
    fn form(a: &AlgebraTable) -> SymmetrizingForm {
        a.find_symmetrizing_form(0).form().cloned().unwrap()
    }
    fn iso(a: &AlgebraTable, m: &Rep, n: &Rep) -> bool {
        is_isomorphic(a, m, n, 3).unwrap().is_iso()
    }

    #[test]
    fn covers() {
        let a = fam_iii(2, 3);
        let p2 = projective(&a, 1);
        let c = projective_cover(&a, &p2).unwrap();
        assert_eq!(c.summands, vec![1]);
        assert!(c.kernel(&a).0.is_zero());
        let c = projective_cover(&a, &simple(&a, 0)).unwrap();
        assert_eq!(c.summands, vec![0]);
        let (beta, _) = radical(&p2, &a);
        let c = projective_cover(&a, &beta).unwrap();
        assert_eq!(c.summands, vec![0]);
        assert_eq!(c.kernel(&a).0.total_dim(), 2);
        assert_eq!(projective_cover(&a, &Rep::zero(&a)).unwrap_err(), Error::ZeroModule);
    }

    #[test]
    fn syzygies() {
        let a = fam_i(2, 2);
        let s = simple(&a, 0);
        assert!(iso(&a, &omega(&a, &s, 0).unwrap(), &s));
        for n in 1..=3 {
            let b = fam_ii(n, 3);
            let o = omega(&b, &simple(&b, 0), 0).unwrap();
            assert_eq!(o.total_dim(), 2 * n);
            assert!(iso(&b, &o, &radical(&projective(&b, 0), &b).0));
        }
        assert!(omega(&a, &projective(&a, 0), 0).unwrap().is_zero());
    }

    #[test]
    fn cosyzygies() {
        let a = fam_ii(2, 2);
        let lam = form(&a);
        let s1 = simple(&a, 0);
        let o = omega(&a, &s1, 0).unwrap();
        assert!(iso(&a, &cosyzygy(&a, &lam, &o, 0).unwrap(), &s1));
        // Ω^{-1}(S_2) ≅ αΛ = rad P_1
        let s2 = simple(&a, 1);
        let alpha = radical(&projective(&a, 0), &a).0;
        assert!(iso(&a, &cosyzygy(&a, &lam, &s2, 0).unwrap(), &alpha));
        assert!(cosyzygy(&a, &lam, &Rep::zero(&a), 0).unwrap().is_zero());
        let bad = SymmetrizingForm { values: vec![0; a.dim()] };
        assert_eq!(cosyzygy(&a, &bad, &s1, 0).unwrap_err(), Error::MissingForm);
    }

    #[test]
    fn periods() {
        let a = fam_i(2, 3);
        assert_eq!(omega_period(&a, &simple(&a, 0), 12, 0).unwrap().period, Period::Finite(1));
        for n in 3..=5 {
            let a = fam_i(n, 2);
            assert_eq!(omega_period(&a, &simple(&a, 0), 12, 0).unwrap().period, Period::Finite(2));
        }
        for n in 1..=3 {
            let b = fam_ii(n, 2);
            for i in 0..2 {
                let r = omega_period(&b, &simple(&b, i), 12, 0).unwrap();
                assert_eq!(r.period, Period::Finite(4));
                assert!(r.certified);
                let w = r.witness.unwrap();
                assert!(w.is_iso());
            }
        }
        let c = fam_iii(2, 3);
        for i in 0..2 {
            let r = omega_period(&c, &simple(&c, i), 12, 0).unwrap();
            assert_eq!(r.period, Period::Finite(4));
        }
        let o2 = omega_power(&c, &simple(&c, 1), 2, 0).unwrap();
        assert_eq!(o2.total_dim(), 2);
        let p = omega_period(&c, &projective(&c, 0), 12, 0).unwrap();
        assert_eq!(p.period, Period::Projective);
        assert_eq!(p.stripped, vec![1, 0]);
        assert_eq!(Period::AperiodicUpTo(12).to_string(), "aperiodic-up-to-bound(12)");
    }

    #[test]
    fn aperiodic_for_a_non_selfinjective_algebra() {
        // A2: Ω(S_1) = S_2 is projective, so S_1 has no period
        let q = Quiver::new(2, &[("a", 1, 2)]).unwrap();
        let a = AlgebraTable::build(q, f(2), vec![], DEFAULT_MAX_LEN).unwrap();
        let r = omega_period(&a, &simple(&a, 0), 12, 0).unwrap();
        assert!(matches!(r.period, Period::AperiodicUpTo(12)));
        assert!(!r.period.divides_four());
        assert!(matches!(
            four_term_sequence(&a, 0, 0),
            Err(Error::PeriodHypothesisFails { vertex: 1, .. })
        ));
        let s = strip_projective_summands(&a, &projective(&a, 0).direct_sum(&simple(&a, 0)), 0).unwrap();
        assert_eq!(s.removed, vec![1, 0]);
        assert!(iso(&a, &s.rep, &simple(&a, 0)));
    }

    #[test]
    fn sequences() {
        let a = fam_ii(1, 2);
        let s = four_term_sequence(&a, 0, 0).unwrap();
        assert!(s.holds());
        assert_eq!(s.dims(), [1, 3, 3, 3, 3, 1]);
        let b = fam_iii(2, 3);
        let s = four_term_sequence(&b, 1, 0).unwrap();
        assert!(s.holds());
        assert_eq!(s.dims(), [1, 3, 4, 4, 3, 1]);
        let c = fam_i(2, 5);
        let s = four_term_sequence(&c, 0, 0).unwrap();
        assert!(s.holds());
        assert_eq!(s.dims(), [1, 2, 2, 2, 2, 1]);
        let s = four_term_sequence(&b, 0, 0).unwrap();
        assert!(s.holds());
    }

    #[test]
    fn identities() {
        let a = fam_ii(1, 2);
        let d = dimension_identity(&a, 0, 0).unwrap();
        assert_eq!((d.omega2, d.p_i, d.p_plus, d.p_minus), (1, 3, 3, 3));
        assert!(d.holds());
        let b = fam_iii(2, 3);
        let d = dimension_identity(&b, 1, 0).unwrap();
        assert_eq!((d.omega2, d.p_i, d.p_plus), (2, 3, 4));
        assert!(d.holds());
        let c = fam_i(2, 2);
        let d = dimension_identity(&c, 0, 0).unwrap();
        assert_eq!((d.omega2, d.p_i, d.p_plus), (1, 2, 2));
        assert!(d.holds());
    }

    #[test]
    fn translate() {
        let a = fam_ii(1, 3);
        let lam = form(&a);
        let t = tau(&a, &lam, &simple(&a, 0), 0).unwrap();
        assert!(iso(&a, &t, &simple(&a, 1)));
        for n in 3..=4 {
            let b = fam_i(n, 2);
            let lam = form(&b);
            let s = simple(&b, 0);
            assert!(iso(&b, &tau(&b, &lam, &s, 0).unwrap(), &s));
        }
        assert!(matches!(tau(&a, &lam, &projective(&a, 0), 0), Err(Error::PremiseFails(_))));
        let c = fam_iii(3, 5);
        let lam = form(&c);
        let mut corpus = Vec::new();
        for i in 0..2 {
            let p = projective(&c, i);
            corpus.push(simple(&c, i));
            corpus.push(radical(&p, &c).0);
            corpus.push(radical_quotient(&p, &c, 2).0);
            corpus.push(top(&p, &c).0);
            corpus.push(heart(&c, i).unwrap().0);
        }
        let r = verify_tau_is_omega_squared(&c, &lam, &corpus, 0).unwrap();
        assert!(r.holds(), "{r:?}");
    }

    #[test]
    fn cosyzygy_round_trips() {
        for a in [fam_ii(2, 3), fam_iii(2, 2), fam_i(4, 3)] {
            let lam = form(&a);
            for i in 0..a.vertex_count() {
                for k in 1..4 {
                    let m = radical_quotient(&projective(&a, i), &a, k).0;
                    if crate::rep::is_projective(&a, &m) {
                        continue;
                    }
                    let o = omega(&a, &m, 0).unwrap();
                    assert_eq!(
                        o.total_dim(),
                        projective_cover(&a, &m).unwrap().projective.total_dim() - m.total_dim()
                    );
                    assert!(iso(&a, &cosyzygy(&a, &lam, &o, 0).unwrap(), &m));
                    let co = cosyzygy(&a, &lam, &m, 0).unwrap();
                    assert!(iso(&a, &omega(&a, &co, 0).unwrap(), &m));
                    let s = strip_projective_summands(&a, &o, 0).unwrap();
                    assert!(s.removed.iter().all(|&r| r == 0));
                }
            }
        }
    }
}
