//! Enumeration of indecomposable modules of bounded dimension.
//!
//! Two independent methods are provided.
//!
//! * `Raw` runs through every assignment of arrow matrices over `F_p` for
//!   each dimension vector, pruning with the relations arrow by arrow. It is
//!   limited by the number of free matrix entries.
//! * `Extension` builds indecomposables of dimension `d` from those of
//!   smaller dimension. Such a module `E` has a simple quotient `S_i` whose
//!   kernel is `K = ⊕ X^{μ_X}` with `X` already known. If the components of
//!   the extension class in `Ext¹(S_i, X)^{μ_X}` were linearly dependent, a
//!   change of basis of `X^{μ_X}` would split off a copy of `X`. So `E`
//!   arises from a choice of `μ_X`-dimensional subspace of `Ext¹(S_i, X)` for
//!   each `X`, and running through all of them finds every indecomposable.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::algebra::{AlgebraTable, SymmetrizingForm};
use crate::error::{Error, Result};
use crate::linalg::{Mat, PrimeField, Subspace};
use crate::quiver::Vertex;
use crate::rep::{
    fitting_split, hom_space, is_isomorphic, is_projective, simple, socle_multiplicities,
    top_multiplicities, Rep,
};
use crate::syzygy::{cosyzygy, omega, omega_period, Period, DEFAULT_PERIOD_BOUND};

/// Default bound on the number of free matrix entries in raw enumeration.
pub const DEFAULT_ENTRY_CAP: usize = 24;

/// `Auto` runs raw enumeration only if the unpruned assignment count
/// `Σ p^entries` stays below this.
pub const RAW_ASSIGNMENT_BUDGET: u64 = 1 << 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CensusMethod {
    /// `Raw` when every dimension vector fits under the entry cap and the
    /// assignment budget, `Extension` otherwise.
    Auto,
    Raw,
    Extension,
}

#[derive(Clone, Copy, Debug)]
pub struct CensusOptions {
    pub method: CensusMethod,
    pub entry_cap: usize,
    pub period_bound: usize,
    pub seed: u64,
}

impl Default for CensusOptions {
    fn default() -> Self {
        CensusOptions {
            method: CensusMethod::Auto,
            entry_cap: DEFAULT_ENTRY_CAP,
            period_bound: DEFAULT_PERIOD_BOUND,
            seed: 0,
        }
    }
}

#[derive(Clone, Debug)]
pub struct CensusEntry {
    pub rep: Rep,
    pub period: Period,
    pub projective: bool,
}

impl CensusEntry {
    pub fn dims(&self) -> &[usize] {
        self.rep.dims()
    }
}

#[derive(Clone, Debug)]
pub struct Census {
    pub max_dim: usize,
    pub p: u32,
    pub entries: Vec<CensusEntry>,
    /// Every module of total dimension `<= max_dim` was accounted for.
    pub exhaustive: bool,
    /// The method that actually ran.
    pub method: CensusMethod,
    /// False if an indecomposability or isomorphism verdict was only
    /// probabilistic.
    pub certified: bool,
}

impl Census {
    pub fn non_projective(&self) -> impl Iterator<Item = &CensusEntry> {
        self.entries.iter().filter(|e| !e.projective)
    }
}

fn free_entries(alg: &AlgebraTable, dims: &[usize]) -> usize {
    alg.quiver()
        .arrows()
        .iter()
        .map(|a| dims[a.target] * dims[a.source])
        .sum()
}

/// Calls `visit` on every representation with dimension vector `dims`, in a
/// fixed order. Relations are checked as soon as all their arrows are set.
pub fn for_each_rep(
    alg: &AlgebraTable,
    dims: &[usize],
    cap: usize,
    mut visit: impl FnMut(Rep),
) -> Result<()> {
    let q = alg.quiver();
    if dims.len() != q.vertex_count() {
        return Err(Error::AlgebraMismatch);
    }
    let entries = free_entries(alg, dims);
    if entries > cap {
        return Err(Error::CensusCapExceeded {
            entries,
            cap,
            dimvec: dims.to_vec(),
        });
    }
    // Relation r becomes checkable once its largest arrow id is assigned.
    let n_arrows = q.arrows().len();
    let mut ready: Vec<Vec<usize>> = vec![Vec::new(); n_arrows.max(1)];
    for (ri, r) in alg.relations().iter().enumerate() {
        let last = r.terms().iter().flat_map(|(_, p)| p.arrows().iter().copied()).max().unwrap_or(0);
        ready[last].push(ri);
    }
    let f = alg.field();
    let mut action: Vec<Mat> = q
        .arrows()
        .iter()
        .map(|a| Mat::zeros(f, dims[a.target], dims[a.source]))
        .collect();
    fn rec(
        alg: &AlgebraTable,
        dims: &[usize],
        ready: &[Vec<usize>],
        action: &mut Vec<Mat>,
        arrow: usize,
        visit: &mut dyn FnMut(Rep),
    ) {
        let q = alg.quiver();
        let f = alg.field();
        if arrow == q.arrows().len() {
            visit(Rep::raw(f, dims.to_vec(), action.clone()));
            return;
        }
        let (r, c) = (action[arrow].rows(), action[arrow].cols());
        let total = f.count(r * c);
        for idx in 0..total {
            let data = f.vector_at(idx, r * c);
            action[arrow] = Mat::from_vec(f, r, c, data);
            let ok = ready[arrow].iter().all(|&ri| {
                let rel = &alg.relations()[ri];
                let (s, t) = (rel.source(), rel.target(q));
                let mut m = Mat::zeros(f, dims[t], dims[s]);
                for (coef, p) in rel.terms() {
                    let mut x = Mat::identity(f, dims[s]);
                    for &a in p.arrows() {
                        x = action[a].mul(&x);
                    }
                    m.add_scaled(*coef, &x);
                }
                m.is_zero()
            });
            if ok {
                rec(alg, dims, ready, action, arrow + 1, visit);
            }
        }
    }
    rec(alg, dims, &ready, &mut action, 0, &mut visit);
    Ok(())
}

/// All representations with dimension vector `dims`.
pub fn enumerate_reps(alg: &AlgebraTable, dims: &[usize], cap: usize) -> Result<Vec<Rep>> {
    let mut out = Vec::new();
    for_each_rep(alg, dims, cap, |r| out.push(r))?;
    Ok(out)
}

/// Dimension vectors with total in `1..=max_dim`, by total then
/// lexicographically.
pub fn dimension_vectors(vertices: usize, max_dim: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for total in 1..=max_dim {
        let mut cur = vec![0; vertices];
        compositions(total, 0, &mut cur, &mut out);
    }
    out
}

fn compositions(rest: usize, i: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if i + 1 == cur.len() {
        cur[i] = rest;
        out.push(cur.clone());
        return;
    }
    for k in (0..=rest).rev() {
        cur[i] = k;
        compositions(rest - k, i + 1, cur, out);
    }
}

/// Cheap isomorphism invariants used to bucket candidates.
type Fingerprint = (Vec<usize>, Vec<usize>, Vec<usize>, usize);

fn fingerprint(alg: &AlgebraTable, m: &Rep) -> Result<Fingerprint> {
    Ok((
        m.dims().to_vec(),
        top_multiplicities(m, alg),
        socle_multiplicities(m, alg),
        hom_space(alg, m, m)?.len(),
    ))
}

/// Keeps one representative per isomorphism class, in insertion order.
struct Classes {
    reps: Vec<Rep>,
    buckets: BTreeMap<Fingerprint, Vec<usize>>,
    certified: bool,
    seed: u64,
}

impl Classes {
    fn new(seed: u64) -> Self {
        Classes {
            reps: Vec::new(),
            buckets: BTreeMap::new(),
            certified: true,
            seed,
        }
    }

    /// Inserts `m` if it is indecomposable and new.
    fn offer(&mut self, alg: &AlgebraTable, m: Rep) -> Result<bool> {
        let key = fingerprint(alg, &m)?;
        if let Some(ids) = self.buckets.get(&key) {
            for &id in ids {
                let r = is_isomorphic(alg, &self.reps[id], &m, self.seed)?;
                self.certified &= r.is_certain();
                if r.is_iso() {
                    return Ok(false);
                }
            }
        }
        let d = fitting_split(alg, &m, self.seed)?;
        self.certified &= d.certified;
        if d.summands.len() != 1 {
            return Ok(false);
        }
        self.buckets.entry(key).or_default().push(self.reps.len());
        self.reps.push(m);
        Ok(true)
    }
}

fn raw_classes(alg: &AlgebraTable, max_dim: usize, cap: usize, seed: u64) -> Result<Classes> {
    let mut classes = Classes::new(seed);
    for dims in dimension_vectors(alg.vertex_count(), max_dim) {
        let mut err = None;
        for_each_rep(alg, &dims, cap, |r| {
            if err.is_none() {
                if let Err(e) = classes.offer(alg, r) {
                    err = Some(e);
                }
            }
        })?;
        if let Some(e) = err {
            return Err(e);
        }
    }
    Ok(classes)
}

/// `Ext¹(S_i, X)` as cocycles modulo coboundaries. A cocycle assigns to each
/// arrow `a` leaving `i` a vector `y_a ∈ X e_{t(a)}`.
struct ExtData {
    /// Arrows leaving `i`, in declaration order.
    arrows: Vec<usize>,
    /// Offsets of each `y_a` in the stacked cocycle vector.
    offsets: Vec<usize>,
    /// Representative cocycles of a basis of `Ext¹`.
    basis: Vec<Vec<u32>>,
}

fn ext_from_simple(alg: &AlgebraTable, i: Vertex, x: &Rep) -> Result<ExtData> {
    let f = alg.field();
    let q = alg.quiver();
    let arrows = q.out_arrows(i)?;
    let mut offsets = Vec::new();
    let mut width = 0;
    for &a in &arrows {
        offsets.push(width);
        width += x.dims()[q.arrow(a).target];
    }
    // Relations starting at i: Σ c · X(tail) y_{first arrow} = 0.
    let mut rows: Vec<Vec<u32>> = Vec::new();
    for rel in alg.relations().iter().filter(|r| r.source() == i) {
        let t = rel.target(q);
        let mut block = Mat::zeros(f, x.dims()[t], width);
        for (c, p) in rel.terms() {
            let first = p.arrows()[0];
            let pos = arrows.iter().position(|&a| a == first).unwrap();
            let mid = q.arrow(first).target;
            let mut tail = Mat::identity(f, x.dims()[mid]);
            for &a in &p.arrows()[1..] {
                tail = x.action(a).mul(&tail);
            }
            for r in 0..tail.rows() {
                for k in 0..tail.cols() {
                    let cur = block.get(r, offsets[pos] + k);
                    block.set(r, offsets[pos] + k, f.add(cur, f.mul(*c, tail.get(r, k))));
                }
            }
        }
        rows.extend(block.row_vectors());
    }
    let cocycles = if rows.is_empty() {
        Subspace::full(f, width)
    } else {
        Subspace::kernel_of(&Mat::from_rows(f, width, &rows))
    };
    // Coboundaries: y_a = X(a) v for v ∈ X e_i.
    let mut bnd = Vec::new();
    for k in 0..x.dims()[i] {
        let mut v = vec![0; width];
        for (pos, &a) in arrows.iter().enumerate() {
            let col = x.action(a).column(k);
            v[offsets[pos]..offsets[pos] + col.len()].copy_from_slice(&col);
        }
        bnd.push(v);
    }
    let boundaries = Subspace::span(f, width, &bnd);
    debug_assert!(cocycles.contains_subspace(&boundaries));
    let basis = cocycles.quotient(&boundaries)?.section;
    Ok(ExtData {
        arrows,
        offsets,
        basis,
    })
}

/// Bases of all `k`-dimensional subspaces of `F^n`, as reduced echelon
/// coefficient rows.
pub fn subspaces(f: PrimeField, n: usize, k: usize) -> Vec<Vec<Vec<u32>>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut pivots = Vec::new();
    choose(n, k, 0, &mut pivots, &mut |piv: &[usize]| {
        // Free positions: row r, column c > piv[r], c not a pivot.
        let mut free = Vec::new();
        for (r, &pc) in piv.iter().enumerate() {
            for c in pc + 1..n {
                if !piv.contains(&c) {
                    free.push((r, c));
                }
            }
        }
        let total = f.count(free.len());
        for idx in 0..total {
            let vals = f.vector_at(idx, free.len());
            let mut rows = vec![vec![0; n]; k];
            for (r, &pc) in piv.iter().enumerate() {
                rows[r][pc] = 1;
            }
            for (&(r, c), &v) in free.iter().zip(&vals) {
                rows[r][c] = v;
            }
            out.push(rows);
        }
    });
    out
}

fn choose(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, emit: &mut dyn FnMut(&[usize])) {
    if cur.len() == k {
        emit(cur);
        return;
    }
    for c in start..n {
        cur.push(c);
        choose(n, k, c + 1, cur, emit);
        cur.pop();
    }
}

/// The extension `0 -> ⊕_k X_k -> E -> S_i -> 0` whose class has the given
/// component cocycle in each summand `X_k`.
fn build_extension(
    alg: &AlgebraTable,
    i: Vertex,
    parts: &[(&Rep, &ExtData, Vec<u32>)],
) -> Rep {
    let f = alg.field();
    let q = alg.quiver();
    let v = q.vertex_count();
    let xs: Vec<Rep> = parts.iter().map(|(x, _, _)| (*x).clone()).collect();
    let k = Rep::direct_sum_all(alg, &xs);
    let mut dims = k.dims().to_vec();
    dims[i] += 1;
    // Offsets of each summand inside K at every vertex.
    let mut offs = Vec::new();
    let mut acc = vec![0; v];
    for x in &xs {
        offs.push(acc.clone());
        for (w, a) in acc.iter_mut().enumerate() {
            *a += x.dims()[w];
        }
    }
    let action = q
        .arrows()
        .iter()
        .enumerate()
        .map(|(a, arr)| {
            let mut m = Mat::zeros(f, dims[arr.target], dims[arr.source]);
            m.set_block(0, 0, k.action(a));
            if arr.source == i {
                let col = dims[i] - 1;
                for (pidx, (x, ext, y)) in parts.iter().enumerate() {
                    let pos = ext.arrows.iter().position(|&b| b == a).unwrap();
                    let len = x.dims()[arr.target];
                    for r in 0..len {
                        m.set(offs[pidx][arr.target] + r, col, y[ext.offsets[pos] + r]);
                    }
                }
            }
            m
        })
        .collect();
    Rep::raw(f, dims, action)
}

fn extension_classes(alg: &AlgebraTable, max_dim: usize, seed: u64) -> Result<Classes> {
    let f = alg.field();
    let v = alg.vertex_count();
    let mut classes = Classes::new(seed);
    for i in 0..v {
        classes.offer(alg, simple(alg, i))?;
    }
    for d in 2..=max_dim {
        let known: Vec<Rep> = classes.reps.clone();
        for i in 0..v {
            // Candidate summands X with Ext¹(S_i, X) ≠ 0 and dim X < d.
            let mut cands: Vec<(usize, ExtData)> = Vec::new();
            for (idx, x) in known.iter().enumerate() {
                if x.total_dim() < d {
                    let e = ext_from_simple(alg, i, x)?;
                    if !e.basis.is_empty() {
                        cands.push((idx, e));
                    }
                }
            }
            let mut choice = vec![0usize; cands.len()];
            let mut types = Vec::new();
            multiplicities(&cands, &known, d - 1, 0, &mut choice, &mut types);
            for mu in types {
                // For each X with μ_X > 0, all μ_X-subspaces of Ext¹(S_i, X).
                let chosen: Vec<(usize, usize)> = mu
                    .iter()
                    .enumerate()
                    .filter(|(_, &m)| m > 0)
                    .map(|(c, &m)| (c, m))
                    .collect();
                let options: Vec<Vec<Vec<Vec<u32>>>> = chosen
                    .iter()
                    .map(|&(c, m)| subspaces(f, cands[c].1.basis.len(), m))
                    .collect();
                let mut pick = vec![0usize; chosen.len()];
                loop {
                    let mut parts = Vec::new();
                    for (slot, &(c, _)) in chosen.iter().enumerate() {
                        let (idx, ext) = &cands[c];
                        for coeffs in &options[slot][pick[slot]] {
                            let mut y = vec![0; ext.basis.first().map_or(0, |b| b.len())];
                            for (b, &cf) in ext.basis.iter().zip(coeffs) {
                                crate::linalg::axpy(f, &mut y, cf, b);
                            }
                            parts.push((&known[*idx], ext, y));
                        }
                    }
                    let e = build_extension(alg, i, &parts);
                    debug_assert!(e.check_relations(alg).is_ok());
                    classes.offer(alg, e)?;
                    // odometer over the subspace choices
                    let mut s = 0;
                    while s < pick.len() {
                        pick[s] += 1;
                        if pick[s] < options[s].len() {
                            break;
                        }
                        pick[s] = 0;
                        s += 1;
                    }
                    if s == pick.len() {
                        break;
                    }
                }
            }
        }
    }
    Ok(classes)
}

/// Multiplicity vectors `μ` with `Σ μ_c dim X_c = target` and
/// `μ_c <= dim Ext¹(S_i, X_c)`.
fn multiplicities(
    cands: &[(usize, ExtData)],
    known: &[Rep],
    target: usize,
    c: usize,
    cur: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if target == 0 {
        let mut v = cur.clone();
        for x in v.iter_mut().skip(c) {
            *x = 0;
        }
        out.push(v);
        return;
    }
    if c == cands.len() {
        return;
    }
    let (idx, ext) = &cands[c];
    let dim = known[*idx].total_dim();
    let max = ext.basis.len().min(target / dim);
    for m in (0..=max).rev() {
        cur[c] = m;
        multiplicities(cands, known, target - m * dim, c + 1, cur, out);
    }
    cur[c] = 0;
}

/// Indecomposable modules of total dimension `<= max_dim` up to
/// isomorphism, with their Ω-periods.
pub fn indecomposable_census(
    alg: &AlgebraTable,
    max_dim: usize,
    opts: CensusOptions,
) -> Result<Census> {
    let f = alg.field();
    let mut budget = 0u64;
    let fits = dimension_vectors(alg.vertex_count(), max_dim).iter().all(|d| {
        let e = free_entries(alg, d);
        budget = budget.saturating_add(f.count(e));
        e <= opts.entry_cap && budget <= RAW_ASSIGNMENT_BUDGET
    });
    let method = match opts.method {
        CensusMethod::Auto if fits => CensusMethod::Raw,
        CensusMethod::Auto => CensusMethod::Extension,
        m => m,
    };
    let classes = match method {
        CensusMethod::Raw => raw_classes(alg, max_dim, opts.entry_cap, opts.seed)?,
        _ => extension_classes(alg, max_dim, opts.seed)?,
    };
    let mut reps = classes.reps;
    reps.sort_by(|a, b| (a.total_dim(), b.dims()).cmp(&(b.total_dim(), a.dims())));
    let periods: Vec<Result<(Period, bool)>> = reps
        .par_iter()
        .map(|m| {
            let r = omega_period(alg, m, opts.period_bound, opts.seed)?;
            Ok((r.period, r.certified))
        })
        .collect();
    let mut certified = classes.certified;
    let mut entries = Vec::with_capacity(reps.len());
    for (rep, pr) in reps.into_iter().zip(periods) {
        let (period, c) = pr?;
        certified &= c;
        entries.push(CensusEntry {
            projective: is_projective(alg, &rep),
            rep,
            period,
        });
    }
    Ok(Census {
        max_dim,
        p: alg.field().p(),
        entries,
        exhaustive: true,
        method,
        certified,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosureReport {
    /// Every Ω and Ω⁻¹ of a non-projective entry is isomorphic to an entry.
    pub closed: bool,
    /// Some Ω or Ω⁻¹ has dimension above the census bound.
    pub open_boundary: bool,
    /// Index of the entry isomorphic to `Ω(M)`, for each entry.
    pub omega: Vec<Option<usize>>,
    /// Index of the entry isomorphic to `Ω⁻¹(M)`.
    pub cosyzygy: Vec<Option<usize>>,
}

fn locate(alg: &AlgebraTable, c: &Census, m: &Rep, seed: u64) -> Result<Option<usize>> {
    for (k, e) in c.entries.iter().enumerate() {
        if e.rep.dims() == m.dims() && is_isomorphic(alg, &e.rep, m, seed)?.is_iso() {
            return Ok(Some(k));
        }
    }
    Ok(None)
}

pub fn omega_closure_check(
    alg: &AlgebraTable,
    c: &Census,
    form: &SymmetrizingForm,
    seed: u64,
) -> Result<ClosureReport> {
    let mut report = ClosureReport {
        closed: true,
        open_boundary: false,
        omega: vec![None; c.entries.len()],
        cosyzygy: vec![None; c.entries.len()],
    };
    for (k, e) in c.entries.iter().enumerate() {
        if e.projective {
            continue;
        }
        let o = omega(alg, &e.rep, seed)?;
        let co = cosyzygy(alg, form, &e.rep, seed)?;
        for (img, slot) in [(o, &mut report.omega[k]), (co, &mut report.cosyzygy[k])] {
            if img.total_dim() > c.max_dim {
                report.open_boundary = true;
                report.closed = false;
                continue;
            }
            *slot = locate(alg, c, &img, seed)?;
            if slot.is_none() {
                report.closed = false;
            }
        }
    }
    Ok(report)
}

/// `(holds, indices of non-projective entries whose period is not 1, 2 or 4)`.
pub fn all_periods_divide_4(c: &Census) -> (bool, Vec<usize>) {
    let bad: Vec<usize> = c
        .entries
        .iter()
        .enumerate()
        .filter(|(_, e)| !e.projective && !e.period.divides_four())
        .map(|(k, _)| k)
        .collect();
    (bad.is_empty(), bad)
}
