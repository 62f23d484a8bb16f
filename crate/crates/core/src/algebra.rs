//! Finite-dimensional bound quiver algebras `Λ = KQ/I`.
//!
//! The quotient is computed by saturating the relations inside the space of
//! paths of bounded length. Let `J_m` be the two-sided ideal generated by the
//! relations in `KQ / rad^{m+1}`. The construction stops at the first `m`
//! for which every path of length `m` lies in `J_m`; then `rad^m ⊆ I` for an
//! admissible `I`, and `Λ = KQ / J_m`.
//!
//! Columns of the path space are ordered by increasing length, so echelon
//! pivots fall on the shortest paths. The surviving (non-pivot) paths form
//! the basis, and every path reduces to a combination of basis paths that are
//! at least as long. Hence `rad^k` is spanned by the basis paths of length
//! at least `k`.

use std::collections::{BTreeMap, HashMap};
use std::sync::OnceLock;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::linalg::{axpy, dot, is_zero_vec, Echelon, Mat, PrimeField, Subspace};
use crate::quiver::{ArrowId, Path, Quiver, Relation, Vertex};

/// Default bound on the path length explored while saturating the ideal.
pub const DEFAULT_MAX_LEN: usize = 40;

/// Upper bound on the size of the truncated path space.
pub const PATH_SPACE_LIMIT: usize = 60_000;

/// Largest search space scanned exhaustively by the randomized routines.
pub const EXHAUSTIVE_LIMIT: u64 = 1_000_000;

/// An element of `Λ`, as coordinates over [`AlgebraTable::basis`].
pub type Elem = Vec<u32>;

/// Sparse vector over the path space: `(column, nonzero value)` by column.
type SparseVec = BTreeMap<usize, u32>;

/// Row echelon form over sparse rows. Each row starts at its pivot column
/// with coefficient 1 and is zero at all earlier pivots.
#[derive(Clone, Debug)]
struct SparseEchelon {
    field: PrimeField,
    rows: Vec<SparseVec>,
    pivot_of_col: HashMap<usize, usize>,
}

impl SparseEchelon {
    fn new(field: PrimeField) -> Self {
        SparseEchelon {
            field,
            rows: Vec::new(),
            pivot_of_col: HashMap::new(),
        }
    }

    /// Clears every pivot column of `v`, scanning columns left to right.
    fn reduce(&self, v: &mut SparseVec) {
        let f = self.field;
        let mut cursor = 0;
        while let Some((&c, &x)) = v.range(cursor..).next() {
            if let Some(&r) = self.pivot_of_col.get(&c) {
                for (&k, &y) in &self.rows[r] {
                    let e = v.entry(k).or_insert(0);
                    *e = f.sub(*e, f.mul(x, y));
                    if *e == 0 {
                        v.remove(&k);
                    }
                }
            }
            cursor = c + 1;
        }
    }

    fn contains(&self, v: &SparseVec) -> bool {
        let mut w = v.clone();
        self.reduce(&mut w);
        w.is_empty()
    }

    fn insert(&mut self, mut v: SparseVec) -> bool {
        self.reduce(&mut v);
        let Some((&pc, &lead)) = v.iter().next() else {
            return false;
        };
        let inv = self.field.inv(lead);
        for x in v.values_mut() {
            *x = self.field.mul(*x, inv);
        }
        self.pivot_of_col.insert(pc, self.rows.len());
        self.rows.push(v);
        true
    }
}

/// The ideal generated by a relation set inside the paths of length `<= cap`.
#[derive(Clone, Debug)]
pub struct TruncatedIdeal {
    pub cap: usize,
    pub paths: Vec<Path>,
    pub index: HashMap<Path, usize>,
    ideal: SparseEchelon,
}

impl TruncatedIdeal {
    /// Saturates `rels` under left and right multiplication by arrows,
    /// discarding every term longer than `cap`.
    pub fn compute(
        quiver: &Quiver,
        field: PrimeField,
        rels: &[Relation],
        cap: usize,
    ) -> Result<TruncatedIdeal> {
        let mut paths = Vec::new();
        for len in 0..=cap {
            let mut layer = quiver.paths_of_length(len);
            // Within one length the lexicographically larger paths become
            // pivots first, so the smaller ones survive as basis elements.
            layer.reverse();
            paths.extend(layer);
            if paths.len() > PATH_SPACE_LIMIT {
                return Err(Error::PathSpaceTooLarge {
                    paths: paths.len(),
                    limit: PATH_SPACE_LIMIT,
                });
            }
        }
        let index: HashMap<Path, usize> =
            paths.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let mut ideal = SparseEchelon::new(field);
        let mut queue: Vec<SparseVec> = Vec::new();
        for r in rels {
            let mut v = SparseVec::new();
            for (c, p) in r.terms() {
                if let Some(&i) = index.get(p) {
                    let e = v.entry(i).or_insert(0);
                    *e = field.add(*e, *c);
                }
            }
            v.retain(|_, x| *x != 0);
            if ideal.insert(v.clone()) {
                queue.push(v);
            }
        }
        let arrows: Vec<Path> = (0..quiver.arrows().len())
            .map(|a| Path::arrow(quiver, a))
            .collect();
        while let Some(v) = queue.pop() {
            for a in &arrows {
                for left in [true, false] {
                    let mut w = SparseVec::new();
                    for (&i, &c) in &v {
                        if paths[i].len() + 1 > cap {
                            continue;
                        }
                        let prod = if left {
                            a.concat(quiver, &paths[i])
                        } else {
                            paths[i].concat(quiver, a)
                        };
                        if let Some(q) = prod {
                            let e = w.entry(index[&q]).or_insert(0);
                            *e = field.add(*e, c);
                        }
                    }
                    w.retain(|_, x| *x != 0);
                    if !w.is_empty() && ideal.insert(w.clone()) {
                        queue.push(w);
                    }
                }
            }
        }
        Ok(TruncatedIdeal {
            cap,
            paths,
            index,
            ideal,
        })
    }

    /// Whether every path of length exactly `cap` lies in the ideal.
    pub fn top_layer_vanishes(&self) -> bool {
        self.paths
            .iter()
            .enumerate()
            .filter(|(_, p)| p.len() == self.cap)
            .all(|(i, _)| self.ideal.contains(&SparseVec::from([(i, 1)])))
    }

    pub fn dim(&self) -> usize {
        self.ideal.rows.len()
    }

    /// Dense reduced echelon form of the ideal in path coordinates.
    pub fn to_echelon(&self, field: PrimeField) -> Echelon {
        let width = self.paths.len();
        let mut e = Echelon::new(field, width);
        for row in &self.ideal.rows {
            let mut v = vec![0; width];
            for (&k, &x) in row {
                v[k] = x;
            }
            e.insert(&v);
        }
        e
    }

    /// Reduced row-echelon basis of the ideal in path coordinates.
    pub fn as_subspace(&self, field: PrimeField) -> Subspace {
        Subspace::span(field, self.paths.len(), &self.to_echelon(field).rref_rows())
    }
}

/// The algebra `Λ = KQ/I` with a basis of paths and a multiplication table.
#[derive(Debug)]
pub struct AlgebraTable {
    field: PrimeField,
    quiver: Quiver,
    relations: Vec<Relation>,
    /// Every path of length `>= vanishing_length` is zero in `Λ`.
    vanishing_length: usize,
    /// Truncated path space: all paths of length `<= vanishing_length`.
    paths: Vec<Path>,
    path_index: HashMap<Path, usize>,
    /// Normal form of each truncated path, over the basis.
    path_nf: Vec<Elem>,
    /// Basis elements as indices into `paths`.
    basis: Vec<usize>,
    /// `(source, target)` of each basis path: it lies in `e_s Λ e_t`.
    pairs: Vec<(Vertex, Vertex)>,
    /// `mult[u * dim + v]` is the path index of `b_u b_v`, or `None` if zero.
    mult: Vec<Option<usize>>,
    opposite: OnceLock<Box<AlgebraTable>>,
    selfinjective: OnceLock<bool>,
}

impl Clone for AlgebraTable {
    fn clone(&self) -> Self {
        AlgebraTable {
            field: self.field,
            quiver: self.quiver.clone(),
            relations: self.relations.clone(),
            vanishing_length: self.vanishing_length,
            paths: self.paths.clone(),
            path_index: self.path_index.clone(),
            path_nf: self.path_nf.clone(),
            basis: self.basis.clone(),
            pairs: self.pairs.clone(),
            mult: self.mult.clone(),
            opposite: OnceLock::new(),
            selfinjective: OnceLock::new(),
        }
    }
}

impl AlgebraTable {
    /// Builds `KQ/I` for the ideal generated by `relations`.
    pub fn build(
        quiver: Quiver,
        field: PrimeField,
        relations: Vec<Relation>,
        max_len: usize,
    ) -> Result<AlgebraTable> {
        if max_len < 2 {
            return Err(Error::ParameterOutOfRange(format!("max_len = {max_len} < 2")));
        }
        for r in &relations {
            // Revalidate: relations may come from another quiver by mistake.
            Relation::new(&quiver, field, r.terms().to_vec())?;
        }
        for m in 1..=max_len {
            let ti = TruncatedIdeal::compute(&quiver, field, &relations, m)?;
            if ti.top_layer_vanishes() {
                return Self::from_ideal(quiver, field, relations, ti);
            }
        }
        Err(Error::NotAdmissible { max_len })
    }

    fn from_ideal(
        quiver: Quiver,
        field: PrimeField,
        relations: Vec<Relation>,
        ti: TruncatedIdeal,
    ) -> Result<AlgebraTable> {
        let ideal = ti.to_echelon(field);
        let TruncatedIdeal {
            cap, paths, index, ..
        } = ti;
        for v in 0..quiver.vertex_count() {
            if ideal.is_pivot(index[&Path::trivial(v)]) {
                return Err(Error::DegenerateAlgebra { vertex: v + 1 });
            }
        }
        let mut basis: Vec<usize> = (0..paths.len()).filter(|&i| !ideal.is_pivot(i)).collect();
        basis.sort_by(|&a, &b| {
            let (pa, pb) = (&paths[a], &paths[b]);
            (pa.source(), pa.len(), pa.arrows()).cmp(&(pb.source(), pb.len(), pb.arrows()))
        });
        let dim = basis.len();
        let mut position = vec![usize::MAX; paths.len()];
        for (k, &i) in basis.iter().enumerate() {
            position[i] = k;
        }
        let path_nf: Vec<Elem> = (0..paths.len())
            .map(|i| {
                let mut v = vec![0; dim];
                match ideal.pivot_row(i) {
                    None => v[position[i]] = 1,
                    Some(row) => {
                        for (j, &c) in row.iter().enumerate() {
                            if j != i && c != 0 {
                                debug_assert!(position[j] != usize::MAX);
                                v[position[j]] = field.neg(c);
                            }
                        }
                    }
                }
                v
            })
            .collect();
        let pairs: Vec<(Vertex, Vertex)> = basis
            .iter()
            .map(|&i| (paths[i].source(), paths[i].target(&quiver)))
            .collect();
        let mut mult = vec![None; dim * dim];
        for u in 0..dim {
            for v in 0..dim {
                if let Some(p) = paths[basis[u]].concat(&quiver, &paths[basis[v]]) {
                    if p.len() <= cap {
                        mult[u * dim + v] = Some(index[&p]);
                    }
                }
            }
        }
        Ok(AlgebraTable {
            field,
            quiver,
            relations,
            vanishing_length: cap,
            paths,
            path_index: index,
            path_nf,
            basis,
            pairs,
            mult,
            opposite: OnceLock::new(),
            selfinjective: OnceLock::new(),
        })
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }
    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }
    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }
    pub fn vertex_count(&self) -> usize {
        self.quiver.vertex_count()
    }
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
    /// Length from which every path vanishes.
    pub fn vanishing_length(&self) -> usize {
        self.vanishing_length
    }

    pub fn basis_path(&self, k: usize) -> &Path {
        &self.paths[self.basis[k]]
    }

    pub fn basis_paths(&self) -> Vec<&Path> {
        self.basis.iter().map(|&i| &self.paths[i]).collect()
    }

    /// `(i, j)` such that basis element `k` lies in `e_i Λ e_j`.
    pub fn pair(&self, k: usize) -> (Vertex, Vertex) {
        self.pairs[k]
    }

    /// Basis indices of `e_i Λ e_j`, in increasing order.
    pub fn block(&self, i: Vertex, j: Vertex) -> Vec<usize> {
        (0..self.dim()).filter(|&k| self.pairs[k] == (i, j)).collect()
    }

    /// Basis indices of `e_i Λ`.
    pub fn row_block(&self, i: Vertex) -> Vec<usize> {
        (0..self.dim()).filter(|&k| self.pairs[k].0 == i).collect()
    }

    /// `dim e_i Λ = |P_i|`.
    pub fn projective_dim(&self, i: Vertex) -> usize {
        self.row_block(i).len()
    }

    /// Normal form of an arbitrary path.
    pub fn expand(&self, p: &Path) -> Elem {
        match self.path_index.get(p) {
            Some(&i) => self.path_nf[i].clone(),
            None => vec![0; self.dim()],
        }
    }

    /// Normal form of a relation-style linear combination of paths.
    pub fn expand_combination(&self, terms: &[(u32, Path)]) -> Elem {
        let mut v = vec![0; self.dim()];
        for (c, p) in terms {
            axpy(self.field, &mut v, *c, &self.expand(p));
        }
        v
    }

    pub fn idempotent(&self, i: Vertex) -> Elem {
        self.expand(&Path::trivial(i))
    }

    pub fn one(&self) -> Elem {
        let mut v = vec![0; self.dim()];
        for i in 0..self.vertex_count() {
            axpy(self.field, &mut v, 1, &self.idempotent(i));
        }
        v
    }

    pub fn unit_vector(&self, k: usize) -> Elem {
        let mut v = vec![0; self.dim()];
        v[k] = 1;
        v
    }

    /// Product of basis elements `b_u b_v`.
    pub fn basis_product(&self, u: usize, v: usize) -> Elem {
        match self.mult[u * self.dim() + v] {
            Some(i) => self.path_nf[i].clone(),
            None => vec![0; self.dim()],
        }
    }

    fn basis_product_ref(&self, u: usize, v: usize) -> Option<&[u32]> {
        self.mult[u * self.dim() + v].map(|i| self.path_nf[i].as_slice())
    }

    pub fn mul(&self, x: &[u32], y: &[u32]) -> Elem {
        let f = self.field;
        let mut out = vec![0; self.dim()];
        for (u, &a) in x.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (v, &b) in y.iter().enumerate() {
                if b == 0 {
                    continue;
                }
                if let Some(p) = self.basis_product_ref(u, v) {
                    axpy(f, &mut out, f.mul(a, b), p);
                }
            }
        }
        out
    }

    /// `b_k · a` for a basis element and an arrow, or `None` if the
    /// arrow does not start where `b_k` ends.
    pub fn right_mul_arrow(&self, k: usize, a: ArrowId) -> Option<Elem> {
        let arrow = Path::arrow(&self.quiver, a);
        self.basis_path(k)
            .concat(&self.quiver, &arrow)
            .map(|p| self.expand(&p))
    }

    /// `a · b_k`, or `None` if not composable.
    pub fn left_mul_arrow(&self, a: ArrowId, k: usize) -> Option<Elem> {
        let arrow = Path::arrow(&self.quiver, a);
        arrow
            .concat(&self.quiver, self.basis_path(k))
            .map(|p| self.expand(&p))
    }

    /// `x · a` for an arbitrary element.
    pub fn mul_arrow(&self, x: &[u32], a: ArrowId) -> Elem {
        let mut out = vec![0; self.dim()];
        for (k, &c) in x.iter().enumerate() {
            if c != 0 {
                if let Some(p) = self.right_mul_arrow(k, a) {
                    axpy(self.field, &mut out, c, &p);
                }
            }
        }
        out
    }

    /// Basis of `rad^k Λ`. `rad^0 = Λ`.
    pub fn radical_power(&self, k: usize) -> Subspace {
        let f = self.field;
        let n = self.dim();
        let mut current = Subspace::full(f, n);
        for _ in 0..k {
            let mut gens = Vec::new();
            for x in current.basis() {
                for a in 0..self.quiver.arrows().len() {
                    let y = self.mul_arrow(x, a);
                    if !is_zero_vec(&y) {
                        gens.push(y);
                    }
                }
            }
            current = Subspace::span(f, n, &gens);
        }
        current
    }

    /// Least `k` with `rad^k Λ = 0`.
    pub fn loewy_length(&self) -> usize {
        (0..=self.vanishing_length + 1)
            .find(|&k| self.radical_power(k).is_zero())
            .expect("radical is nilpotent")
    }

    /// `soc(e_i Λ) = { x ∈ e_i Λ : x · rad Λ = 0 }`, inside `Λ`.
    pub fn socle_of_projective(&self, i: Vertex) -> Subspace {
        let f = self.field;
        let block = self.row_block(i);
        let arrows = self.quiver.arrows().len();
        // Columns: coordinates on the block; rows: the products with arrows.
        let mut m = Mat::zeros(f, arrows * self.dim(), block.len());
        for (c, &k) in block.iter().enumerate() {
            for a in 0..arrows {
                if let Some(p) = self.right_mul_arrow(k, a) {
                    for (r, &x) in p.iter().enumerate() {
                        m.set(a * self.dim() + r, c, x);
                    }
                }
            }
        }
        let vectors: Vec<Elem> = m
            .kernel_basis()
            .into_iter()
            .map(|coeffs| {
                let mut v = vec![0; self.dim()];
                for (c, &k) in block.iter().enumerate() {
                    v[k] = coeffs[c];
                }
                v
            })
            .collect();
        Subspace::span(f, self.dim(), &vectors)
    }

    /// Right socle `soc(Λ_Λ) = ⊕_i soc(e_i Λ)`.
    pub fn socle(&self) -> Subspace {
        let mut s = Subspace::zero(self.field, self.dim());
        for i in 0..self.vertex_count() {
            s = s.sum(&self.socle_of_projective(i)).unwrap();
        }
        s
    }

    /// `e_i Λ e_j` as a subspace of `Λ`.
    pub fn bigraded_piece(&self, i: Vertex, j: Vertex) -> Subspace {
        let vectors: Vec<Elem> = self.block(i, j).into_iter().map(|k| self.unit_vector(k)).collect();
        Subspace::span(self.field, self.dim(), &vectors)
    }

    /// Searches for a symmetrizing form. The order is fixed: a structured
    /// candidate built from the socle, then an exhaustive scan of the space of
    /// trace-like forms when it has at most 10^6 elements, then 64 random
    /// samples drawn from `seed`.
    pub fn find_symmetrizing_form(&self, seed: u64) -> FormVerdict {
        let f = self.field;
        let n = self.dim();
        let mut constraints = Vec::new();
        for u in 0..n {
            for v in (u + 1)..n {
                let mut d = self.basis_product(u, v);
                let other = self.basis_product(v, u);
                axpy(f, &mut d, f.neg(1), &other);
                if !is_zero_vec(&d) {
                    constraints.push(d);
                }
            }
        }
        let w: Vec<Vec<u32>> = if constraints.is_empty() {
            Mat::identity(f, n).row_vectors()
        } else {
            Mat::from_rows(f, n, &constraints).kernel_basis()
        };
        let space = Subspace::span(f, n, &w);

        let socle = self.socle();
        let structured: Vec<u32> = (0..n)
            .map(|k| {
                let (s, t) = self.pairs[k];
                u32::from(s == t && socle.contains(&self.unit_vector(k)))
            })
            .collect();
        if space.contains(&structured) {
            let form = SymmetrizingForm {
                values: structured,
            };
            if self.gram_rank(&form) == n {
                return FormVerdict::Symmetric {
                    form,
                    method: FormSearch::Structured,
                };
            }
        }

        let k = space.dim();
        let combine = |coeffs: &[u32]| -> Vec<u32> {
            let mut v = vec![0; n];
            for (c, b) in coeffs.iter().zip(space.basis()) {
                axpy(f, &mut v, *c, b);
            }
            v
        };
        let total = f.count(k);
        if total <= EXHAUSTIVE_LIMIT {
            for idx in 1..total {
                let form = SymmetrizingForm {
                    values: combine(&f.vector_at(idx, k)),
                };
                if self.gram_rank(&form) == n {
                    return FormVerdict::Symmetric {
                        form,
                        method: FormSearch::Exhaustive,
                    };
                }
            }
            if n == 0 {
                return FormVerdict::Symmetric {
                    form: SymmetrizingForm { values: vec![] },
                    method: FormSearch::Exhaustive,
                };
            }
            return FormVerdict::NotSymmetric {
                certified: true,
                seed: None,
            };
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..64 {
            let coeffs: Vec<u32> = (0..k).map(|_| rng.gen_range(0..f.p())).collect();
            let form = SymmetrizingForm {
                values: combine(&coeffs),
            };
            if self.gram_rank(&form) == n {
                return FormVerdict::Symmetric {
                    form,
                    method: FormSearch::Random { seed },
                };
            }
        }
        FormVerdict::NotSymmetric {
            certified: false,
            seed: Some(seed),
        }
    }

    /// Gram matrix `G[u][v] = λ(b_u b_v)`.
    pub fn gram(&self, form: &SymmetrizingForm) -> Mat {
        let n = self.dim();
        let mut g = Mat::zeros(self.field, n, n);
        for u in 0..n {
            for v in 0..n {
                if let Some(p) = self.basis_product_ref(u, v) {
                    g.set(u, v, dot(self.field, &form.values, p));
                }
            }
        }
        g
    }

    fn gram_rank(&self, form: &SymmetrizingForm) -> usize {
        self.gram(form).rank()
    }

    /// Exhaustive check: `λ(ab) = λ(ba)` on basis pairs and a nondegenerate
    /// Gram matrix.
    pub fn verify_form(&self, form: &SymmetrizingForm) -> bool {
        let n = self.dim();
        if form.values.len() != n {
            return false;
        }
        let g = self.gram(form);
        g == g.transpose() && g.rank() == n
    }

    /// Property (b): `soc(e_i Λ) ∩ e_i Λ e_j = 0` for all `i != j`.
    pub fn check_property_b(&self) -> PropertyB {
        for i in 0..self.vertex_count() {
            let soc = self.socle_of_projective(i);
            for j in 0..self.vertex_count() {
                if i == j {
                    continue;
                }
                let meet = soc.intersection(&self.bigraded_piece(i, j)).unwrap();
                if let Some(v) = meet.basis().first() {
                    return PropertyB {
                        holds: false,
                        witness: Some((i, j, v.clone())),
                    };
                }
            }
        }
        PropertyB {
            holds: true,
            witness: None,
        }
    }

    /// Property (c): a nonzero monomial in the socle is a cycle whose
    /// rotations are all nonzero and in the socle.
    pub fn check_property_c(&self) -> PropertyC {
        let socle = self.socle();
        let mut checked = Vec::new();
        let mut failures = Vec::new();
        for p in &self.paths {
            let v = self.expand(p);
            if is_zero_vec(&v) || !socle.contains(&v) {
                continue;
            }
            checked.push(p.clone());
            if !p.is_cyclic(&self.quiver) {
                failures.push(PropertyCFailure::NotCyclic(p.clone()));
                continue;
            }
            for r in p.rotations(&self.quiver) {
                let w = self.expand(&r);
                if is_zero_vec(&w) {
                    failures.push(PropertyCFailure::RotationVanishes(p.clone(), r));
                } else if !socle.contains(&w) {
                    failures.push(PropertyCFailure::RotationOutsideSocle(p.clone(), r));
                }
            }
        }
        PropertyC {
            holds: failures.is_empty(),
            socle_monomials: checked,
            failures,
        }
    }

    /// The opposite algebra `Λ^op = KQ^op / I^op`. It shares the basis of
    /// `Λ` (paths reversed) so element coordinates carry over unchanged.
    pub fn opposite(&self) -> &AlgebraTable {
        self.opposite.get_or_init(|| Box::new(self.build_opposite()))
    }

    fn build_opposite(&self) -> AlgebraTable {
        let q = &self.quiver;
        let quiver = q.opposite();
        let paths: Vec<Path> = self.paths.iter().map(|p| p.reversed(q)).collect();
        let path_index = paths.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let n = self.dim();
        let mut mult = vec![None; n * n];
        for u in 0..n {
            for v in 0..n {
                mult[u * n + v] = self.mult[v * n + u];
            }
        }
        AlgebraTable {
            field: self.field,
            relations: self.relations.iter().map(|r| r.reversed(q)).collect(),
            quiver,
            vanishing_length: self.vanishing_length,
            paths,
            path_index,
            path_nf: self.path_nf.clone(),
            basis: self.basis.clone(),
            pairs: self.pairs.iter().map(|&(s, t)| (t, s)).collect(),
            mult,
            opposite: OnceLock::new(),
            selfinjective: OnceLock::new(),
        }
    }

    /// Vertex `ν(i)` with `soc(e_i Λ) ⊆ e_i Λ e_ν(i)` when the socle of
    /// every indecomposable projective is simple.
    pub fn socle_permutation(&self) -> Option<Vec<Vertex>> {
        let mut nu = Vec::new();
        for i in 0..self.vertex_count() {
            let soc = self.socle_of_projective(i);
            if soc.dim() != 1 {
                return None;
            }
            let v = &soc.basis()[0];
            let k = v.iter().position(|&x| x != 0).unwrap();
            nu.push(self.pairs[k].1);
        }
        let mut seen = vec![false; nu.len()];
        for &j in &nu {
            if seen[j] {
                return None;
            }
            seen[j] = true;
        }
        Some(nu)
    }

    /// Selfinjective (equivalently, quasi-Frobenius for a basic algebra):
    /// left and right projectives have simple socles permuted by `ν`.
    pub fn is_selfinjective(&self) -> bool {
        *self.selfinjective.get_or_init(|| {
            self.socle_permutation().is_some() && self.opposite().socle_permutation().is_some()
        })
    }
}

/// A linear form `λ` on `Λ` given by its values on the basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetrizingForm {
    pub values: Vec<u32>,
}

impl SymmetrizingForm {
    pub fn eval(&self, field: PrimeField, x: &[u32]) -> u32 {
        dot(field, &self.values, x)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FormSearch {
    Structured,
    Exhaustive,
    Random { seed: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FormVerdict {
    Symmetric {
        form: SymmetrizingForm,
        method: FormSearch,
    },
    /// `certified` when the whole space of trace-like forms was scanned.
    NotSymmetric { certified: bool, seed: Option<u64> },
}

impl FormVerdict {
    pub fn form(&self) -> Option<&SymmetrizingForm> {
        match self {
            FormVerdict::Symmetric { form, .. } => Some(form),
            FormVerdict::NotSymmetric { .. } => None,
        }
    }

    pub fn is_certain(&self) -> bool {
        !matches!(
            self,
            FormVerdict::NotSymmetric {
                certified: false,
                ..
            }
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropertyB {
    pub holds: bool,
    /// `(i, j, x)` with `0 != x ∈ soc(e_i Λ) ∩ e_i Λ e_j`.
    pub witness: Option<(Vertex, Vertex, Elem)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PropertyCFailure {
    NotCyclic(Path),
    RotationVanishes(Path, Path),
    RotationOutsideSocle(Path, Path),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropertyC {
    pub holds: bool,
    pub socle_monomials: Vec<Path>,
    pub failures: Vec<PropertyCFailure>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{family_i, family_ii, family_iii, FamilyPresentation};

    fn build(fp: FamilyPresentation) -> AlgebraTable {
        fp.build(DEFAULT_MAX_LEN).unwrap()
    }

    fn f(p: u32) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    fn a2(p: u32) -> AlgebraTable {
        let q = Quiver::new(2, &[("a", 1, 2)]).unwrap();
        AlgebraTable::build(q, f(p), vec![], DEFAULT_MAX_LEN).unwrap()
    }

    fn names(a: &AlgebraTable, ks: &[usize]) -> Vec<String> {
        ks.iter().map(|&k| a.basis_path(k).display(a.quiver())).collect()
    }

    #[test]
    fn family_i_basis() {
        let a = build(family_i(3, f(2)).unwrap());
        assert_eq!(a.dim(), 3);
        assert_eq!(names(&a, &[0, 1, 2]), ["e1", "T", "T.T"]);
    }

    #[test]
    fn family_ii_basis() {
        let a = build(family_ii(1, f(3)).unwrap());
        assert_eq!(a.dim(), 6);
        assert_eq!(names(&a, &a.row_block(0)), ["e1", "alpha", "alpha.beta"]);
    }

    #[test]
    fn family_iii_basis() {
        let a = build(family_iii(2, f(3)).unwrap());
        assert_eq!(a.projective_dim(0), 4);
        assert_eq!(a.projective_dim(1), 3);
        assert_eq!(a.dim(), 7);
        // αβ and ρ² coincide in Λ
        let q = a.quiver();
        let ab = a.expand(&q.parse_path("alpha.beta").unwrap());
        let rr = a.expand(&q.parse_path("rho.rho").unwrap());
        assert_eq!(ab, rr);
        assert!(!is_zero_vec(&ab));
        assert!(is_zero_vec(&a.expand(&q.parse_path("rho.alpha").unwrap())));
        assert!(is_zero_vec(&a.expand(&q.parse_path("beta.rho").unwrap())));
    }

    #[test]
    fn radical_powers() {
        let a = build(family_i(3, f(2)).unwrap());
        assert_eq!(a.radical_power(0).dim(), 3);
        let t2 = a.expand(&a.quiver().parse_path("T.T").unwrap());
        assert_eq!(a.radical_power(2), Subspace::span(f(2), 3, &[t2]));
        let b = build(family_ii(1, f(2)).unwrap());
        assert_eq!(b.loewy_length(), 3);
    }

    #[test]
    fn socles() {
        let a = build(family_ii(2, f(3)).unwrap());
        let s = a.socle_of_projective(0);
        let abab = a.expand(&a.quiver().parse_path("alpha.beta.alpha.beta").unwrap());
        assert_eq!(s, Subspace::span(f(3), a.dim(), &[abab]));
        let b = build(family_iii(2, f(3)).unwrap());
        let ba = b.expand(&b.quiver().parse_path("beta.alpha").unwrap());
        assert_eq!(b.socle_of_projective(1), Subspace::span(f(3), b.dim(), &[ba]));
        let c = build(family_i(3, f(5)).unwrap());
        let tt = c.expand(&c.quiver().parse_path("T.T").unwrap());
        assert_eq!(c.socle_of_projective(0), Subspace::span(f(5), 3, &[tt]));
    }

    #[test]
    fn symmetric_forms() {
        let a = build(family_ii(1, f(2)).unwrap());
        let verdict = a.find_symmetrizing_form(0);
        let form = verdict.form().expect("family (ii) is symmetric");
        assert!(a.verify_form(form));
        // the hand-checked witness: 1 on αβ and βα, 0 elsewhere
        let q = a.quiver();
        let mut hand = vec![0; a.dim()];
        for p in ["alpha.beta", "beta.alpha"] {
            let v = a.expand(&q.parse_path(p).unwrap());
            let k = v.iter().position(|&x| x == 1).unwrap();
            hand[k] = 1;
        }
        assert!(a.verify_form(&SymmetrizingForm { values: hand }));

        let b = a2(3);
        assert_eq!(
            b.find_symmetrizing_form(0),
            FormVerdict::NotSymmetric {
                certified: true,
                seed: None
            }
        );

        for n in 2..6 {
            let c = build(family_i(n, f(3)).unwrap());
            let form = c.find_symmetrizing_form(0).form().cloned().unwrap();
            let mut dual_top = vec![0; n];
            dual_top[n - 1] = 1;
            assert_eq!(form.values, dual_top);
        }
    }

    #[test]
    fn property_b_and_c() {
        let a = build(family_iii(2, f(3)).unwrap());
        assert!(a.check_property_b().holds);
        assert!(a.check_property_c().holds);
        let b = a2(2);
        let pb = b.check_property_b();
        assert!(!pb.holds);
        assert_eq!(pb.witness.as_ref().map(|w| (w.0, w.1)), Some((0, 1)));
        assert!(!b.check_property_c().holds);
        let c = build(family_i(4, f(2)).unwrap());
        assert!(c.check_property_b().holds);
        let pc = c.check_property_c();
        assert!(pc.holds);
        assert_eq!(pc.socle_monomials.len(), 1);
        let d = build(family_ii(1, f(5)).unwrap());
        let pc = d.check_property_c();
        assert!(pc.holds);
        let shown: Vec<String> = pc.socle_monomials.iter().map(|p| p.display(d.quiver())).collect();
        assert!(shown.contains(&"alpha.beta".to_string()) && shown.contains(&"beta.alpha".to_string()));
    }

    #[test]
    fn algebra_axioms_on_corpus() {
        for p in [2, 3, 5] {
            let mut list = vec![a2(p)];
            for n in 2..=4 {
                list.push(build(family_i(n, f(p)).unwrap()));
                list.push(build(family_ii(n - 1, f(p)).unwrap()));
                list.push(build(family_iii(n, f(p)).unwrap()));
            }
            for a in &list {
                let n = a.dim();
                let fl = a.field();
                for u in 0..n {
                    for v in 0..n {
                        let uv = a.basis_product(u, v);
                        let (i, j) = a.pair(u);
                        let (k, l) = a.pair(v);
                        if j != k {
                            assert!(is_zero_vec(&uv));
                        } else {
                            for (w, &c) in uv.iter().enumerate() {
                                if c != 0 {
                                    assert_eq!(a.pair(w), (i, l));
                                }
                            }
                        }
                        for w in 0..n {
                            let left = a.mul(&uv, &a.unit_vector(w));
                            let right = a.mul(&a.unit_vector(u), &a.basis_product(v, w));
                            assert_eq!(left, right, "associativity");
                        }
                    }
                }
                assert_eq!(a.one(), {
                    let mut s = vec![0; n];
                    for i in 0..a.vertex_count() {
                        axpy(fl, &mut s, 1, &a.idempotent(i));
                    }
                    s
                });
                for x in 0..n {
                    assert_eq!(a.mul(&a.one(), &a.unit_vector(x)), a.unit_vector(x));
                    let (i, j) = a.pair(x);
                    let ex = a.mul(&a.idempotent(i), &a.mul(&a.unit_vector(x), &a.idempotent(j)));
                    assert_eq!(ex, a.unit_vector(x));
                }
                for i in 0..a.vertex_count() {
                    for j in 0..a.vertex_count() {
                        let eij = a.mul(&a.idempotent(i), &a.idempotent(j));
                        let expect = if i == j { a.idempotent(i) } else { vec![0; n] };
                        assert_eq!(eij, expect);
                    }
                }
                let total: usize = (0..a.vertex_count()).map(|i| a.projective_dim(i)).sum();
                assert_eq!(total, n);
                if let Some(form) = a.find_symmetrizing_form(1).form() {
                    assert!(a.verify_form(form));
                    assert!(a.check_property_b().holds);
                    for i in 0..a.vertex_count() {
                        assert_eq!(a.socle_of_projective(i).dim(), 1);
                    }
                }
            }
        }
    }

    #[test]
    fn stable_above_stabilization_point() {
        let fp = family_iii(3, f(5)).unwrap();
        let a = fp.build(12).unwrap();
        let b = fp.build(15).unwrap();
        assert_eq!(a.dim(), b.dim());
        assert_eq!(a.basis_paths(), b.basis_paths());
        for u in 0..a.dim() {
            for v in 0..a.dim() {
                assert_eq!(a.basis_product(u, v), b.basis_product(u, v));
            }
        }
    }

    #[test]
    fn not_admissible_and_path_filtration() {
        // xyxy... never vanishes
        let q = Quiver::new(1, &[("x", 1, 1), ("y", 1, 1)]).unwrap();
        let fl = f(2);
        let rels = ["x.x", "y.y"]
            .map(|w| Relation::monomial(&q, fl, q.parse_path(w).unwrap()).unwrap())
            .to_vec();
        assert_eq!(
            AlgebraTable::build(q, fl, rels, 10).unwrap_err(),
            Error::NotAdmissible { max_len: 10 }
        );
        // rad^k is spanned by basis paths of length >= k
        let a = build(family_iii(3, f(3)).unwrap());
        for k in 0..a.loewy_length() {
            let long: Vec<Elem> = (0..a.dim())
                .filter(|&b| a.basis_path(b).len() >= k)
                .map(|b| a.unit_vector(b))
                .collect();
            assert_eq!(a.radical_power(k), Subspace::span(a.field(), a.dim(), &long));
        }
    }

    #[test]
    fn opposite_is_an_anti_isomorphic_table() {
        let a = build(family_iii(2, f(3)).unwrap());
        let op = a.opposite();
        assert_eq!(op.dim(), a.dim());
        for u in 0..a.dim() {
            for v in 0..a.dim() {
                assert_eq!(op.basis_product(u, v), a.basis_product(v, u));
            }
        }
        assert!(a.is_selfinjective());
        assert!(!a2(2).is_selfinjective());
    }
}
