//! Dense linear algebra over a prime field `F_p`.
//!
//! Everything in the crate reduces to the routines here: row reduction,
//! kernels, solving, and a small set of subspace operations. Scalars are
//! stored as their canonical representatives `0..p`, so two equal matrices
//! are always bytewise equal.

use std::fmt;

use crate::error::{Error, Result};

/// A prime field `F_p` with `p < 2^16`, so that products fit in a `u32`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    pub fn new(p: u32) -> Result<Self> {
        if !(2..65536).contains(&p) || !is_prime(p) {
            return Err(Error::InvalidField(p));
        }
        Ok(PrimeField { p })
    }

    #[inline]
    pub fn p(self) -> u32 {
        self.p
    }

    /// Number of field elements.
    #[inline]
    pub fn order(self) -> u64 {
        self.p as u64
    }

    /// Reduces an arbitrary integer to its canonical representative.
    pub fn from_i64(self, x: i64) -> u32 {
        x.rem_euclid(self.p as i64) as u32
    }

    #[inline]
    pub fn add(self, a: u32, b: u32) -> u32 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(self, a: u32, b: u32) -> u32 {
        a * b % self.p
    }

    pub fn pow(self, mut a: u32, mut e: u64) -> u32 {
        let mut r = 1;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        r
    }

    /// Multiplicative inverse; panics on zero.
    pub fn inv(self, a: u32) -> u32 {
        assert!(a != 0, "inverse of zero in F_{}", self.p);
        self.pow(a, (self.p - 2) as u64)
    }

    /// `p^k`, saturating at `u64::MAX`.
    pub fn count(self, k: usize) -> u64 {
        let mut n: u64 = 1;
        for _ in 0..k {
            n = n.saturating_mul(self.p as u64);
        }
        n
    }

    /// The `idx`-th vector of `F_p^k` in little-endian base-`p` order.
    pub fn vector_at(self, mut idx: u64, k: usize) -> Vec<u32> {
        let mut v = vec![0; k];
        for x in v.iter_mut() {
            *x = (idx % self.p as u64) as u32;
            idx /= self.p as u64;
        }
        v
    }
}

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Adds `c * src` to `dst` in place.
pub fn axpy(f: PrimeField, dst: &mut [u32], c: u32, src: &[u32]) {
    if c == 0 {
        return;
    }
    for (d, &s) in dst.iter_mut().zip(src) {
        if s != 0 {
            *d = f.add(*d, f.mul(c, s));
        }
    }
}

pub fn scale(f: PrimeField, v: &mut [u32], c: u32) {
    for x in v.iter_mut() {
        *x = f.mul(*x, c);
    }
}

pub fn dot(f: PrimeField, a: &[u32], b: &[u32]) -> u32 {
    a.iter()
        .zip(b)
        .fold(0, |acc, (&x, &y)| f.add(acc, f.mul(x, y)))
}

pub fn is_zero_vec(v: &[u32]) -> bool {
    v.iter().all(|&x| x == 0)
}

/// Dense row-major matrix over `F_p`. Zero-row and zero-column matrices are
/// allowed and behave as the identity for block sums.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mat {
    field: PrimeField,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Mat[{}x{} over F_{}]", self.rows, self.cols, self.field.p)?;
        for r in 0..self.rows {
            write!(f, "\n  {:?}", self.row(r))?;
        }
        Ok(())
    }
}

/// Result of [`Mat::rref`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub matrix: Mat,
    pub pivots: Vec<usize>,
    pub rank: usize,
}

impl Mat {
    pub fn zeros(field: PrimeField, rows: usize, cols: usize) -> Self {
        Mat {
            field,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: PrimeField, n: usize) -> Self {
        let mut m = Mat::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    /// Builds a matrix from entries already reduced mod `p`.
    pub fn from_vec(field: PrimeField, rows: usize, cols: usize, data: Vec<u32>) -> Self {
        assert_eq!(data.len(), rows * cols, "entry count must be rows*cols");
        debug_assert!(data.iter().all(|&x| x < field.p));
        Mat {
            field,
            rows,
            cols,
            data,
        }
    }

    /// Builds a matrix from integer rows, reducing every entry mod `p`.
    pub fn from_rows_i64(field: PrimeField, rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged rows");
            data.extend(r.iter().map(|&x| field.from_i64(x)));
        }
        Mat::from_vec(field, rows.len(), cols, data)
    }

    pub fn from_rows(field: PrimeField, cols: usize, rows: &[Vec<u32>]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged rows");
            data.extend_from_slice(r);
        }
        Mat::from_vec(field, rows.len(), cols, data)
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(field: PrimeField, rows: usize, columns: &[Vec<u32>]) -> Self {
        let mut m = Mat::zeros(field, rows, columns.len());
        for (c, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length mismatch");
            for (r, &x) in col.iter().enumerate() {
                m.data[r * m.cols + c] = x;
            }
        }
        m
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }
    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }
    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }
    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }
    #[inline]
    pub fn set(&mut self, r: usize, c: usize, x: u32) {
        self.data[r * self.cols + c] = x;
    }
    #[inline]
    pub fn row(&self, r: usize) -> &[u32] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }
    #[inline]
    pub fn row_mut(&mut self, r: usize) -> &mut [u32] {
        &mut self.data[r * self.cols..(r + 1) * self.cols]
    }
    pub fn data(&self) -> &[u32] {
        &self.data
    }

    pub fn column(&self, c: usize) -> Vec<u32> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn row_vectors(&self) -> Vec<Vec<u32>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vec(&self.data)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Mat {
        let mut t = Mat::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.data[r * self.cols + c];
            }
        }
        t
    }

    pub fn mul(&self, other: &Mat) -> Mat {
        assert_eq!(
            self.cols, other.rows,
            "shape mismatch in product: {}x{} * {}x{}",
            self.rows, self.cols, other.rows, other.cols
        );
        let f = self.field;
        let mut out = Mat::zeros(f, self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.data[r * self.cols + k];
                if a == 0 {
                    continue;
                }
                let src = &other.data[k * other.cols..(k + 1) * other.cols];
                let dst = &mut out.data[r * other.cols..(r + 1) * other.cols];
                axpy(f, dst, a, src);
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(self.cols, v.len(), "shape mismatch in matrix-vector product");
        (0..self.rows)
            .map(|r| dot(self.field, self.row(r), v))
            .collect()
    }

    pub fn add(&self, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let f = self.field;
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| f.add(a, b))
            .collect();
        Mat::from_vec(f, self.rows, self.cols, data)
    }

    pub fn sub(&self, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let f = self.field;
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| f.sub(a, b))
            .collect();
        Mat::from_vec(f, self.rows, self.cols, data)
    }

    pub fn scaled(&self, c: u32) -> Mat {
        let mut m = self.clone();
        scale(self.field, &mut m.data, c);
        m
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, c: u32, other: &Mat) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        axpy(self.field, &mut self.data, c, &other.data);
    }

    pub fn pow(&self, e: usize) -> Mat {
        assert!(self.is_square());
        let mut result = Mat::identity(self.field, self.rows);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        result
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.cols, "vstack column mismatch");
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Mat::from_vec(self.field, self.rows + other.rows, self.cols, data)
    }

    /// Places `other` to the right of `self`.
    pub fn hstack(&self, other: &Mat) -> Mat {
        assert_eq!(self.rows, other.rows, "hstack row mismatch");
        let cols = self.cols + other.cols;
        let mut data = Vec::with_capacity(self.rows * cols);
        for r in 0..self.rows {
            data.extend_from_slice(self.row(r));
            data.extend_from_slice(other.row(r));
        }
        Mat::from_vec(self.field, self.rows, cols, data)
    }

    /// Block-diagonal sum.
    pub fn block_diag(&self, other: &Mat) -> Mat {
        let mut m = Mat::zeros(self.field, self.rows + other.rows, self.cols + other.cols);
        m.set_block(0, 0, self);
        m.set_block(self.rows, self.cols, other);
        m
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, block: &Mat) {
        for r in 0..block.rows {
            for c in 0..block.cols {
                self.set(r0 + r, c0 + c, block.get(r, c));
            }
        }
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Mat {
        let mut m = Mat::zeros(self.field, rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                m.set(r, c, self.get(r0 + r, c0 + c));
            }
        }
        m
    }

    pub fn select_columns(&self, cols: &[usize]) -> Mat {
        let mut m = Mat::zeros(self.field, self.rows, cols.len());
        for r in 0..self.rows {
            for (j, &c) in cols.iter().enumerate() {
                m.set(r, j, self.get(r, c));
            }
        }
        m
    }

    /// Reduced row-echelon form, pivot columns (increasing) and rank.
    pub fn rref(&self) -> Rref {
        let f = self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut pr = 0;
        for c in 0..m.cols {
            if pr == m.rows {
                break;
            }
            let Some(r) = (pr..m.rows).find(|&r| m.get(r, c) != 0) else {
                continue;
            };
            if r != pr {
                for k in 0..m.cols {
                    m.data.swap(r * m.cols + k, pr * m.cols + k);
                }
            }
            let inv = f.inv(m.get(pr, c));
            scale(f, m.row_mut(pr), inv);
            let pivot_row = m.row(pr).to_vec();
            for r in 0..m.rows {
                if r != pr {
                    let x = m.get(r, c);
                    if x != 0 {
                        axpy(f, m.row_mut(r), f.neg(x), &pivot_row);
                    }
                }
            }
            pivots.push(c);
            pr += 1;
        }
        let rank = pivots.len();
        Rref {
            matrix: m,
            pivots,
            rank,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Basis of the right null space `{v : self * v = 0}`.
    pub fn kernel_basis(&self) -> Vec<Vec<u32>> {
        let f = self.field;
        let Rref { matrix, pivots, .. } = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![0; self.cols];
            v[free] = 1;
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(matrix.get(r, free));
            }
            basis.push(v);
        }
        basis
    }

    /// Some `x` with `self * x = b`, or `None` when the system is inconsistent.
    pub fn solve(&self, b: &[u32]) -> Result<Option<Vec<u32>>> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                found: b.len(),
            });
        }
        let aug = self.hstack(&Mat::from_columns(self.field, self.rows, &[b.to_vec()]));
        let Rref { matrix, pivots, .. } = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![0; self.cols];
        for (r, &pc) in pivots.iter().enumerate() {
            x[pc] = matrix.get(r, self.cols);
        }
        Ok(Some(x))
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    pub fn inverse(&self) -> Option<Mat> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let aug = self.hstack(&Mat::identity(self.field, n));
        let Rref { matrix, pivots, .. } = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        Some(matrix.block(0, n, n, n))
    }
}

/// Incrementally maintained echelon basis. Rows are kept fully reduced
/// against each other, so membership and reduction are single passes.
#[derive(Clone, Debug)]
pub struct Echelon {
    field: PrimeField,
    width: usize,
    rows: Vec<Vec<u32>>,
    pivots: Vec<usize>,
    pivot_of_col: Vec<Option<usize>>,
}

impl Echelon {
    pub fn new(field: PrimeField, width: usize) -> Self {
        Echelon {
            field,
            width,
            rows: Vec::new(),
            pivots: Vec::new(),
            pivot_of_col: vec![None; width],
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn width(&self) -> usize {
        self.width
    }

    /// Reduces `v` against the current rows, in place.
    pub fn reduce(&self, v: &mut [u32]) {
        for (row, &pc) in self.rows.iter().zip(&self.pivots) {
            let x = v[pc];
            if x != 0 {
                axpy(self.field, v, self.field.neg(x), row);
            }
        }
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        is_zero_vec(&w)
    }

    /// Inserts `v`; returns `true` when it enlarged the span.
    pub fn insert(&mut self, v: &[u32]) -> bool {
        assert_eq!(v.len(), self.width);
        let f = self.field;
        let mut w = v.to_vec();
        self.reduce(&mut w);
        let Some(pc) = w.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = f.inv(w[pc]);
        scale(f, &mut w, inv);
        for row in self.rows.iter_mut() {
            let x = row[pc];
            if x != 0 {
                axpy(f, row, f.neg(x), &w);
            }
        }
        self.pivot_of_col[pc] = Some(self.rows.len());
        self.rows.push(w);
        self.pivots.push(pc);
        true
    }

    pub fn pivot_row(&self, col: usize) -> Option<&[u32]> {
        self.pivot_of_col[col].map(|i| self.rows[i].as_slice())
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.pivot_of_col[col].is_some()
    }

    /// Rows sorted by pivot column: the reduced row-echelon form.
    pub fn rref_rows(&self) -> Vec<Vec<u32>> {
        let mut idx: Vec<usize> = (0..self.rows.len()).collect();
        idx.sort_by_key(|&i| self.pivots[i]);
        idx.into_iter().map(|i| self.rows[i].clone()).collect()
    }
}

/// A subspace of `F_p^n`, stored as a reduced row-echelon basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    field: PrimeField,
    ambient: usize,
    basis: Vec<Vec<u32>>,
}

/// A complement of `U` in `V` together with the projection `V -> V/U`
/// expressed in complement coordinates.
#[derive(Clone, Debug)]
pub struct Quotient {
    /// Vectors of the ambient space whose classes form a basis of `V/U`.
    pub section: Vec<Vec<u32>>,
    /// `dim(V/U) x ambient` matrix sending a vector of `V` to the
    /// coordinates of its class. Only meaningful on `V`.
    pub projection: Mat,
}

impl Subspace {
    pub fn zero(field: PrimeField, ambient: usize) -> Self {
        Subspace {
            field,
            ambient,
            basis: Vec::new(),
        }
    }

    pub fn full(field: PrimeField, ambient: usize) -> Self {
        Subspace::span(field, ambient, &Mat::identity(field, ambient).row_vectors())
    }

    pub fn span(field: PrimeField, ambient: usize, vectors: &[Vec<u32>]) -> Self {
        let mut e = Echelon::new(field, ambient);
        for v in vectors {
            assert_eq!(v.len(), ambient, "vector outside ambient space");
            e.insert(v);
        }
        Subspace {
            field,
            ambient,
            basis: e.rref_rows(),
        }
    }

    /// Column space of `m`.
    pub fn column_space(m: &Mat) -> Self {
        let t = m.transpose();
        Subspace::span(m.field(), m.rows(), &t.row_vectors())
    }

    /// Null space of `m`.
    pub fn kernel_of(m: &Mat) -> Self {
        Subspace::span(m.field(), m.cols(), &m.kernel_basis())
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }
    pub fn ambient(&self) -> usize {
        self.ambient
    }
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }
    pub fn basis(&self) -> &[Vec<u32>] {
        &self.basis
    }

    /// Basis vectors as the columns of an `ambient x dim` matrix.
    pub fn basis_matrix(&self) -> Mat {
        Mat::from_columns(self.field, self.ambient, &self.basis)
    }

    fn check_ambient(&self, other: &Subspace) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                found: other.ambient,
            });
        }
        Ok(())
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        let mut e = Echelon::new(self.field, self.ambient);
        for b in &self.basis {
            e.insert(b);
        }
        e.contains(v)
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let mut all = self.basis.clone();
        all.extend(other.basis.iter().cloned());
        Ok(Subspace::span(self.field, self.ambient, &all))
    }

    /// Intersection by the Zassenhaus algorithm: reduce the block rows
    /// `[u | u]` and `[w | 0]`; rows whose left half vanishes carry a basis
    /// of `U ∩ W` in their right half.
    pub fn intersection(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let n = self.ambient;
        let f = self.field;
        let mut rows = Vec::new();
        for u in &self.basis {
            let mut r = u.clone();
            r.extend_from_slice(u);
            rows.push(r);
        }
        for w in &other.basis {
            let mut r = w.clone();
            r.extend(std::iter::repeat(0).take(n));
            rows.push(r);
        }
        if rows.is_empty() {
            return Ok(Subspace::zero(f, n));
        }
        let reduced = Mat::from_rows(f, 2 * n, &rows).rref();
        let mut out = Vec::new();
        for r in 0..reduced.rank {
            let row = reduced.matrix.row(r);
            if is_zero_vec(&row[..n]) {
                out.push(row[n..].to_vec());
            }
        }
        Ok(Subspace::span(f, n, &out))
    }

    /// Quotient of `self` by a subspace `sub ⊆ self`.
    pub fn quotient(&self, sub: &Subspace) -> Result<Quotient> {
        self.check_ambient(sub)?;
        let f = self.field;
        let mut e = Echelon::new(f, self.ambient);
        for v in &sub.basis {
            e.insert(v);
        }
        let mut section = Vec::new();
        for v in &self.basis {
            if e.insert(v) {
                section.push(v.clone());
            }
        }
        // Coordinates with respect to [sub basis | section]; keep the tail.
        let mut cols = sub.basis.clone();
        cols.extend(section.iter().cloned());
        let k = sub.dim();
        let projection = if cols.is_empty() {
            Mat::zeros(f, 0, self.ambient)
        } else {
            let b = Mat::from_columns(f, self.ambient, &cols);
            let left_inverse = left_inverse(&b);
            left_inverse.block(k, 0, section.len(), self.ambient)
        };
        Ok(Quotient {
            section,
            projection,
        })
    }

    /// Coordinates of `v` with respect to this subspace's basis.
    pub fn coordinates(&self, v: &[u32]) -> Option<Vec<u32>> {
        if self.basis.is_empty() {
            return is_zero_vec(v).then(Vec::new);
        }
        self.basis_matrix().solve(v).ok().flatten()
    }
}

/// A left inverse of a matrix with linearly independent columns.
pub fn left_inverse(b: &Mat) -> Mat {
    let f = b.field();
    let n = b.rows();
    let k = b.cols();
    // Extend the columns of b to a basis of F^n, invert, keep the top k rows.
    let mut e = Echelon::new(f, n);
    let mut cols: Vec<Vec<u32>> = Vec::new();
    for c in 0..k {
        let v = b.column(c);
        assert!(e.insert(&v), "left_inverse needs independent columns");
        cols.push(v);
    }
    for i in 0..n {
        let mut v = vec![0; n];
        v[i] = 1;
        if e.insert(&v) {
            cols.push(v);
        }
    }
    let full = Mat::from_columns(f, n, &cols);
    let inv = full.inverse().expect("extended basis is invertible");
    inv.block(0, 0, k, n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn f(p: u32) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn rejects_composite_modulus() {
        assert!(PrimeField::new(4).is_err());
        assert!(PrimeField::new(1).is_err());
        assert!(PrimeField::new(101).is_ok());
    }

    #[test]
    fn rref_identity_and_zero() {
        let id = Mat::identity(f(5), 2);
        let r = id.rref();
        assert_eq!(r.matrix, id);
        assert_eq!(r.pivots, vec![0, 1]);
        assert_eq!(r.rank, 2);

        let z = Mat::zeros(f(5), 3, 2);
        let r = z.rref();
        assert_eq!(r.matrix, z);
        assert!(r.pivots.is_empty());
        assert_eq!(r.rank, 0);
    }

    #[test]
    fn rref_rank_one() {
        let m = Mat::from_rows_i64(f(5), &[vec![1, 2], vec![2, 4]]);
        let r = m.rref();
        assert_eq!(r.matrix, Mat::from_rows_i64(f(5), &[vec![1, 2], vec![0, 0]]));
        assert_eq!(r.rank, 1);
    }

    #[test]
    fn kernel_examples() {
        assert!(Mat::identity(f(3), 3).kernel_basis().is_empty());
        let z = Mat::zeros(f(3), 3, 3);
        let k = z.kernel_basis();
        assert_eq!(k, Mat::identity(f(3), 3).row_vectors());
        let m = Mat::from_rows_i64(f(2), &[vec![1, 1]]);
        assert_eq!(m.kernel_basis(), vec![vec![1, 1]]);
    }

    #[test]
    fn solve_examples() {
        let id = Mat::identity(f(7), 3);
        assert_eq!(id.solve(&[1, 2, 3]).unwrap(), Some(vec![1, 2, 3]));
        let z = Mat::zeros(f(7), 2, 2);
        assert_eq!(z.solve(&[1, 0]).unwrap(), None);
        let m = Mat::from_rows_i64(f(5), &[vec![2]]);
        assert_eq!(m.solve(&[3]).unwrap(), Some(vec![4]));
        assert!(m.solve(&[1, 2]).is_err());
    }

    #[test]
    fn subspace_examples() {
        let fl = f(2);
        let v = Subspace::span(fl, 3, &[vec![1, 1, 0], vec![0, 1, 1]]);
        assert_eq!(v.intersection(&v).unwrap(), v);
        let e1 = Subspace::span(fl, 2, &[vec![1, 0]]);
        let e2 = Subspace::span(fl, 2, &[vec![0, 1]]);
        assert!(e1.intersection(&e2).unwrap().is_zero());

        let f3 = f(3);
        let full = Subspace::full(f3, 3);
        let u = Subspace::span(f3, 3, &[vec![1, 1, 0]]);
        let q = full.quotient(&u).unwrap();
        assert_eq!(q.section.len(), 2);
        assert!(q.projection.mul_vec(&[1, 1, 0]).iter().all(|&x| x == 0));
        assert_eq!(q.projection.rank(), 2);
        let e3 = Subspace::span(f3, 4, &[vec![1, 0, 0, 0]]);
        assert!(u.sum(&e3).is_err());
    }

    #[test]
    fn inverse_roundtrip() {
        let m = Mat::from_rows_i64(f(5), &[vec![1, 2], vec![3, 4]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Mat::identity(f(5), 2));
        let s = Mat::from_rows_i64(f(5), &[vec![1, 2], vec![2, 4]]);
        assert!(s.inverse().is_none());
    }

    fn arb_mat() -> impl Strategy<Value = Mat> {
        (prop::sample::select(vec![2u32, 3, 5, 7]), 0usize..6, 0usize..6).prop_flat_map(
            |(p, r, c)| {
                prop::collection::vec(0..p, r * c)
                    .prop_map(move |d| Mat::from_vec(PrimeField::new(p).unwrap(), r, c, d))
            },
        )
    }

    proptest! {
        #[test]
        fn rank_nullity(m in arb_mat()) {
            let k = m.kernel_basis();
            prop_assert_eq!(m.rank() + k.len(), m.cols());
            for v in &k {
                prop_assert!(is_zero_vec(&m.mul_vec(v)));
            }
        }

        #[test]
        fn rref_idempotent(m in arb_mat()) {
            let once = m.rref().matrix;
            prop_assert_eq!(once.rref().matrix, once.clone());
        }

        #[test]
        fn solve_is_exact(m in arb_mat(), seed in 0u64..1000) {
            let fl = m.field();
            let x: Vec<u32> = (0..m.cols()).map(|i| ((seed + 7 * i as u64) % fl.p() as u64) as u32).collect();
            let b = m.mul_vec(&x);
            let sol = m.solve(&b).unwrap().expect("consistent by construction");
            prop_assert_eq!(m.mul_vec(&sol), b);
        }

        #[test]
        fn dimension_formula(a in arb_mat(), b in arb_mat()) {
            // Use the row spaces of two matrices padded to a common width.
            let fl = a.field();
            let n = 6;
            let pad = |m: &Mat| -> Vec<Vec<u32>> {
                m.row_vectors().into_iter().map(|mut r| {
                    for x in r.iter_mut() { *x %= fl.p(); }
                    r.resize(n, 0);
                    r
                }).collect()
            };
            let u = Subspace::span(fl, n, &pad(&a));
            let w = Subspace::span(fl, n, &pad(&b));
            let s = u.sum(&w).unwrap();
            let i = u.intersection(&w).unwrap();
            prop_assert_eq!(s.dim() + i.dim(), u.dim() + w.dim());
            prop_assert!(u.contains_subspace(&i) && w.contains_subspace(&i));
        }
    }
}
