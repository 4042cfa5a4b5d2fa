//! Exact linear algebra over the rationals.
//!
//! The kernel of the crate is [`RowReducer`], an incremental sparse Gaussian
//! eliminator. Dense [`Matrix`] values and canonical [`Subspace`] values are
//! built on top of it, so every rank, kernel and membership question is
//! answered by the same exact elimination routine.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;
use serde::Serialize;

use crate::scalar::{format_scalar, one, zero, Scalar};

/// Dense row-major matrix of scalars.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    /// The `rows x cols` zero matrix.
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![zero(); rows * cols] }
    }

    /// The `n x n` identity matrix.
    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, one());
        }
        m
    }

    /// Builds a matrix from its rows.
    ///
    /// # Panics
    ///
    /// Panics if the rows have different lengths.
    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend(row);
        }
        Matrix { rows: r, cols: c, data }
    }

    /// Builds a matrix whose columns are the given vectors, each of length `rows`.
    pub fn from_columns(rows: usize, columns: &[Vec<Scalar>]) -> Self {
        let mut m = Matrix::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "column of wrong length");
            for (i, x) in col.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        m
    }

    /// Number of rows.
    pub fn rows(&self) -> usize {
        self.rows
    }

    /// Number of columns.
    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Entry at `(i, j)`.
    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    /// Overwrites the entry at `(i, j)`.
    pub fn set(&mut self, i: usize, j: usize, value: Scalar) {
        self.data[i * self.cols + j] = value;
    }

    /// Adds `value` to the entry at `(i, j)`.
    pub fn add_to(&mut self, i: usize, j: usize, value: &Scalar) {
        self.data[i * self.cols + j] += value;
    }

    /// Row `i` as a slice.
    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    /// Column `j` as an owned vector.
    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    /// All rows as owned vectors.
    pub fn to_rows(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    /// Flattened row-major entries.
    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    /// Builds an `rows x cols` matrix from row-major entries.
    pub fn from_entries(rows: usize, cols: usize, data: Vec<Scalar>) -> Self {
        assert_eq!(data.len(), rows * cols, "entry count does not match shape");
        Matrix { rows, cols, data }
    }

    /// Matrix product `self * other`.
    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "shape mismatch in product");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        out
    }

    /// Matrix-vector product.
    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len(), "shape mismatch in matrix-vector product");
        (0..self.rows)
            .map(|i| {
                let mut acc = zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += a * b;
                    }
                }
                acc
            })
            .collect()
    }

    /// Transpose.
    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    /// Entrywise sum.
    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch in sum");
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    /// Entrywise difference.
    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch in difference");
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    /// Multiplies every entry by `c`.
    pub fn scale(&self, c: &Scalar) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| a * c).collect() }
    }

    /// Commutator `self * other - other * self`.
    pub fn commutator(&self, other: &Matrix) -> Matrix {
        self.mul(other).sub(&other.mul(self))
    }

    /// Trace of a square matrix.
    pub fn trace(&self) -> Scalar {
        assert_eq!(self.rows, self.cols, "trace of a non-square matrix");
        (0..self.rows).fold(zero(), |acc, i| acc + self.get(i, i))
    }

    /// True when every entry is zero.
    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    /// True when the matrix is square and equals its transpose.
    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols && *self == self.transpose()
    }

    /// Rank.
    pub fn rank(&self) -> usize {
        let mut r = RowReducer::new(self.cols);
        for i in 0..self.rows {
            r.push_dense(self.row(i));
        }
        r.rank()
    }

    /// Reduced row echelon form and its pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut r = RowReducer::new(self.cols);
        for i in 0..self.rows {
            r.push_dense(self.row(i));
        }
        let rows = r.reduced_rows();
        let pivots = r.pivots();
        let m = if rows.is_empty() { Matrix::zeros(0, self.cols) } else { Matrix::from_rows(rows) };
        (m, pivots)
    }

    /// Basis of `{x : self * x = 0}` as vectors of length `cols`.
    pub fn kernel(&self) -> Vec<Vec<Scalar>> {
        let mut r = RowReducer::new(self.cols);
        for i in 0..self.rows {
            r.push_dense(self.row(i));
        }
        r.kernel()
    }

    /// One solution of `self * x = b`, if any exists.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(b.len(), self.rows, "right-hand side of wrong length");
        let n = self.cols;
        let mut r = RowReducer::new(n + 1);
        for (i, bi) in b.iter().enumerate() {
            let mut row = self.row(i).to_vec();
            row.push(bi.clone());
            r.push_dense(&row);
        }
        let rows = r.reduced_rows();
        let pivots = r.pivots();
        if pivots.contains(&n) {
            return None;
        }
        let mut x = vec![zero(); n];
        for (row, &p) in rows.iter().zip(&pivots) {
            x[p] = row[n].clone();
        }
        Some(x)
    }

    /// Determinant of a square matrix.
    pub fn determinant(&self) -> Scalar {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        let mut a = self.data.clone();
        let mut det = one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !a[r * n + col].is_zero()) else {
                return zero();
            };
            if p != col {
                for j in 0..n {
                    a.swap(p * n + j, col * n + j);
                }
                det = -det;
            }
            let pivot = a[col * n + col].clone();
            det *= &pivot;
            for r in col + 1..n {
                let f = &a[r * n + col] / &pivot;
                if f.is_zero() {
                    continue;
                }
                for j in col..n {
                    let sub = &f * &a[col * n + j];
                    a[r * n + j] -= sub;
                }
            }
        }
        det
    }

    /// Inverse of a square matrix, if it is invertible.
    pub fn inverse(&self) -> Option<Matrix> {
        assert_eq!(self.rows, self.cols, "inverse of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return Some(Matrix::zeros(0, 0));
        }
        let mut r = RowReducer::new(2 * n);
        for i in 0..n {
            let mut row = self.row(i).to_vec();
            row.extend((0..n).map(|j| if i == j { one() } else { zero() }));
            r.push_dense(&row);
        }
        let pivots = r.pivots();
        if pivots.len() < n || pivots[n - 1] >= n {
            return None;
        }
        let rows = r.reduced_rows();
        Some(Matrix::from_rows(rows.into_iter().map(|row| row[n..].to_vec()).collect()))
    }

    /// Text rendering with canonical rational strings.
    pub fn to_strings(&self) -> Vec<Vec<String>> {
        (0..self.rows).map(|i| self.row(i).iter().map(format_scalar).collect()).collect()
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let cells: Vec<String> = self.row(i).iter().map(format_scalar).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

/// Sparse vector keyed by coordinate index.
pub type SparseVec = BTreeMap<usize, Scalar>;

/// Converts a dense vector into its sparse form.
pub fn to_sparse(v: &[Scalar]) -> SparseVec {
    v.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, x)| (i, x.clone())).collect()
}

/// Incremental sparse Gaussian elimination.
///
/// Rows are pushed one at a time and reduced against the pivot rows seen so
/// far. The stored rows are in echelon form with unit pivots. Back
/// substitution to reduced form happens on demand.
#[derive(Clone, Debug)]
pub struct RowReducer {
    cols: usize,
    pivot_rows: BTreeMap<usize, SparseVec>,
}

impl RowReducer {
    /// An empty reducer for rows of length `cols`.
    pub fn new(cols: usize) -> Self {
        RowReducer { cols, pivot_rows: BTreeMap::new() }
    }

    /// Row length.
    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Number of independent rows pushed so far.
    pub fn rank(&self) -> usize {
        self.pivot_rows.len()
    }

    /// Pivot columns in increasing order.
    pub fn pivots(&self) -> Vec<usize> {
        self.pivot_rows.keys().copied().collect()
    }

    /// Reduces `row` against the stored pivots without storing it.
    pub fn reduce(&self, mut row: SparseVec) -> SparseVec {
        let mut cursor = 0;
        loop {
            let next = row.range(cursor..).map(|(&c, _)| c).find(|c| self.pivot_rows.contains_key(c));
            let Some(c) = next else { break };
            let f = row.remove(&c).expect("entry present");
            for (&j, x) in &self.pivot_rows[&c] {
                if j == c {
                    continue;
                }
                let e = row.entry(j).or_insert_with(zero);
                *e -= &f * x;
                if e.is_zero() {
                    row.remove(&j);
                }
            }
            cursor = c + 1;
        }
        row
    }

    /// Pushes a sparse row; returns true when it increased the rank.
    pub fn push(&mut self, row: SparseVec) -> bool {
        debug_assert!(row.keys().all(|&c| c < self.cols), "row index out of range");
        let row = self.reduce(row);
        let Some((&lead, lead_val)) = row.iter().next() else {
            return false;
        };
        let inv = one() / lead_val;
        let normalized = row.into_iter().map(|(j, x)| (j, x * &inv)).collect();
        self.pivot_rows.insert(lead, normalized);
        true
    }

    /// Pushes a dense row; returns true when it increased the rank.
    pub fn push_dense(&mut self, row: &[Scalar]) -> bool {
        assert_eq!(row.len(), self.cols, "row of wrong length");
        self.push(to_sparse(row))
    }

    /// True when `row` lies in the span of the rows pushed so far.
    pub fn contains(&self, row: &[Scalar]) -> bool {
        self.reduce(to_sparse(row)).is_empty()
    }

    fn fully_reduced(&self) -> BTreeMap<usize, SparseVec> {
        let mut done: BTreeMap<usize, SparseVec> = BTreeMap::new();
        for (&p, row) in self.pivot_rows.iter().rev() {
            let mut row = row.clone();
            let targets: Vec<usize> = row.keys().copied().filter(|&j| j != p && done.contains_key(&j)).collect();
            for j in targets {
                let Some(f) = row.remove(&j) else { continue };
                for (&k, x) in &done[&j] {
                    if k == j {
                        continue;
                    }
                    let e = row.entry(k).or_insert_with(zero);
                    *e -= &f * x;
                    if e.is_zero() {
                        row.remove(&k);
                    }
                }
            }
            done.insert(p, row);
        }
        done
    }

    /// Rows of the reduced row echelon form, ordered by pivot column.
    pub fn reduced_rows(&self) -> Vec<Vec<Scalar>> {
        self.fully_reduced()
            .into_values()
            .map(|row| {
                let mut dense = vec![zero(); self.cols];
                for (j, x) in row {
                    dense[j] = x;
                }
                dense
            })
            .collect()
    }

    /// Basis of the null space of the pushed rows, one vector per free column.
    pub fn kernel(&self) -> Vec<Vec<Scalar>> {
        let reduced = self.fully_reduced();
        let mut out = Vec::new();
        for free in (0..self.cols).filter(|c| !reduced.contains_key(c)) {
            let mut v = vec![zero(); self.cols];
            v[free] = one();
            for (&p, row) in &reduced {
                if let Some(x) = row.get(&free) {
                    v[p] = -x.clone();
                }
            }
            out.push(v);
        }
        out
    }
}

/// The space a [`Subspace`] lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum Ambient {
    /// The Lie algebra itself.
    Algebra,
    /// The exterior power of the given grade.
    Exterior { grade: usize },
    /// The endomorphisms of the algebra, flattened row-major.
    Endomorphisms,
    /// Multilinear forms of the given arity on the exterior power of the given grade.
    Forms { grade: usize, arity: usize },
    /// Any other coordinate space.
    Coordinates,
}

/// Linear subspace in canonical reduced row echelon form.
///
/// Two subspaces of the same ambient space are equal exactly when their
/// echelon bases are equal, so derived equality is mathematical equality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient: Ambient,
    ambient_dim: usize,
    basis: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl Subspace {
    /// The span of `vectors`, each of length `ambient_dim`.
    pub fn span(ambient: Ambient, ambient_dim: usize, vectors: &[Vec<Scalar>]) -> Self {
        let mut r = RowReducer::new(ambient_dim);
        for v in vectors {
            r.push_dense(v);
        }
        Self::from_reducer(ambient, &r)
    }

    /// The span of the rows held by a reducer.
    pub fn from_reducer(ambient: Ambient, reducer: &RowReducer) -> Self {
        Subspace { ambient, ambient_dim: reducer.cols(), basis: reducer.reduced_rows(), pivots: reducer.pivots() }
    }

    /// The zero subspace.
    pub fn zero(ambient: Ambient, ambient_dim: usize) -> Self {
        Subspace { ambient, ambient_dim, basis: Vec::new(), pivots: Vec::new() }
    }

    /// The whole ambient space.
    pub fn full(ambient: Ambient, ambient_dim: usize) -> Self {
        let basis = (0..ambient_dim).map(|i| unit(ambient_dim, i)).collect();
        Subspace { ambient, ambient_dim, basis, pivots: (0..ambient_dim).collect() }
    }

    /// The null space of `m`, living in the column space of `m`.
    pub fn kernel_of(ambient: Ambient, m: &Matrix) -> Self {
        Self::span(ambient, m.cols(), &m.kernel())
    }

    /// The column space of `m`.
    pub fn image_of(ambient: Ambient, m: &Matrix) -> Self {
        let cols: Vec<Vec<Scalar>> = (0..m.cols()).map(|j| m.column(j)).collect();
        Self::span(ambient, m.rows(), &cols)
    }

    /// Ambient space label.
    pub fn ambient(&self) -> Ambient {
        self.ambient
    }

    /// Dimension of the ambient space.
    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    /// Dimension of the subspace.
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Canonical echelon basis.
    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.basis
    }

    /// Echelon basis as a matrix whose rows are the basis vectors.
    pub fn basis_matrix(&self) -> Matrix {
        if self.basis.is_empty() {
            Matrix::zeros(0, self.ambient_dim)
        } else {
            Matrix::from_rows(self.basis.clone())
        }
    }

    /// Pivot columns of the echelon basis.
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates that are not pivots, in increasing order.
    pub fn non_pivots(&self) -> Vec<usize> {
        (0..self.ambient_dim).filter(|c| !self.pivots.contains(c)).collect()
    }

    /// Relabels the ambient space without touching the basis.
    pub fn with_ambient(mut self, ambient: Ambient) -> Self {
        self.ambient = ambient;
        self
    }

    /// Subtracts from `v` the combination of basis vectors matching its pivot entries.
    ///
    /// The result vanishes on every pivot column and is zero exactly when
    /// `v` belongs to the subspace.
    pub fn residue(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.ambient_dim, "vector of wrong length");
        let mut out = v.to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            let f = out[p].clone();
            if f.is_zero() {
                continue;
            }
            for (o, x) in out.iter_mut().zip(row) {
                if !x.is_zero() {
                    *o -= &f * x;
                }
            }
        }
        out
    }

    /// True when `v` lies in the subspace.
    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.residue(v).iter().all(Zero::is_zero)
    }

    /// Coordinates of `v` in the echelon basis, when `v` is a member.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    /// The vector with the given coordinates in the echelon basis.
    pub fn combine(&self, coords: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(coords.len(), self.dim(), "coordinate vector of wrong length");
        let mut out = vec![zero(); self.ambient_dim];
        for (c, row) in coords.iter().zip(&self.basis) {
            if c.is_zero() {
                continue;
            }
            for (o, x) in out.iter_mut().zip(row) {
                *o += c * x;
            }
        }
        out
    }

    /// True when every basis vector of `self` lies in `other`.
    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.ambient_dim == other.ambient_dim && self.basis.iter().all(|v| other.contains(v))
    }

    /// Sum of two subspaces.
    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut all = self.basis.clone();
        all.extend(other.basis.iter().cloned());
        Subspace::span(self.ambient, self.ambient_dim, &all)
    }

    /// Intersection of two subspaces.
    pub fn intersection(&self, other: &Subspace) -> Subspace {
        if self.dim() == 0 || other.dim() == 0 {
            return Subspace::zero(self.ambient, self.ambient_dim);
        }
        let mut cols = self.basis.clone();
        cols.extend(other.basis.iter().cloned());
        let m = Matrix::from_columns(self.ambient_dim, &cols);
        let vectors: Vec<Vec<Scalar>> = m.kernel().into_iter().map(|k| self.combine(&k[..self.dim()])).collect();
        Subspace::span(self.ambient, self.ambient_dim, &vectors)
    }

    /// Canonical basis rendered as rational strings.
    pub fn to_strings(&self) -> Vec<Vec<String>> {
        self.basis.iter().map(|row| row.iter().map(format_scalar).collect()).collect()
    }
}

/// The `i`-th unit vector of length `n`.
pub fn unit(n: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![zero(); n];
    v[i] = one();
    v
}

/// True when every entry of `v` is zero.
pub fn is_zero_vec(v: &[Scalar]) -> bool {
    v.iter().all(Zero::is_zero)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{frac, int};

    fn m(rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect())
    }

    #[test]
    fn rref_is_canonical() {
        let a = m(&[&[2, 4, 6], &[1, 2, 4]]);
        let (r, p) = a.rref();
        assert_eq!(r, m(&[&[1, 2, 0], &[0, 0, 1]]));
        assert_eq!(p, vec![0, 2]);
    }

    #[test]
    fn kernel_vectors_are_annihilated() {
        let a = m(&[&[1, 2, 3, 4], &[2, 4, 6, 8], &[0, 1, 1, 0]]);
        let k = a.kernel();
        assert_eq!(k.len(), 2);
        for v in k {
            assert!(is_zero_vec(&a.mul_vec(&v)));
        }
    }

    #[test]
    fn determinant_and_inverse_agree() {
        let a = m(&[&[2, 1, 0], &[1, 3, 1], &[0, 1, 4]]);
        assert_eq!(a.determinant(), int(18));
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv), Matrix::identity(3));
        assert!(m(&[&[1, 2], &[2, 4]]).inverse().is_none());
    }

    #[test]
    fn solve_finds_solution_or_reports_inconsistency() {
        let a = m(&[&[1, 1], &[1, -1]]);
        assert_eq!(a.solve(&[int(3), int(1)]).unwrap(), vec![int(2), int(1)]);
        let b = m(&[&[1, 1], &[2, 2]]);
        assert!(b.solve(&[int(1), int(3)]).is_none());
    }

    #[test]
    fn subspace_equality_ignores_spanning_set() {
        let a = Subspace::span(Ambient::Algebra, 3, &[vec![int(1), int(1), int(0)], vec![int(0), int(1), int(0)]]);
        let b = Subspace::span(Ambient::Algebra, 3, &[vec![int(1), int(0), int(0)], vec![int(2), int(3), int(0)]]);
        assert_eq!(a, b);
        assert_eq!(a.coordinates(&[int(5), int(7), int(0)]).unwrap(), vec![int(5), int(7)]);
        assert!(a.coordinates(&[int(0), int(0), int(1)]).is_none());
    }

    #[test]
    fn intersection_and_sum() {
        let a = Subspace::span(Ambient::Algebra, 3, &[unit(3, 0), unit(3, 1)]);
        let b = Subspace::span(Ambient::Algebra, 3, &[unit(3, 1), unit(3, 2)]);
        assert_eq!(a.intersection(&b), Subspace::span(Ambient::Algebra, 3, &[unit(3, 1)]));
        assert_eq!(a.sum(&b), Subspace::full(Ambient::Algebra, 3));
    }

    #[test]
    fn residue_vanishes_on_pivots() {
        let a = Subspace::span(Ambient::Algebra, 3, &[vec![int(1), frac(1, 2), int(0)]]);
        let r = a.residue(&[int(2), int(1), int(5)]);
        assert_eq!(r, vec![int(0), int(0), int(5)]);
    }
}
