//! Sparse multivectors on the Grassmann algebra of a Lie algebra.
//!
//! A [`MultiVector`] is a finite sum of basis blades `c * e_{i1} ∧ … ∧ e_{ir}`
//! keyed by strictly increasing index tuples. This module provides the
//! wedge product, the algebraic Schouten bracket, the extension of linear
//! maps of `g` to exterior powers and the annihilator of a multivector.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use crate::algebra::{EndoMap, LieAlgebra};
use crate::combinatorics::{binomial, sort_with_sign, ExteriorBasis};
use crate::error::{Error, Result};
use crate::linalg::{Ambient, Matrix, Subspace};
use crate::scalar::{one, zero, Scalar};

/// Element of the Grassmann algebra of an `n`-dimensional vector space.
///
/// Terms map strictly increasing index tuples (0-based) to nonzero
/// coefficients, so two multivectors are equal exactly when their term
/// maps are equal. The empty tuple carries the grade-0 part.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultiVector {
    dim: usize,
    terms: BTreeMap<Vec<usize>, Scalar>,
}

impl MultiVector {
    /// The zero multivector over an `dim`-dimensional algebra.
    pub fn zero(dim: usize) -> Self {
        MultiVector { dim, terms: BTreeMap::new() }
    }

    /// The grade-0 multivector `c`.
    pub fn scalar(dim: usize, c: Scalar) -> Self {
        let mut w = MultiVector::zero(dim);
        w.add_term(Vec::new(), c);
        w
    }

    /// The blade `e_{i1} ∧ … ∧ e_{ir}` for 0-based indices in any order.
    ///
    /// Repeated indices give zero; the sign of the sorting permutation is applied.
    pub fn blade(dim: usize, indices: &[usize]) -> Result<Self> {
        Self::from_terms(dim, [(indices.to_vec(), one())])
    }

    /// The grade-1 multivector with the given dense coordinates.
    pub fn vector(coords: &[Scalar]) -> Self {
        let dim = coords.len();
        let mut w = MultiVector::zero(dim);
        for (i, c) in coords.iter().enumerate() {
            w.add_term(vec![i], c.clone());
        }
        w
    }

    /// The grade-`m` multivector with coordinates `coords` in the canonical basis of grade `m`.
    pub fn from_coords(dim: usize, m: usize, coords: &[Scalar]) -> Result<Self> {
        let basis = ExteriorBasis::new(dim, m);
        if coords.len() != basis.len() {
            return Err(Error::DimensionMismatch(format!(
                "grade {m} over dimension {dim} has {} coordinates, got {}",
                basis.len(),
                coords.len()
            )));
        }
        let mut w = MultiVector::zero(dim);
        for (t, c) in basis.tuples().iter().zip(coords) {
            w.add_term(t.clone(), c.clone());
        }
        Ok(w)
    }

    /// Sums `c * e_I` over arbitrary index lists, sorting each with its sign.
    pub fn from_terms<I>(dim: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<usize>, Scalar)>,
    {
        let mut w = MultiVector::zero(dim);
        for (idx, c) in terms {
            if let Some(&bad) = idx.iter().find(|&&i| i >= dim) {
                return Err(Error::DimensionMismatch(format!(
                    "basis index {} out of range for dimension {dim}",
                    bad + 1
                )));
            }
            if let Some((sorted, odd)) = sort_with_sign(&idx) {
                w.add_term(sorted, if odd { -c } else { c });
            }
        }
        Ok(w)
    }

    fn add_term(&mut self, key: Vec<usize>, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(key);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Dimension of the underlying algebra.
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Nonzero terms in canonical (lexicographic) order.
    pub fn terms(&self) -> &BTreeMap<Vec<usize>, Scalar> {
        &self.terms
    }

    /// Coefficient of the blade with the given increasing tuple.
    pub fn coefficient(&self, tuple: &[usize]) -> Scalar {
        self.terms.get(tuple).cloned().unwrap_or_else(zero)
    }

    /// True when every coefficient vanishes.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Grades carrying a nonzero term.
    pub fn grades(&self) -> BTreeSet<usize> {
        self.terms.keys().map(Vec::len).collect()
    }

    /// The grade of a nonzero homogeneous multivector.
    ///
    /// Returns `None` for zero and for mixed-grade values.
    pub fn grade(&self) -> Option<usize> {
        let g = self.grades();
        if g.len() == 1 {
            g.into_iter().next()
        } else {
            None
        }
    }

    /// True when every term has grade `m` (the zero multivector qualifies).
    pub fn is_homogeneous_of(&self, m: usize) -> bool {
        self.terms.keys().all(|k| k.len() == m)
    }

    /// The grade-`m` component.
    pub fn component(&self, m: usize) -> Self {
        MultiVector {
            dim: self.dim,
            terms: self.terms.iter().filter(|(k, _)| k.len() == m).map(|(k, c)| (k.clone(), c.clone())).collect(),
        }
    }

    /// Dense coordinates of a grade-`m` multivector in the canonical basis.
    pub fn coords(&self, m: usize) -> Result<Vec<Scalar>> {
        if !self.is_homogeneous_of(m) {
            return Err(Error::MixedGrade);
        }
        let basis = ExteriorBasis::new(self.dim, m);
        let mut out = vec![zero(); basis.len()];
        for (k, c) in &self.terms {
            out[basis.index_of(k).expect("canonical key")] = c.clone();
        }
        Ok(out)
    }

    /// Multiplies every coefficient by `c`.
    pub fn scaled(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return MultiVector::zero(self.dim);
        }
        MultiVector { dim: self.dim, terms: self.terms.iter().map(|(k, x)| (k.clone(), x * c)).collect() }
    }

    /// Sum, failing when the operands live over different dimensions.
    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        same_dim(self, other)?;
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), c.clone());
        }
        Ok(out)
    }

    /// Difference, failing when the operands live over different dimensions.
    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&-other)
    }
}

fn same_dim(a: &MultiVector, b: &MultiVector) -> Result<()> {
    if a.dim != b.dim {
        return Err(Error::AlgebraMismatch { left: a.dim, right: b.dim });
    }
    Ok(())
}

impl Add for &MultiVector {
    type Output = MultiVector;

    /// # Panics
    ///
    /// Panics when the operands live over different dimensions.
    fn add(self, other: &MultiVector) -> MultiVector {
        self.checked_add(other).expect("multivectors over different algebras")
    }
}

impl Sub for &MultiVector {
    type Output = MultiVector;

    /// # Panics
    ///
    /// Panics when the operands live over different dimensions.
    fn sub(self, other: &MultiVector) -> MultiVector {
        self.checked_sub(other).expect("multivectors over different algebras")
    }
}

impl Neg for &MultiVector {
    type Output = MultiVector;

    fn neg(self) -> MultiVector {
        MultiVector { dim: self.dim, terms: self.terms.iter().map(|(k, c)| (k.clone(), -c)).collect() }
    }
}

impl Mul<&MultiVector> for &Scalar {
    type Output = MultiVector;

    fn mul(self, w: &MultiVector) -> MultiVector {
        w.scaled(self)
    }
}

impl fmt::Display for MultiVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (1..=self.dim).map(|i| format!("e{i}")).collect();
        f.write_str(&crate::io::format_multivector(self, &names))
    }
}

/// Wedge product `a ∧ b`.
pub fn wedge(a: &MultiVector, b: &MultiVector) -> Result<MultiVector> {
    same_dim(a, b)?;
    let mut out = MultiVector::zero(a.dim);
    for (i, x) in &a.terms {
        for (j, y) in &b.terms {
            let mut idx = i.clone();
            idx.extend_from_slice(j);
            if let Some((sorted, odd)) = sort_with_sign(&idx) {
                let c = x * y;
                out.add_term(sorted, if odd { -c } else { c });
            }
        }
    }
    Ok(out)
}

/// Algebraic Schouten bracket `[a, b]_S`.
///
/// On blades `X1 ∧ … ∧ Xs` and `Y1 ∧ … ∧ Yl` it is
/// `Σ_{i,j} (-1)^{i+j} [Xi, Yj] ∧ X1 ∧ … ^Xi … ∧ Xs ∧ Y1 ∧ … ^Yj … ∧ Yl`,
/// extended bilinearly. Grade-0 arguments bracket to zero.
pub fn schouten(alg: &LieAlgebra, a: &MultiVector, b: &MultiVector) -> Result<MultiVector> {
    check_parent(alg, a)?;
    check_parent(alg, b)?;
    let mut out = MultiVector::zero(alg.dim());
    for (xi, x) in &a.terms {
        if xi.is_empty() {
            continue;
        }
        for (yj, y) in &b.terms {
            if yj.is_empty() {
                continue;
            }
            let xy = x * y;
            for i in 0..xi.len() {
                for j in 0..yj.len() {
                    let bracket = alg.bracket_basis(xi[i], yj[j]);
                    if bracket.is_empty() {
                        continue;
                    }
                    let mut rest: Vec<usize> = Vec::with_capacity(xi.len() + yj.len() - 1);
                    rest.push(usize::MAX);
                    rest.extend(xi.iter().enumerate().filter(|&(p, _)| p != i).map(|(_, &v)| v));
                    rest.extend(yj.iter().enumerate().filter(|&(q, _)| q != j).map(|(_, &v)| v));
                    let base = if (i + j) % 2 == 0 { xy.clone() } else { -xy.clone() };
                    for (k, c) in bracket {
                        rest[0] = *k;
                        if let Some((sorted, odd)) = sort_with_sign(&rest) {
                            let coef = &base * c;
                            out.add_term(sorted, if odd { -coef } else { coef });
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

fn check_parent(alg: &LieAlgebra, w: &MultiVector) -> Result<()> {
    if w.dim != alg.dim() {
        return Err(Error::AlgebraMismatch { left: alg.dim(), right: w.dim });
    }
    Ok(())
}

/// How a linear map of `g` is extended to an exterior power.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExtensionMode {
    /// `v1 ∧ … ∧ vm ↦ Σ_i v1 ∧ … ∧ T vi ∧ … ∧ vm`.
    Derivation,
    /// `v1 ∧ … ∧ vm ↦ T v1 ∧ … ∧ T vm`.
    Multiplicative,
}

/// Extension of an `n x n` matrix `t` to the grade-`m` exterior power.
pub fn lambda_power(t: &Matrix, m: usize, mode: ExtensionMode) -> Result<EndoMap> {
    let n = t.rows();
    if t.cols() != n {
        return Err(Error::DimensionMismatch(format!("expected a square matrix, got {}x{}", t.rows(), t.cols())));
    }
    if m > n {
        return Err(Error::GradeOutOfRange { grade: m, dim: n });
    }
    let basis = ExteriorBasis::new(n, m);
    let size = basis.len();
    let mut out = Matrix::zeros(size, size);
    match mode {
        ExtensionMode::Derivation => {
            for (col, tuple) in basis.tuples().iter().enumerate() {
                for r in 0..m {
                    for a in 0..n {
                        let c = t.get(a, tuple[r]);
                        if c.is_zero() {
                            continue;
                        }
                        let mut idx = tuple.clone();
                        idx[r] = a;
                        if let Some((sorted, odd)) = sort_with_sign(&idx) {
                            let row = basis.index_of(&sorted).expect("canonical tuple");
                            out.add_to(row, col, &if odd { -c.clone() } else { c.clone() });
                        }
                    }
                }
            }
        }
        ExtensionMode::Multiplicative => {
            for (col, cols) in basis.tuples().iter().enumerate() {
                for (row, rows) in basis.tuples().iter().enumerate() {
                    let minor = Matrix::from_rows(
                        rows.iter().map(|&i| cols.iter().map(|&j| t.get(i, j).clone()).collect()).collect(),
                    );
                    let d = if m == 0 { one() } else { minor.determinant() };
                    out.set(row, col, d);
                }
            }
        }
    }
    Ok(EndoMap::new(m, out))
}

/// Applies the multiplicative extension of `t` to every grade of `w`.
pub fn transform(t: &Matrix, w: &MultiVector) -> Result<MultiVector> {
    if t.rows() != w.dim || t.cols() != w.dim {
        return Err(Error::AlgebraMismatch { left: t.rows(), right: w.dim });
    }
    let mut out = MultiVector::zero(w.dim);
    for (idx, c) in &w.terms {
        let mut image = MultiVector::scalar(w.dim, c.clone());
        for &i in idx {
            image = wedge(&image, &MultiVector::vector(&t.column(i)))?;
        }
        out = &out + &image;
    }
    Ok(out)
}

/// Vectors annihilating a multivector under the wedge product.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnnihilatorSpan {
    /// `{v ∈ g : v ∧ w = 0}`.
    pub span: Subspace,
    /// True when the span has dimension equal to the grade, i.e. `w` is decomposable.
    pub decomposable: bool,
}

/// Computes `{v ∈ g : v ∧ w = 0}` for a nonzero homogeneous `w` of grade at least one.
pub fn annihilator_span(w: &MultiVector) -> Result<AnnihilatorSpan> {
    if w.is_zero() {
        return Err(Error::ZeroInput);
    }
    let m = w.grade().ok_or(Error::MixedGrade)?;
    if m == 0 {
        return Err(Error::GradeMismatch { expected: 1, found: "0".into() });
    }
    let n = w.dim;
    let rows = binomial(n, m + 1);
    let mut columns = Vec::with_capacity(n);
    for i in 0..n {
        let e = MultiVector::blade(n, &[i])?;
        columns.push(wedge(&e, w)?.coords(m + 1)?);
    }
    let map = Matrix::from_columns(rows, &columns);
    let span = Subspace::kernel_of(Ambient::Algebra, &map);
    let decomposable = span.dim() == m;
    Ok(AnnihilatorSpan { span, decomposable })
}

/// Matrix of `w ↦ [v, w]_S` on the grade-`m` exterior power, for a basis vector `e_i`.
pub fn ad_on_exterior(alg: &LieAlgebra, i: usize, m: usize) -> Result<EndoMap> {
    lambda_power(&alg.ad_basis(i), m, ExtensionMode::Derivation)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    fn e(dim: usize, idx: &[usize]) -> MultiVector {
        MultiVector::blade(dim, idx).unwrap()
    }

    #[test]
    fn wedge_of_basis_vectors() {
        assert_eq!(wedge(&e(3, &[0]), &e(3, &[1])).unwrap(), e(3, &[0, 1]));
        assert_eq!(wedge(&e(3, &[1]), &e(3, &[0])).unwrap(), -&e(3, &[0, 1]));
        let a = &e(3, &[0]) + &e(3, &[1]);
        let b = &e(3, &[0]) - &e(3, &[1]);
        assert_eq!(wedge(&a, &b).unwrap(), e(3, &[0, 1]).scaled(&int(-2)));
    }

    #[test]
    fn blade_with_repeats_vanishes() {
        assert!(e(3, &[1, 1]).is_zero());
        assert_eq!(e(3, &[2, 0, 1]), e(3, &[0, 1, 2]));
    }

    #[test]
    fn mismatched_dimensions_are_rejected() {
        assert!(matches!(wedge(&e(3, &[0]), &e(4, &[0])), Err(Error::AlgebraMismatch { .. })));
    }

    #[test]
    fn annihilator_of_top_blade_is_everything() {
        let a = annihilator_span(&e(3, &[0, 1, 2])).unwrap();
        assert_eq!(a.span.dim(), 3);
        assert!(a.decomposable);
    }

    #[test]
    fn annihilator_of_symplectic_form_is_trivial() {
        let w = &e(4, &[0, 1]) + &e(4, &[2, 3]);
        let a = annihilator_span(&w).unwrap();
        assert_eq!(a.span.dim(), 0);
        assert!(!a.decomposable);
    }

    #[test]
    fn multiplicative_extension_of_scaling() {
        let t = Matrix::identity(3).scale(&int(3));
        let l = lambda_power(&t, 2, ExtensionMode::Multiplicative).unwrap();
        assert_eq!(l.matrix(), &Matrix::identity(3).scale(&int(9)));
        let d = lambda_power(&Matrix::identity(3), 3, ExtensionMode::Derivation).unwrap();
        assert_eq!(d.matrix(), &Matrix::identity(1).scale(&int(3)));
    }
}
