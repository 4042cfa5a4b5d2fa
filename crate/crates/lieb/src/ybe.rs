//! Yang-Baxter equations, coboundary cocommutators and the
//! Chevalley-Eilenberg differential.
//!
//! A bivector `r` defines `δ_r(v) = [v, r]_S`. It is a cocommutator exactly
//! when `[r, r]_S` is invariant (the modified classical Yang-Baxter
//! equation); it solves the classical equation when `[r, r]_S = 0`.

use std::collections::BTreeMap;

use num_traits::Zero;
use rayon::prelude::*;

use crate::algebra::LieAlgebra;
use crate::combinatorics::{binomial, combinations, sort_with_sign};
use crate::error::{Error, Result};
use crate::exterior::{ad_on_exterior, schouten, MultiVector};
use crate::forms::MultiLinearForm;
use crate::invariants::{invariant_subspace, ReducedSpace};
use crate::linalg::{Matrix, Subspace};
use crate::scalar::{int, zero, Scalar};

fn require_grade(w: &MultiVector, m: usize) -> Result<()> {
    if w.is_zero() || w.is_homogeneous_of(m) {
        Ok(())
    } else {
        let found = match w.grade() {
            Some(g) => g.to_string(),
            None => "mixed".into(),
        };
        Err(Error::GradeMismatch { expected: m, found })
    }
}

fn same_algebra(alg: &LieAlgebra, w: &MultiVector) -> Result<()> {
    if w.dim() == alg.dim() {
        Ok(())
    } else {
        Err(Error::AlgebraMismatch { left: alg.dim(), right: w.dim() })
    }
}

/// The trivector `[r, r]_S`.
pub fn mcybe_residual(alg: &LieAlgebra, r: &MultiVector) -> Result<MultiVector> {
    same_algebra(alg, r)?;
    require_grade(r, 2)?;
    schouten(alg, r, r)
}

/// Certificate for a candidate r-matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RMatrixVerdict {
    /// `[r, r]_S`.
    pub residual: MultiVector,
    /// True when the residual vanishes.
    pub is_cybe: bool,
    /// True when the residual is invariant.
    pub is_mcybe: bool,
    /// Coordinates of the residual in the echelon basis of `(Λ³g)^g`, when it is invariant.
    pub witness: Option<Vec<Scalar>>,
}

/// Decides the classical and modified Yang-Baxter equations for `r`.
pub fn certify_r(alg: &LieAlgebra, r: &MultiVector) -> Result<RMatrixVerdict> {
    let inv = if alg.dim() >= 3 { Some(invariant_subspace(alg, 3)?) } else { None };
    certify_r_with(alg, r, inv.as_ref())
}

/// [`certify_r`] against a precomputed `(Λ³g)^g`; `None` stands for an algebra of dimension below 3.
pub fn certify_r_with(alg: &LieAlgebra, r: &MultiVector, inv3: Option<&Subspace>) -> Result<RMatrixVerdict> {
    let residual = mcybe_residual(alg, r)?;
    let is_cybe = residual.is_zero();
    let witness = match inv3 {
        Some(inv) => inv.coordinates(&residual.coords(3)?),
        None => Some(Vec::new()),
    };
    Ok(RMatrixVerdict { is_cybe, is_mcybe: witness.is_some(), residual, witness })
}

/// Matrix of `δ_r`: column `i` holds the coordinates of `[e_i, r]_S` in `Λ²g`.
pub fn cocommutator(alg: &LieAlgebra, r: &MultiVector) -> Result<Matrix> {
    same_algebra(alg, r)?;
    require_grade(r, 2)?;
    let n = alg.dim();
    let columns: Vec<Vec<Scalar>> =
        (0..n).map(|i| schouten(alg, &MultiVector::blade(n, &[i])?, r)?.coords(2)).collect::<Result<_>>()?;
    Ok(Matrix::from_columns(binomial(n, 2), &columns))
}

/// True when `δ[e_i, e_j] = [e_i, δ e_j]_S + [δ e_i, e_j]_S` for every basis pair.
pub fn is_cocycle(alg: &LieAlgebra, delta: &Matrix) -> Result<bool> {
    let n = alg.dim();
    if delta.rows() != binomial(n, 2) || delta.cols() != n {
        return Err(Error::DimensionMismatch("cocommutator matrix has the wrong shape".into()));
    }
    let image = |v: &[Scalar]| MultiVector::from_coords(n, 2, &delta.mul_vec(v));
    for i in 0..n {
        for j in i + 1..n {
            let ei = MultiVector::blade(n, &[i])?;
            let ej = MultiVector::blade(n, &[j])?;
            let lhs = image(&schouten(alg, &ei, &ej)?.coords(1)?)?;
            let di = MultiVector::from_coords(n, 2, &delta.column(i))?;
            let dj = MultiVector::from_coords(n, 2, &delta.column(j))?;
            let rhs = &schouten(alg, &ei, &dj)? + &schouten(alg, &di, &ej)?;
            if lhs != rhs {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Whether two bivectors define the same cocommutator.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CoproductComparison {
    /// `r1 - r2` is invariant.
    pub difference_invariant: bool,
    /// The two cocommutator matrices coincide.
    pub matrices_equal: bool,
}

impl CoproductComparison {
    /// The common verdict; both tests always agree.
    pub fn same(&self) -> bool {
        self.difference_invariant
    }
}

/// Compares `δ_{r1}` and `δ_{r2}` by invariance of the difference and by their matrices.
pub fn same_coproduct(alg: &LieAlgebra, r1: &MultiVector, r2: &MultiVector) -> Result<CoproductComparison> {
    require_grade(r1, 2)?;
    require_grade(r2, 2)?;
    let diff = r1.checked_sub(r2)?;
    let inv = invariant_subspace(alg, 2)?;
    Ok(CoproductComparison {
        difference_invariant: inv.contains(&diff.coords(2)?),
        matrices_equal: cocommutator(alg, r1)? == cocommutator(alg, r2)?,
    })
}

/// Matrix of `Θ_w: v ↦ [v, w]_S`, one row per basis vector of `g`.
pub fn theta_matrix(alg: &LieAlgebra, w: &MultiVector) -> Result<Matrix> {
    same_algebra(alg, w)?;
    let n = alg.dim();
    let Some(m) = w.grade() else {
        if w.is_zero() {
            return Ok(Matrix::zeros(n, 0));
        }
        return Err(Error::MixedGrade);
    };
    let rows: Vec<Vec<Scalar>> = if m == 0 {
        vec![Vec::new(); n]
    } else {
        (0..n).map(|i| schouten(alg, &MultiVector::blade(n, &[i])?, w)?.coords(m)).collect::<Result<_>>()?
    };
    Ok(Matrix::from_rows(rows))
}

/// Dimension of the orbit of `w` under the inner automorphism group, `rank Θ_w`.
pub fn orbit_dimension(alg: &LieAlgebra, w: &MultiVector) -> Result<usize> {
    Ok(theta_matrix(alg, w)?.rank())
}

/// Rank of `v ↦ [[v], [w]]_R` on the reduced space of the grade of `w`.
pub fn reduced_orbit_dimension(alg: &LieAlgebra, reduced: &ReducedSpace, class: &[Scalar]) -> Result<usize> {
    let w = reduced.lift_multivector(class);
    let n = alg.dim();
    let rows: Vec<Vec<Scalar>> = (0..n)
        .map(|i| reduced.project_multivector(&schouten(alg, &MultiVector::blade(n, &[i])?, &w)?))
        .collect::<Result<_>>()?;
    Ok(Matrix::from_rows(rows).rank())
}

/// `b(r, r)` for a bilinear form on the exterior power holding `r`.
pub fn quadratic_separator(b: &MultiLinearForm, r: &MultiVector) -> Result<Scalar> {
    if b.arity() != 2 {
        return Err(Error::ArityMismatch { expected: 2, found: b.arity() });
    }
    require_grade(r, b.grade())?;
    let v = r.coords(b.grade())?;
    b.evaluate(&[&v, &v])
}

/// A module for the Chevalley-Eilenberg complex, given by the matrices of its basis actions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoefficientModule {
    actions: Vec<Matrix>,
}

impl CoefficientModule {
    /// Module with the given action matrices, one per basis vector of `g`.
    pub fn new(alg: &LieAlgebra, actions: Vec<Matrix>) -> Result<Self> {
        if actions.len() != alg.dim() {
            return Err(Error::DimensionMismatch("one action matrix per basis vector is required".into()));
        }
        let d = actions.first().map_or(0, Matrix::rows);
        if actions.iter().any(|a| a.rows() != d || a.cols() != d) {
            return Err(Error::DimensionMismatch("action matrices must be square of one size".into()));
        }
        Ok(CoefficientModule { actions })
    }

    /// `Λ^m g` with the adjoint action.
    pub fn exterior(alg: &LieAlgebra, m: usize) -> Result<Self> {
        let actions =
            (0..alg.dim()).map(|i| ad_on_exterior(alg, i, m).map(|e| e.into_matrix())).collect::<Result<_>>()?;
        CoefficientModule::new(alg, actions)
    }

    /// The reduced space with its induced action.
    pub fn reduced(alg: &LieAlgebra, reduced: &ReducedSpace) -> Result<Self> {
        CoefficientModule::new(alg, reduced.actions(alg)?)
    }

    /// Dimension of the module.
    pub fn dim(&self) -> usize {
        self.actions.first().map_or(0, Matrix::rows)
    }

    /// Action matrices.
    pub fn actions(&self) -> &[Matrix] {
        &self.actions
    }
}

/// An alternating `q`-linear map from `g` to a module, stored on increasing index tuples.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cochain {
    degree: usize,
    module_dim: usize,
    values: BTreeMap<Vec<usize>, Vec<Scalar>>,
}

impl Cochain {
    /// The zero cochain.
    pub fn zero(degree: usize, module_dim: usize) -> Self {
        Cochain { degree, module_dim, values: BTreeMap::new() }
    }

    /// Cochain with the given values on increasing tuples; zero values are dropped.
    pub fn from_values(degree: usize, module_dim: usize, values: BTreeMap<Vec<usize>, Vec<Scalar>>) -> Result<Self> {
        let mut c = Cochain::zero(degree, module_dim);
        for (k, v) in values {
            if k.len() != degree || k.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::DimensionMismatch("cochain keys must be increasing tuples of the degree".into()));
            }
            if v.len() != module_dim {
                return Err(Error::DimensionMismatch("cochain values must lie in the module".into()));
            }
            c.set(k, v);
        }
        Ok(c)
    }

    /// Degree `q`.
    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Dimension of the coefficient module.
    pub fn module_dim(&self) -> usize {
        self.module_dim
    }

    /// Nonzero values on increasing tuples.
    pub fn values(&self) -> &BTreeMap<Vec<usize>, Vec<Scalar>> {
        &self.values
    }

    /// Value on an increasing tuple.
    pub fn get(&self, key: &[usize]) -> Vec<Scalar> {
        self.values.get(key).cloned().unwrap_or_else(|| vec![zero(); self.module_dim])
    }

    /// Sets the value on an increasing tuple.
    pub fn set(&mut self, key: Vec<usize>, value: Vec<Scalar>) {
        if value.iter().all(Zero::is_zero) {
            self.values.remove(&key);
        } else {
            self.values.insert(key, value);
        }
    }

    /// True when every value vanishes.
    pub fn is_zero(&self) -> bool {
        self.values.is_empty()
    }

    /// Applies a linear map to every value.
    pub fn map_values(&self, m: &Matrix) -> Cochain {
        let mut out = Cochain::zero(self.degree, m.rows());
        for (k, v) in &self.values {
            out.set(k.clone(), m.mul_vec(v));
        }
        out
    }

    /// Value on an arbitrary index list, using antisymmetry.
    fn eval(&self, indices: &[usize]) -> Option<(Vec<Scalar>, bool)> {
        let (sorted, odd) = sort_with_sign(indices)?;
        self.values.get(&sorted).map(|v| (v.clone(), odd))
    }
}

/// The Chevalley-Eilenberg differential
/// `dc(v_0, …, v_q) = Σ_i (-1)^i v_i·c(…, v̂_i, …) + Σ_{i<j} (-1)^{i+j} c([v_i, v_j], …, v̂_i, …, v̂_j, …)`.
pub fn ce_differential(alg: &LieAlgebra, module: &CoefficientModule, c: &Cochain) -> Result<Cochain> {
    let n = alg.dim();
    if c.degree > n {
        return Err(Error::DegreeOverflow { degree: c.degree, dim: n });
    }
    if c.module_dim != module.dim() {
        return Err(Error::DimensionMismatch("cochain and module have different dimensions".into()));
    }
    let q = c.degree;
    let d = module.dim();
    let mut out = Cochain::zero(q + 1, d);
    for key in combinations(n, q + 1) {
        let mut acc = vec![zero(); d];
        for (i, &vi) in key.iter().enumerate() {
            let mut rest = key.clone();
            rest.remove(i);
            let value = c.get(&rest);
            if value.iter().all(Zero::is_zero) {
                continue;
            }
            let image = module.actions[vi].mul_vec(&value);
            let s = if i % 2 == 0 { int(1) } else { int(-1) };
            for (a, x) in acc.iter_mut().zip(image) {
                *a += &s * x;
            }
        }
        for i in 0..key.len() {
            for j in i + 1..key.len() {
                let mut rest: Vec<usize> = key.clone();
                rest.remove(j);
                rest.remove(i);
                let s = if (i + j) % 2 == 0 { int(1) } else { int(-1) };
                for (k, coef) in alg.bracket_basis(key[i], key[j]) {
                    let mut args = vec![*k];
                    args.extend_from_slice(&rest);
                    if let Some((value, odd)) = c.eval(&args) {
                        let f = if odd { -(&s * coef) } else { &s * coef };
                        for (a, x) in acc.iter_mut().zip(value) {
                            *a += &f * x;
                        }
                    }
                }
            }
        }
        out.set(key, acc);
    }
    Ok(out)
}

/// Residual of one grid point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GridPoint {
    /// Coefficients of the bivector in the supplied basis.
    pub point: Vec<Scalar>,
    /// `[r, r]_S`.
    pub residual: MultiVector,
    /// True when the residual is invariant.
    pub is_mcybe: bool,
}

/// Evaluates the residual of `Σ point_k basis_k` at every point, in parallel.
///
/// The output order follows `points`.
pub fn residual_grid(alg: &LieAlgebra, basis: &[MultiVector], points: &[Vec<Scalar>]) -> Result<Vec<GridPoint>> {
    let inv = if alg.dim() >= 3 { Some(invariant_subspace(alg, 3)?) } else { None };
    points
        .par_iter()
        .map(|p| {
            if p.len() != basis.len() {
                return Err(Error::DimensionMismatch("grid point and bivector basis differ in length".into()));
            }
            let mut r = MultiVector::zero(alg.dim());
            for (c, b) in p.iter().zip(basis) {
                r = r.checked_add(&b.scaled(c))?;
            }
            let v = certify_r_with(alg, &r, inv.as_ref())?;
            Ok(GridPoint { point: p.clone(), residual: v.residual, is_mcybe: v.is_mcybe })
        })
        .collect()
}

/// All integer points of `[lo, hi]^k` in lexicographic order.
pub fn integer_grid(k: usize, lo: i64, hi: i64) -> Vec<Vec<Scalar>> {
    let mut out = vec![Vec::new()];
    for _ in 0..k {
        let mut next = Vec::with_capacity(out.len() * (hi - lo + 1).max(0) as usize);
        for p in &out {
            for x in lo..=hi {
                let mut q = p.clone();
                q.push(int(x));
                next.push(q);
            }
        }
        out = next;
    }
    out
}
