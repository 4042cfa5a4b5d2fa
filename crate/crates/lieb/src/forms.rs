//! Multilinear forms on exterior powers of a Lie algebra.
//!
//! This module solves for `g`-invariant `k`-linear forms on a module
//! `Λ^m g`, extends a form on `g` to every exterior power and builds forms
//! induced by symmetric tensors on the dual through the Killing map.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use num_traits::Zero;

use crate::algebra::{flatten, killing_form, unflatten, LieAlgebra};
use crate::combinatorics::{binomial, permutations, ExteriorBasis};
use crate::error::{Error, Result};
use crate::exterior::{ad_on_exterior, MultiVector};
use crate::linalg::{Ambient, Matrix, RowReducer, Subspace};
use crate::scalar::{factorial, one, zero, Scalar};
use crate::Limits;

/// Declared symmetry of a multilinear form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Symmetry {
    /// No constraint.
    None,
    /// Invariant under every permutation of the arguments.
    Symmetric,
    /// Changes sign under every transposition of the arguments.
    Antisymmetric,
}

impl FromStr for Symmetry {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "none" => Ok(Symmetry::None),
            "symmetric" | "sym" => Ok(Symmetry::Symmetric),
            "antisymmetric" | "antisym" => Ok(Symmetry::Antisymmetric),
            other => Err(Error::Parse(format!("unknown symmetry `{other}`"))),
        }
    }
}

impl fmt::Display for Symmetry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Symmetry::None => "none",
            Symmetry::Symmetric => "symmetric",
            Symmetry::Antisymmetric => "antisymmetric",
        })
    }
}

/// Dense `k`-linear form on a module with a fixed basis of size `size`.
///
/// For forms on `Λ^m g` the basis is the canonical one and `size = C(n, m)`.
/// Entries are stored row-major: the last argument varies fastest.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiLinearForm {
    arity: usize,
    grade: usize,
    size: usize,
    data: Vec<Scalar>,
    symmetry: Symmetry,
}

impl MultiLinearForm {
    /// Builds a form, checking the tensor shape and the declared symmetry.
    pub fn new(arity: usize, grade: usize, size: usize, data: Vec<Scalar>, symmetry: Symmetry) -> Result<Self> {
        let expected = size.pow(arity as u32);
        if data.len() != expected {
            return Err(Error::DimensionMismatch(format!(
                "a {arity}-linear form on a {size}-dimensional module has {expected} entries, got {}",
                data.len()
            )));
        }
        let form = MultiLinearForm { arity, grade, size, data, symmetry };
        if !form.has_symmetry(symmetry) {
            return Err(Error::SymmetryViolation(symmetry.to_string()));
        }
        Ok(form)
    }

    /// Builds a form and tags it with the strongest symmetry it satisfies.
    pub fn detect(arity: usize, grade: usize, size: usize, data: Vec<Scalar>) -> Result<Self> {
        let mut form = MultiLinearForm::new(arity, grade, size, data, Symmetry::None)?;
        form.symmetry = if form.has_symmetry(Symmetry::Symmetric) {
            Symmetry::Symmetric
        } else if form.has_symmetry(Symmetry::Antisymmetric) {
            Symmetry::Antisymmetric
        } else {
            Symmetry::None
        };
        Ok(form)
    }

    /// The zero form.
    pub fn zero(arity: usize, grade: usize, size: usize) -> Self {
        MultiLinearForm {
            arity,
            grade,
            size,
            data: vec![zero(); size.pow(arity as u32)],
            symmetry: Symmetry::Symmetric,
        }
    }

    /// Bilinear form with the given Gram matrix.
    pub fn from_matrix(grade: usize, m: &Matrix, symmetry: Symmetry) -> Result<Self> {
        if m.rows() != m.cols() {
            return Err(Error::DimensionMismatch("bilinear forms need a square matrix".into()));
        }
        MultiLinearForm::new(2, grade, m.rows(), m.entries().to_vec(), symmetry)
    }

    /// Number of arguments.
    pub fn arity(&self) -> usize {
        self.arity
    }

    /// Grade of the exterior power the form lives on.
    pub fn grade(&self) -> usize {
        self.grade
    }

    /// Dimension of the module the form lives on.
    pub fn size(&self) -> usize {
        self.size
    }

    /// Declared symmetry.
    pub fn symmetry(&self) -> Symmetry {
        self.symmetry
    }

    /// Row-major entries.
    pub fn data(&self) -> &[Scalar] {
        &self.data
    }

    /// Value on basis elements with the given indices.
    pub fn entry(&self, idx: &[usize]) -> &Scalar {
        assert_eq!(idx.len(), self.arity, "wrong number of arguments");
        &self.data[flatten(idx, self.size)]
    }

    /// True when every entry vanishes.
    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    /// Gram matrix of a bilinear form.
    pub fn to_matrix(&self) -> Result<Matrix> {
        if self.arity != 2 {
            return Err(Error::ArityMismatch { expected: 2, found: self.arity });
        }
        Ok(Matrix::from_entries(self.size, self.size, self.data.clone()))
    }

    /// Evaluates the form on arbitrary coordinate vectors.
    pub fn evaluate(&self, args: &[&[Scalar]]) -> Result<Scalar> {
        if args.len() != self.arity {
            return Err(Error::ArityMismatch { expected: self.arity, found: args.len() });
        }
        if args.iter().any(|a| a.len() != self.size) {
            return Err(Error::DimensionMismatch(format!("arguments must have {} coordinates", self.size)));
        }
        let mut acc = zero();
        for (flat, value) in self.data.iter().enumerate() {
            if value.is_zero() {
                continue;
            }
            let idx = unflatten(flat, self.size, self.arity);
            let mut term = value.clone();
            for (slot, &i) in idx.iter().enumerate() {
                if args[slot][i].is_zero() {
                    term = zero();
                    break;
                }
                term *= &args[slot][i];
            }
            acc += term;
        }
        Ok(acc)
    }

    /// True when the tensor satisfies `symmetry`.
    pub fn has_symmetry(&self, symmetry: Symmetry) -> bool {
        if symmetry == Symmetry::None || self.arity < 2 {
            return true;
        }
        for (flat, value) in self.data.iter().enumerate() {
            let idx = unflatten(flat, self.size, self.arity);
            for r in 0..self.arity - 1 {
                let mut swapped = idx.clone();
                swapped.swap(r, r + 1);
                let other = &self.data[flatten(&swapped, self.size)];
                let ok = match symmetry {
                    Symmetry::Symmetric => other == value,
                    Symmetry::Antisymmetric => *other == -value.clone(),
                    Symmetry::None => true,
                };
                if !ok {
                    return false;
                }
            }
        }
        true
    }

    /// Applies the linear map `m` to every argument: `b'(x1, …) = b(m x1, …)`.
    pub fn pullback(&self, m: &Matrix) -> Result<MultiLinearForm> {
        if m.rows() != self.size {
            return Err(Error::DimensionMismatch("pullback matrix has the wrong number of rows".into()));
        }
        let new_size = m.cols();
        let mut data = self.data.clone();
        let mut size_per_slot = vec![self.size; self.arity];
        for slot in 0..self.arity {
            let mut out_shape = size_per_slot.clone();
            out_shape[slot] = new_size;
            let total: usize = out_shape.iter().product();
            let mut out = vec![zero(); total];
            for (flat, value) in data.iter().enumerate() {
                if value.is_zero() {
                    continue;
                }
                let idx = unflatten_mixed(flat, &size_per_slot);
                for a in 0..new_size {
                    let c = m.get(idx[slot], a);
                    if c.is_zero() {
                        continue;
                    }
                    let mut target = idx.clone();
                    target[slot] = a;
                    out[flatten_mixed(&target, &out_shape)] += value * c;
                }
            }
            data = out;
            size_per_slot = out_shape;
        }
        MultiLinearForm::detect(self.arity, self.grade, new_size, data)
    }

    /// Restriction to the basis elements listed in `indices`.
    pub fn restrict(&self, indices: &[usize]) -> MultiLinearForm {
        let size = indices.len();
        let total = size.pow(self.arity as u32);
        let data = (0..total)
            .map(|flat| {
                let idx: Vec<usize> = unflatten(flat, size, self.arity).into_iter().map(|i| indices[i]).collect();
                self.entry(&idx).clone()
            })
            .collect();
        MultiLinearForm { arity: self.arity, grade: self.grade, size, data, symmetry: self.symmetry }
    }

    /// Entries as a flat vector, used to place forms in a [`Subspace`].
    pub fn to_vector(&self) -> Vec<Scalar> {
        self.data.clone()
    }
}

fn unflatten_mixed(mut flat: usize, shape: &[usize]) -> Vec<usize> {
    let mut idx = vec![0; shape.len()];
    for (slot, &s) in idx.iter_mut().zip(shape).rev() {
        *slot = flat % s;
        flat /= s;
    }
    idx
}

fn flatten_mixed(idx: &[usize], shape: &[usize]) -> usize {
    idx.iter().zip(shape).fold(0, |acc, (&i, &s)| acc * s + i)
}

/// Matrices of `Λ^m ad_{e_i}` for every basis element, in the canonical basis of `Λ^m g`.
pub fn exterior_action(alg: &LieAlgebra, m: usize) -> Result<Vec<Matrix>> {
    (0..alg.dim()).map(|i| ad_on_exterior(alg, i, m).map(|e| e.into_matrix())).collect()
}

/// True when `b(ρ x1, …, xk) + … + b(x1, …, ρ xk) = 0` for every action matrix `ρ`.
pub fn is_invariant_under(actions: &[Matrix], b: &MultiLinearForm) -> bool {
    let n = b.size;
    let k = b.arity;
    for rho in actions {
        assert_eq!(rho.rows(), n, "action matrix does not match the form");
        for flat in 0..n.pow(k as u32) {
            let idx = unflatten(flat, n, k);
            let mut acc = zero();
            for r in 0..k {
                for y in 0..n {
                    let c = rho.get(y, idx[r]);
                    if c.is_zero() {
                        continue;
                    }
                    let mut moved = idx.clone();
                    moved[r] = y;
                    let v = &b.data[flatten(&moved, n)];
                    if !v.is_zero() {
                        acc += c * v;
                    }
                }
            }
            if !acc.is_zero() {
                return false;
            }
        }
    }
    true
}

/// True when `b` is invariant under the adjoint action on `Λ^m g`, with `m = b.grade()`.
pub fn is_invariant(alg: &LieAlgebra, b: &MultiLinearForm) -> Result<bool> {
    if b.size != binomial(alg.dim(), b.grade) {
        return Err(Error::ArityGradeMismatch(format!(
            "form of size {} does not live on grade {} of a {}-dimensional algebra",
            b.size,
            b.grade,
            alg.dim()
        )));
    }
    Ok(is_invariant_under(&exterior_action(alg, b.grade)?, b))
}

/// Solution space of the invariance equations for `k`-linear forms on `Λ^m g`.
pub fn invariant_forms(alg: &LieAlgebra, m: usize, k: usize, symmetry: Symmetry) -> Result<Subspace> {
    invariant_forms_with(alg, m, k, symmetry, &Limits::default())
}

/// [`invariant_forms`] with explicit size limits.
pub fn invariant_forms_with(
    alg: &LieAlgebra,
    m: usize,
    k: usize,
    symmetry: Symmetry,
    limits: &Limits,
) -> Result<Subspace> {
    if m > alg.dim() {
        return Err(Error::GradeOutOfRange { grade: m, dim: alg.dim() });
    }
    let actions = exterior_action(alg, m)?;
    let size = binomial(alg.dim(), m);
    invariant_forms_for_action(&actions, size, m, k, symmetry, limits)
}

/// Solution space of the invariance equations for an arbitrary family of action matrices.
pub fn invariant_forms_for_action(
    actions: &[Matrix],
    size: usize,
    grade: usize,
    k: usize,
    symmetry: Symmetry,
    limits: &Limits,
) -> Result<Subspace> {
    let unknowns = size.checked_pow(k as u32).unwrap_or(usize::MAX);
    if unknowns > limits.max_form_entries {
        return Err(Error::BoundExceeded {
            what: "form tensor entries".into(),
            required: unknowns,
            limit: limits.max_form_entries,
        });
    }
    let mut r = RowReducer::new(unknowns);
    for rho in actions {
        for flat in 0..unknowns {
            let idx = unflatten(flat, size, k);
            let mut eq: BTreeMap<usize, Scalar> = BTreeMap::new();
            for slot in 0..k {
                for y in 0..size {
                    let c = rho.get(y, idx[slot]);
                    if c.is_zero() {
                        continue;
                    }
                    let mut moved = idx.clone();
                    moved[slot] = y;
                    *eq.entry(flatten(&moved, size)).or_insert_with(zero) += c;
                }
            }
            eq.retain(|_, c| !c.is_zero());
            if !eq.is_empty() {
                r.push(eq);
            }
        }
    }
    if symmetry != Symmetry::None {
        for flat in 0..unknowns {
            let idx = unflatten(flat, size, k);
            for slot in 0..k.saturating_sub(1) {
                let mut swapped = idx.clone();
                swapped.swap(slot, slot + 1);
                let other = flatten(&swapped, size);
                let mut eq: BTreeMap<usize, Scalar> = BTreeMap::new();
                *eq.entry(flat).or_insert_with(zero) += one();
                let c = if symmetry == Symmetry::Symmetric { -one() } else { one() };
                *eq.entry(other).or_insert_with(zero) += c;
                eq.retain(|_, c| !c.is_zero());
                if !eq.is_empty() {
                    r.push(eq);
                }
            }
        }
    }
    Ok(Subspace::span(Ambient::Forms { grade, arity: k }, unknowns, &r.kernel()))
}

/// Turns the basis of a form solution space back into forms.
pub fn forms_of(space: &Subspace, size: usize, grade: usize, arity: usize) -> Result<Vec<MultiLinearForm>> {
    space.basis().iter().map(|v| MultiLinearForm::detect(arity, grade, size, v.clone())).collect()
}

/// Extension of a form on `g` to `Λ^m g`.
///
/// Bilinear forms use the determinant `det[b(v_{J(i)}, v_{K(j)})]`; higher
/// arities use the signed sum over `k` permutations of the grade.
pub fn extend_form(b: &MultiLinearForm, m: usize) -> Result<MultiLinearForm> {
    extend_form_with(b, m, &Limits::default())
}

/// [`extend_form`] with explicit size limits.
pub fn extend_form_with(b: &MultiLinearForm, m: usize, limits: &Limits) -> Result<MultiLinearForm> {
    if b.arity == 2 {
        extend_form_determinant(b, m)
    } else {
        extend_form_permutation_sum(b, m, limits)
    }
}

fn check_extendable(b: &MultiLinearForm, m: usize) -> Result<ExteriorBasis> {
    if b.grade != 1 {
        return Err(Error::ArityGradeMismatch(format!("only forms on g extend, got a form on grade {}", b.grade)));
    }
    if b.arity == 0 {
        return Err(Error::ArityGradeMismatch("forms of arity 0 do not extend".into()));
    }
    if m > b.size {
        return Err(Error::GradeOutOfRange { grade: m, dim: b.size });
    }
    Ok(ExteriorBasis::new(b.size, m))
}

/// Extension of a bilinear form through Gram determinants.
pub fn extend_form_determinant(b: &MultiLinearForm, m: usize) -> Result<MultiLinearForm> {
    if b.arity != 2 {
        return Err(Error::ArityMismatch { expected: 2, found: b.arity });
    }
    let basis = check_extendable(b, m)?;
    let size = basis.len();
    let mut data = Vec::with_capacity(size * size);
    for j in basis.tuples() {
        for k in basis.tuples() {
            if m == 0 {
                data.push(one());
                continue;
            }
            let gram =
                Matrix::from_rows(j.iter().map(|&a| k.iter().map(|&c| b.entry(&[a, c]).clone()).collect()).collect());
            data.push(gram.determinant());
        }
    }
    MultiLinearForm::detect(2, m, size, data)
}

/// Extension of a form of any arity through the signed permutation sum
/// `(1/m!) Σ_{σ1,…,σk} sg(σ1⋯σk) Π_r b(v_{J1(σ1(r))}, …, v_{Jk(σk(r))})`.
pub fn extend_form_permutation_sum(b: &MultiLinearForm, m: usize, limits: &Limits) -> Result<MultiLinearForm> {
    let basis = check_extendable(b, m)?;
    let k = b.arity;
    let size = basis.len();
    let entries = size.pow(k as u32);
    let perms = permutations(m);
    let terms = entries.saturating_mul(perms.len().saturating_pow(k as u32));
    if terms > limits.max_extension_terms {
        return Err(Error::BoundExceeded {
            what: "extension terms".into(),
            required: terms,
            limit: limits.max_extension_terms,
        });
    }
    let norm = one() / factorial(m);
    let mut data = Vec::with_capacity(entries);
    for flat in 0..entries {
        if m == 0 {
            data.push(one());
            continue;
        }
        let tuples: Vec<&[usize]> = unflatten(flat, size, k).into_iter().map(|i| basis.tuple(i)).collect();
        let mut acc = zero();
        let mut choice = vec![0usize; k];
        'outer: loop {
            let odd = choice.iter().filter(|&&c| perms[c].1).count() % 2 == 1;
            let mut prod = one();
            for r in 0..m {
                let args: Vec<usize> = (0..k).map(|s| tuples[s][perms[choice[s]].0[r]]).collect();
                let v = b.entry(&args);
                if v.is_zero() {
                    prod = zero();
                    break;
                }
                prod *= v;
            }
            if !prod.is_zero() {
                if odd {
                    acc -= prod;
                } else {
                    acc += prod;
                }
            }
            for slot in (0..k).rev() {
                choice[slot] += 1;
                if choice[slot] < perms.len() {
                    continue 'outer;
                }
                choice[slot] = 0;
            }
            break;
        }
        data.push(acc * &norm);
    }
    MultiLinearForm::detect(k, m, size, data)
}

/// Pairing of two multivectors through the extensions of a bilinear form on `g`.
///
/// Components of different grades are orthogonal; grade `m` components are
/// paired by the grade-`m` extension.
pub fn extended_pairing(b: &MultiLinearForm, x: &MultiVector, y: &MultiVector) -> Result<Scalar> {
    if b.arity != 2 || b.grade != 1 {
        return Err(Error::ArityGradeMismatch("pairing needs a bilinear form on g".into()));
    }
    let mut acc = zero();
    for m in x.grades().intersection(&y.grades()) {
        let ext = extend_form(b, *m)?;
        let xs = x.component(*m).coords(*m)?;
        let ys = y.component(*m).coords(*m)?;
        acc += ext.evaluate(&[&xs, &ys])?;
    }
    Ok(acc)
}

/// Form induced by a symmetric tensor on the dual through the Killing map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CasimirForm {
    /// `b(v1, …, vk) = C(κ̃ v1, …, κ̃ vk)`.
    pub form: MultiLinearForm,
    /// True when `b` satisfies the invariance equations.
    pub invariant: bool,
}

/// Builds `b(v1, …, vk) = C(κ̃ v1, …, κ̃ vk)` with `κ̃ v = κ(v, ·)`.
pub fn casimir_induced_form(alg: &LieAlgebra, c: &MultiLinearForm) -> Result<CasimirForm> {
    if c.grade != 1 || c.size != alg.dim() {
        return Err(Error::ArityGradeMismatch("the tensor must live on the dual of g".into()));
    }
    if !c.has_symmetry(Symmetry::Symmetric) {
        return Err(Error::SymmetryViolation(Symmetry::Symmetric.to_string()));
    }
    let kappa = killing_form(alg).to_matrix()?;
    let form = c.pullback(&kappa)?;
    let invariant = is_invariant(alg, &form)?;
    Ok(CasimirForm { form, invariant })
}

/// The inverse of the Killing matrix as a bilinear tensor on the dual, when it exists.
pub fn inverse_killing(alg: &LieAlgebra) -> Option<MultiLinearForm> {
    let inv = killing_form(alg).to_matrix().ok()?.inverse()?;
    MultiLinearForm::from_matrix(1, &inv, Symmetry::Symmetric).ok()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    fn diag(values: &[i64]) -> MultiLinearForm {
        let n = values.len();
        let mut m = Matrix::zeros(n, n);
        for (i, &v) in values.iter().enumerate() {
            m.set(i, i, int(v));
        }
        MultiLinearForm::from_matrix(1, &m, Symmetry::Symmetric).unwrap()
    }

    #[test]
    fn symmetry_is_checked_on_construction() {
        let data = vec![int(0), int(1), int(2), int(0)];
        assert!(MultiLinearForm::new(2, 1, 2, data.clone(), Symmetry::Symmetric).is_err());
        assert_eq!(MultiLinearForm::detect(2, 1, 2, data).unwrap().symmetry(), Symmetry::None);
    }

    #[test]
    fn grade_zero_extension_is_one() {
        let e = extend_form(&diag(&[1, 2]), 0).unwrap();
        assert_eq!(e.data(), &[int(1)]);
    }

    #[test]
    fn diagonal_forms_extend_diagonally() {
        let e = extend_form(&diag(&[2, 3, 5]), 2).unwrap();
        let m = e.to_matrix().unwrap();
        assert_eq!(m.get(0, 0), &int(6));
        assert_eq!(m.get(1, 1), &int(10));
        assert_eq!(m.get(2, 2), &int(15));
        assert!(m.get(0, 1).is_zero());
    }

    #[test]
    fn determinant_matches_sum_for_small_case() {
        let m = Matrix::from_rows(vec![
            vec![int(1), int(2), int(0)],
            vec![int(2), int(-1), int(3)],
            vec![int(0), int(3), int(4)],
        ]);
        let b = MultiLinearForm::from_matrix(1, &m, Symmetry::Symmetric).unwrap();
        for g in 0..=3 {
            let d = extend_form_determinant(&b, g).unwrap();
            let s = extend_form_permutation_sum(&b, g, &Limits::default()).unwrap();
            assert_eq!(d, s);
        }
    }

    #[test]
    fn pullback_by_identity_is_noop() {
        let b = diag(&[1, -1]);
        assert_eq!(b.pullback(&Matrix::identity(2)).unwrap(), b);
    }
}
