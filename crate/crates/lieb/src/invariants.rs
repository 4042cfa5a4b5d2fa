//! Invariant multivectors, reduced spaces and the ideal/invariant correspondence.
//!
//! The invariant space `(Λ^m g)^g` is the common kernel of the operators
//! `w ↦ [e_i, w]_S`. The reduced space `Λ^m_R g` is the quotient of `Λ^m g`
//! by it, represented on the canonical basis vectors that are not pivots of
//! the echelon basis of the invariant space.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::algebra::{ideal_report, structure_report, unflatten, LieAlgebra};
use crate::combinatorics::binomial;
use crate::error::{Error, Result};
use crate::exterior::{ad_on_exterior, annihilator_span, schouten, wedge, MultiVector};
use crate::forms::{invariant_forms_for_action, MultiLinearForm, Symmetry};
use crate::linalg::{unit, Ambient, Matrix, RowReducer, Subspace};
use crate::scalar::{zero, Scalar};
use crate::Limits;

/// `(Λ^m g)^g` as an echelon subspace of `Λ^m g`.
pub fn invariant_subspace(alg: &LieAlgebra, m: usize) -> Result<Subspace> {
    let size = binomial(alg.dim(), m);
    if m > alg.dim() {
        return Err(Error::GradeOutOfRange { grade: m, dim: alg.dim() });
    }
    let mut r = RowReducer::new(size);
    for i in 0..alg.dim() {
        let a = ad_on_exterior(alg, i, m)?.into_matrix();
        for row in 0..size {
            r.push_dense(a.row(row));
        }
    }
    Ok(Subspace::span(Ambient::Exterior { grade: m }, size, &r.kernel()))
}

/// True when `[e_i, w]_S = 0` for every basis vector.
pub fn is_invariant(alg: &LieAlgebra, w: &MultiVector) -> Result<bool> {
    for i in 0..alg.dim() {
        if !schouten(alg, &MultiVector::blade(alg.dim(), &[i])?, w)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Span of all wedges `a1 ∧ … ∧ ak` with `ai` taken from the i-th subspace of `g`.
pub fn wedge_span(n: usize, factors: &[&Subspace]) -> Result<Subspace> {
    let grade = factors.len();
    let mut products = vec![MultiVector::scalar(n, crate::scalar::one())];
    for f in factors {
        if f.ambient() != Ambient::Algebra || f.ambient_dim() != n {
            return Err(Error::NotASubspaceOfG);
        }
        let vectors: Vec<MultiVector> = f.basis().iter().map(|v| MultiVector::vector(v)).collect();
        let mut next = Vec::new();
        for p in &products {
            for v in &vectors {
                let w = wedge(p, v)?;
                if !w.is_zero() {
                    next.push(w);
                }
            }
        }
        products = next;
    }
    let size = binomial(n, grade);
    let mut r = RowReducer::new(size);
    for w in &products {
        r.push_dense(&w.coords(grade)?);
    }
    Ok(Subspace::from_reducer(Ambient::Exterior { grade }, &r))
}

/// The quotient `Λ^m_R g = Λ^m g / (Λ^m g)^g` with its representatives.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedSpace {
    n: usize,
    grade: usize,
    invariant: Subspace,
    complement: Vec<usize>,
}

impl ReducedSpace {
    /// Builds the reduced space of grade `m`.
    pub fn new(alg: &LieAlgebra, m: usize) -> Result<Self> {
        let invariant = invariant_subspace(alg, m)?;
        let complement = invariant.non_pivots();
        Ok(ReducedSpace { n: alg.dim(), grade: m, invariant, complement })
    }

    /// Grade `m`.
    pub fn grade(&self) -> usize {
        self.grade
    }

    /// Dimension of the algebra.
    pub fn algebra_dim(&self) -> usize {
        self.n
    }

    /// The invariant subspace being divided out.
    pub fn invariant(&self) -> &Subspace {
        &self.invariant
    }

    /// Positions of the canonical basis vectors representing the quotient basis.
    pub fn complement(&self) -> &[usize] {
        &self.complement
    }

    /// Dimension of the quotient.
    pub fn dim(&self) -> usize {
        self.complement.len()
    }

    /// Class coordinates of an element of `Λ^m g` given by its coordinates.
    pub fn project(&self, coords: &[Scalar]) -> Vec<Scalar> {
        let residue = self.invariant.residue(coords);
        self.complement.iter().map(|&i| residue[i].clone()).collect()
    }

    /// Class of a multivector of grade `m`.
    pub fn project_multivector(&self, w: &MultiVector) -> Result<Vec<Scalar>> {
        if w.dim() != self.n {
            return Err(Error::AlgebraMismatch { left: self.n, right: w.dim() });
        }
        Ok(self.project(&w.coords(self.grade)?))
    }

    /// Representative of a class: its coordinates placed on the complement basis vectors.
    pub fn lift(&self, class: &[Scalar]) -> Vec<Scalar> {
        let mut v = vec![zero(); self.invariant.ambient_dim()];
        for (&i, c) in self.complement.iter().zip(class) {
            v[i] = c.clone();
        }
        v
    }

    /// Representative as a multivector.
    pub fn lift_multivector(&self, class: &[Scalar]) -> MultiVector {
        MultiVector::from_coords(self.n, self.grade, &self.lift(class)).expect("sizes agree")
    }

    /// Matrix of the projection `Λ^m g → Λ^m_R g`.
    pub fn projection_matrix(&self) -> Matrix {
        let size = self.invariant.ambient_dim();
        let columns: Vec<Vec<Scalar>> = (0..size).map(|j| self.project(&unit(size, j))).collect();
        Matrix::from_columns(self.dim(), &columns)
    }

    /// Matrix of the lift `Λ^m_R g → Λ^m g`.
    pub fn lift_matrix(&self) -> Matrix {
        let columns: Vec<Vec<Scalar>> = (0..self.dim()).map(|j| self.lift(&unit(self.dim(), j))).collect();
        Matrix::from_columns(self.invariant.ambient_dim(), &columns)
    }

    /// Matrices of the induced action of each basis vector on the quotient.
    pub fn actions(&self, alg: &LieAlgebra) -> Result<Vec<Matrix>> {
        let p = self.projection_matrix();
        let l = self.lift_matrix();
        (0..alg.dim()).map(|i| Ok(p.mul(&ad_on_exterior(alg, i, self.grade)?.into_matrix()).mul(&l))).collect()
    }
}

/// Builds the [`ReducedSpace`] of grade `m`.
pub fn reduced_space(alg: &LieAlgebra, m: usize) -> Result<ReducedSpace> {
    ReducedSpace::new(alg, m)
}

/// Reduced spaces of every grade, for brackets that change grade.
#[derive(Clone, Debug)]
pub struct ReducedGrassmann {
    spaces: Vec<ReducedSpace>,
}

impl ReducedGrassmann {
    /// Reduced spaces of grades `0..=n`.
    pub fn new(alg: &LieAlgebra) -> Result<Self> {
        Ok(ReducedGrassmann { spaces: (0..=alg.dim()).map(|m| ReducedSpace::new(alg, m)).collect::<Result<_>>()? })
    }

    /// Reduced space of grade `m`.
    pub fn space(&self, m: usize) -> &ReducedSpace {
        &self.spaces[m]
    }

    /// `[[a], [b]]_R`: lift, bracket and project.
    pub fn bracket(&self, alg: &LieAlgebra, p: usize, a: &[Scalar], q: usize, b: &[Scalar]) -> Result<Vec<Scalar>> {
        reduced_schouten_into(alg, &self.spaces[p], &self.spaces[q], self.spaces.get(p + q - 1), a, b)
    }
}

fn reduced_schouten_into(
    alg: &LieAlgebra,
    rp: &ReducedSpace,
    rq: &ReducedSpace,
    out: Option<&ReducedSpace>,
    a: &[Scalar],
    b: &[Scalar],
) -> Result<Vec<Scalar>> {
    if rp.n != alg.dim() || rq.n != alg.dim() {
        return Err(Error::AlgebraMismatch { left: rp.n, right: rq.n });
    }
    if a.len() != rp.dim() || b.len() != rq.dim() {
        return Err(Error::DimensionMismatch("class coordinates do not match the reduced spaces".into()));
    }
    let grade = (rp.grade + rq.grade).checked_sub(1).ok_or(Error::GradeOutOfRange { grade: 0, dim: alg.dim() })?;
    let Some(out) = out else {
        return Err(Error::GradeOutOfRange { grade, dim: alg.dim() });
    };
    let s = schouten(alg, &rp.lift_multivector(a), &rq.lift_multivector(b))?;
    if rp.grade == 0 || rq.grade == 0 {
        return Ok(vec![zero(); out.dim()]);
    }
    out.project_multivector(&s)
}

/// The reduced Schouten bracket `[[w_p], [w_q]]_R = [[w_p, w_q]_S]`.
pub fn reduced_schouten(
    alg: &LieAlgebra,
    rp: &ReducedSpace,
    rq: &ReducedSpace,
    a: &[Scalar],
    b: &[Scalar],
) -> Result<Vec<Scalar>> {
    let grade = rp.grade + rq.grade;
    if grade == 0 || grade - 1 > alg.dim() {
        return Err(Error::GradeOutOfRange { grade: grade.saturating_sub(1), dim: alg.dim() });
    }
    let out = ReducedSpace::new(alg, grade - 1)?;
    reduced_schouten_into(alg, rp, rq, Some(&out), a, b)
}

/// Contraction of slot `slot` of `b` with the vector `v`.
fn contract(b: &MultiLinearForm, slot: usize, v: &[Scalar]) -> Vec<Scalar> {
    let size = b.size();
    let k = b.arity();
    let mut out = vec![zero(); size.pow(k as u32 - 1)];
    for (flat, value) in b.data().iter().enumerate() {
        if value.is_zero() {
            continue;
        }
        let mut idx = unflatten(flat, size, k);
        let i = idx.remove(slot);
        if v[i].is_zero() {
            continue;
        }
        let target = idx.iter().fold(0, |acc, &j| acc * size + j);
        out[target] += value * &v[i];
    }
    out
}

/// Form induced on the quotient by a form whose kernel contains the invariant space.
pub fn reduced_form(r: &ReducedSpace, b: &MultiLinearForm) -> Result<MultiLinearForm> {
    if b.grade() != r.grade || b.size() != r.invariant.ambient_dim() {
        return Err(Error::ArityGradeMismatch("form and reduced space have different grades".into()));
    }
    for u in r.invariant.basis() {
        for slot in 0..b.arity() {
            if contract(b, slot, u).iter().any(|c| !c.is_zero()) {
                return Err(Error::KernelConditionFailed);
            }
        }
    }
    Ok(b.restrict(&r.complement))
}

/// Invariant `k`-linear forms on the quotient, for the induced action.
pub fn reduced_invariant_forms(alg: &LieAlgebra, r: &ReducedSpace, k: usize, symmetry: Symmetry) -> Result<Subspace> {
    invariant_forms_for_action(&r.actions(alg)?, r.dim(), r.grade, k, symmetry, &Limits::default())
}

/// Ideal and multivector related by the ideal/invariant correspondence, with its certificate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bridge {
    /// The ideal `h`.
    pub ideal: Subspace,
    /// The top wedge of the echelon basis of `h`.
    pub omega: MultiVector,
    /// `Tr(ad_{e_i}|_h)` for each basis vector; all zero.
    pub restricted_traces: Vec<Scalar>,
    /// `[e_i, Ω]_S = 0` for every basis vector.
    pub omega_invariant: bool,
}

/// Sends a traceless ideal to the invariant top wedge of its echelon basis.
pub fn ideal_to_invariant(alg: &LieAlgebra, h: &Subspace) -> Result<Bridge> {
    let report = ideal_report(alg, h)?;
    if !report.is_traceless_ideal {
        return Err(Error::NotTracelessIdeal);
    }
    let mut omega = MultiVector::scalar(alg.dim(), crate::scalar::one());
    for v in h.basis() {
        omega = wedge(&omega, &MultiVector::vector(v))?;
    }
    let omega_invariant = is_invariant(alg, &omega)?;
    if !omega_invariant {
        return Err(Error::NotInvariant);
    }
    Ok(Bridge {
        ideal: h.clone(),
        omega,
        restricted_traces: report.restricted_traces.unwrap_or_default(),
        omega_invariant,
    })
}

/// Sends a decomposable invariant multivector to the ideal it spans.
pub fn invariant_to_ideal(alg: &LieAlgebra, w: &MultiVector) -> Result<Bridge> {
    if w.dim() != alg.dim() {
        return Err(Error::AlgebraMismatch { left: alg.dim(), right: w.dim() });
    }
    if w.is_zero() {
        return Err(Error::ZeroInput);
    }
    if !is_invariant(alg, w)? {
        return Err(Error::NotInvariant);
    }
    let span = annihilator_span(w)?;
    if !span.decomposable {
        return Err(Error::NotDecomposable);
    }
    let report = ideal_report(alg, &span.span)?;
    if !report.is_traceless_ideal {
        return Err(Error::NotTracelessIdeal);
    }
    Ok(Bridge {
        ideal: span.span,
        omega: w.clone(),
        restricted_traces: report.restricted_traces.unwrap_or_default(),
        omega_invariant: true,
    })
}

/// A guaranteed subspace of invariants of a nilpotent algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NilpotentGenerator {
    /// Grade of the invariants.
    pub grade: usize,
    /// Which construction produced the subspace.
    pub rule: String,
    /// The subspace itself.
    pub space: Subspace,
    /// True when the subspace lies in the computed invariant space.
    pub verified: bool,
}

/// Output of [`nilpotent_invariant_generators`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NilpotentReport {
    /// Smallest `p` with `g_{p)} = 0`.
    pub nilpotency_index: usize,
    /// Constructions whose hypotheses hold.
    pub generators: Vec<NilpotentGenerator>,
    /// Constructions whose hypotheses fail or refer to undefined terms of the series.
    pub skipped: Vec<String>,
}

/// Invariant bivectors and trivectors forced by the center and the lower central series.
///
/// With `p` the nilpotency index, `z` the center and `g_{s)}` the lower
/// central series: if `dim z = 1` then `z ∧ g_{p-2)}` is invariant; if
/// `dim z = 2` then `Λ²z ∧ g_{p-2)}` is; if `dim z = 1` and
/// `dim g_{p-2)} > 1` then `z ∧ Λ²g_{p-2)}` is; if `dim z = 1` and
/// `dim g_{p-2)} = 1` then `z ∧ g_{p-2)} ∧ g_{p-3)}` is.
pub fn nilpotent_invariant_generators(alg: &LieAlgebra) -> Result<NilpotentReport> {
    let report = structure_report(alg);
    let p = report.nilpotency_index().ok_or(Error::NotNilpotent)?;
    let n = alg.dim();
    let z = &report.center;
    let mut generators = Vec::new();
    let mut skipped = Vec::new();
    let mut invariants: BTreeMap<usize, Subspace> = BTreeMap::new();
    let mut emit = |grade: usize, rule: &str, space: Subspace| -> Result<()> {
        if grade > n {
            return Ok(());
        }
        if let std::collections::btree_map::Entry::Vacant(e) = invariants.entry(grade) {
            e.insert(invariant_subspace(alg, grade)?);
        }
        let verified = space.is_subspace_of(&invariants[&grade]);
        generators.push(NilpotentGenerator { grade, rule: rule.into(), space, verified });
        Ok(())
    };
    if p <= 1 {
        for grade in 2..=3.min(n) {
            emit(
                grade,
                "abelian: every multivector is invariant",
                Subspace::full(Ambient::Exterior { grade }, binomial(n, grade)),
            )?;
        }
        skipped.push("series terms g_{p-2)} and g_{p-3)} are undefined for an abelian algebra".into());
        return Ok(NilpotentReport { nilpotency_index: p, generators, skipped });
    }
    let g2 = &report.lower_central[p - 2];
    if z.dim() == 1 {
        emit(2, "dim z = 1: z ∧ g_{p-2)}", wedge_span(n, &[z, g2])?)?;
    } else {
        skipped.push(format!("z ∧ g_{{p-2)}} needs dim z = 1, found {}", z.dim()));
    }
    if z.dim() == 2 {
        emit(3, "dim z = 2: Λ²z ∧ g_{p-2)}", wedge_span(n, &[z, z, g2])?)?;
    } else {
        skipped.push(format!("Λ²z ∧ g_{{p-2)}} needs dim z = 2, found {}", z.dim()));
    }
    if z.dim() == 1 && g2.dim() > 1 {
        emit(3, "dim z = 1, dim g_{p-2)} > 1: z ∧ Λ²g_{p-2)}", wedge_span(n, &[z, g2, g2])?)?;
    } else {
        skipped.push(format!(
            "z ∧ Λ²g_{{p-2)}} needs dim z = 1 and dim g_{{p-2)}} > 1, found {} and {}",
            z.dim(),
            g2.dim()
        ));
    }
    if z.dim() == 1 && g2.dim() == 1 {
        if p >= 3 {
            let g3 = &report.lower_central[p - 3];
            emit(3, "dim z = 1, dim g_{p-2)} = 1: z ∧ g_{p-2)} ∧ g_{p-3)}", wedge_span(n, &[z, g2, g3])?)?;
        } else {
            skipped.push("z ∧ g_{p-2)} ∧ g_{p-3)} needs p ≥ 3 so that g_{p-3)} is defined".into());
        }
    } else {
        skipped.push(format!(
            "z ∧ g_{{p-2)}} ∧ g_{{p-3)}} needs dim z = 1 and dim g_{{p-2)}} = 1, found {} and {}",
            z.dim(),
            g2.dim()
        ));
    }
    Ok(NilpotentReport { nilpotency_index: p, generators, skipped })
}
