//! Lie algebras given by structure constants.
//!
//! A [`LieAlgebra`] stores `[e_i, e_j] = Σ_k c_{ij}^k e_k` for `i < j` only,
//! so antisymmetry holds by construction, and the Jacobi identity is checked
//! when the algebra is built. On top of it this module computes adjoint
//! maps, Killing and trace forms, the center and the structural series,
//! ideal predicates and the derivation algebra.

use std::collections::BTreeMap;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::combinatorics::permutations;
use crate::error::{Error, Result};
use crate::exterior::MultiVector;
use crate::forms::{MultiLinearForm, Symmetry};
use crate::io::{eval_scalar_expr, Symbols};
use crate::linalg::{is_zero_vec, unit, Ambient, Matrix, RowReducer, Subspace};
use crate::scalar::{format_scalar, zero, Scalar};
use crate::Limits;

/// Sparse vector of `g`: pairs `(basis index, coefficient)` with nonzero coefficients.
pub type SparseElement = Vec<(usize, Scalar)>;

/// Finite-dimensional Lie algebra with exact rational structure constants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebra {
    name: String,
    basis_names: Vec<String>,
    upper: BTreeMap<(usize, usize), SparseElement>,
    table: Vec<SparseElement>,
}

/// One declared bracket `[e_i, e_j] = Σ_k c_k e_k` with 0-based indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BracketEntry {
    /// Left basis index.
    pub i: usize,
    /// Right basis index.
    pub j: usize,
    /// Nonzero components of the bracket.
    pub result: SparseElement,
}

impl LieAlgebra {
    /// Builds and validates a Lie algebra.
    ///
    /// Entries with `i > j` are accepted and stored as `[e_j, e_i] = -result`.
    /// Fails on out-of-range indices, diagonal or duplicate entries, repeated
    /// basis names and Jacobi violations.
    pub fn new(name: impl Into<String>, basis_names: Vec<String>, entries: Vec<BracketEntry>) -> Result<Self> {
        let n = basis_names.len();
        for (a, x) in basis_names.iter().enumerate() {
            if x.is_empty() || basis_names[..a].contains(x) {
                return Err(Error::Parse(format!("basis name `{x}` is empty or repeated")));
            }
        }
        let mut upper: BTreeMap<(usize, usize), SparseElement> = BTreeMap::new();
        for entry in entries {
            let (i, j) = (entry.i, entry.j);
            for &idx in [i, j].iter().chain(entry.result.iter().map(|(k, _)| k)) {
                if idx >= n {
                    return Err(Error::DimensionMismatch(format!(
                        "basis index {} out of range for dimension {n}",
                        idx + 1
                    )));
                }
            }
            if i == j {
                return Err(Error::DiagonalBracketEntry { i: i + 1 });
            }
            let (lo, hi, flip) = if i < j { (i, j, false) } else { (j, i, true) };
            if upper.contains_key(&(lo, hi)) {
                return Err(Error::DuplicateBracketEntry { i: lo + 1, j: hi + 1 });
            }
            let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
            for (k, c) in entry.result {
                *acc.entry(k).or_insert_with(zero) += if flip { -c } else { c };
            }
            let result: SparseElement = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
            upper.insert((lo, hi), result);
        }
        let mut table = vec![Vec::new(); n * n];
        for (&(i, j), r) in &upper {
            table[i * n + j] = r.clone();
            table[j * n + i] = r.iter().map(|(k, c)| (*k, -c.clone())).collect();
        }
        let alg = LieAlgebra { name: name.into(), basis_names, upper, table };
        if let Some((i, j, k)) = alg.jacobi_failure() {
            return Err(Error::JacobiViolation { i: i + 1, j: j + 1, k: k + 1 });
        }
        Ok(alg)
    }

    /// The abelian algebra of dimension `n` with basis `e1, …, en`.
    pub fn abelian(n: usize) -> Self {
        let names = (1..=n).map(|i| format!("e{i}")).collect();
        LieAlgebra::new(format!("abelian{n}"), names, Vec::new()).expect("abelian algebras are valid")
    }

    /// Name of the algebra.
    pub fn name(&self) -> &str {
        &self.name
    }

    /// Dimension.
    pub fn dim(&self) -> usize {
        self.basis_names.len()
    }

    /// Names of the basis elements.
    pub fn basis_names(&self) -> &[String] {
        &self.basis_names
    }

    /// Declared brackets `[e_i, e_j]` with `i < j`, including zero ones that were declared.
    pub fn upper_brackets(&self) -> &BTreeMap<(usize, usize), SparseElement> {
        &self.upper
    }

    /// `[e_i, e_j]` as a sparse element.
    pub fn bracket_basis(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        &self.table[i * self.dim() + j]
    }

    /// Structure constant `c_{ij}^k`.
    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> Scalar {
        self.bracket_basis(i, j).iter().find(|(x, _)| *x == k).map(|(_, c)| c.clone()).unwrap_or_else(zero)
    }

    /// Bracket of two dense vectors.
    pub fn bracket(&self, u: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
        let n = self.dim();
        assert!(u.len() == n && v.len() == n, "vectors of wrong length");
        let mut out = vec![zero(); n];
        for (i, a) in u.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in v.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a * b;
                for (k, c) in self.bracket_basis(i, j) {
                    out[*k] += &ab * c;
                }
            }
        }
        out
    }

    /// True when every bracket vanishes.
    pub fn is_abelian(&self) -> bool {
        self.upper.values().all(Vec::is_empty)
    }

    fn jacobi_failure(&self) -> Option<(usize, usize, usize)> {
        let n = self.dim();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let mut total = vec![zero(); n];
                    for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
                        for (l, x) in self.bracket_basis(a, b) {
                            for (m, y) in self.bracket_basis(*l, c) {
                                total[*m] += x * y;
                            }
                        }
                    }
                    if !is_zero_vec(&total) {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }

    /// Matrix of `ad_{e_i}` with `M e_j = [e_i, e_j]`.
    pub fn ad_basis(&self, i: usize) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::zeros(n, n);
        for j in 0..n {
            for (k, c) in self.bracket_basis(i, j) {
                m.set(*k, j, c.clone());
            }
        }
        m
    }

    /// Matrix of `ad_v` for a dense vector `v`.
    pub fn ad(&self, v: &[Scalar]) -> Matrix {
        let n = self.dim();
        assert_eq!(v.len(), n, "vector of wrong length");
        let mut m = Matrix::zeros(n, n);
        for (i, a) in v.iter().enumerate() {
            if !a.is_zero() {
                m = m.add(&self.ad_basis(i).scale(a));
            }
        }
        m
    }

    /// Serializable description of the algebra.
    pub fn to_doc(&self) -> AlgebraDoc {
        AlgebraDoc {
            name: self.name.clone(),
            dim: self.dim(),
            basis: self.basis_names.clone(),
            brackets: self
                .upper
                .iter()
                .map(|(&(i, j), r)| BracketDoc {
                    i: i + 1,
                    j: j + 1,
                    result: r.iter().map(|(k, c)| ((k + 1).to_string(), CoefDoc::Text(format_scalar(c)))).collect(),
                })
                .collect(),
        }
    }
}

/// Matrix of a linear endomorphism of a grade-`m` exterior power in its canonical basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EndoMap {
    grade: usize,
    matrix: Matrix,
}

impl EndoMap {
    /// Wraps a square matrix acting on the grade-`m` exterior power.
    pub fn new(grade: usize, matrix: Matrix) -> Self {
        assert_eq!(matrix.rows(), matrix.cols(), "endomorphisms are square");
        EndoMap { grade, matrix }
    }

    /// Grade of the exterior power acted on.
    pub fn grade(&self) -> usize {
        self.grade
    }

    /// Matrix in the canonical basis.
    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    /// Consumes the map and returns its matrix.
    pub fn into_matrix(self) -> Matrix {
        self.matrix
    }
}

/// Adjoint map `ad_v` of a grade-1 multivector `v`.
pub fn adjoint(alg: &LieAlgebra, v: &MultiVector) -> Result<EndoMap> {
    if v.dim() != alg.dim() {
        return Err(Error::AlgebraMismatch { left: alg.dim(), right: v.dim() });
    }
    let coords = v.coords(1).map_err(|_| Error::GradeMismatch { expected: 1, found: describe_grades(v) })?;
    Ok(EndoMap::new(1, alg.ad(&coords)))
}

pub(crate) fn describe_grades(v: &MultiVector) -> String {
    let g: Vec<String> = v.grades().iter().map(ToString::to_string).collect();
    if g.is_empty() {
        "zero".into()
    } else {
        g.join("+")
    }
}

/// Killing form `κ(v, w) = Tr(ad_v ∘ ad_w)`.
pub fn killing_form(alg: &LieAlgebra) -> MultiLinearForm {
    let n = alg.dim();
    let ads: Vec<Matrix> = (0..n).map(|i| alg.ad_basis(i)).collect();
    let mut m = Matrix::zeros(n, n);
    for i in 0..n {
        for j in i..n {
            let t = ads[i].mul(&ads[j]).trace();
            m.set(i, j, t.clone());
            m.set(j, i, t);
        }
    }
    MultiLinearForm::from_matrix(1, &m, Symmetry::Symmetric).expect("Killing form is symmetric")
}

/// Fully (anti)symmetrized trace form `Σ_σ (sg σ) Tr(ad_{v_σ(1)} ∘ … ∘ ad_{v_σ(k)})`.
pub fn trace_form(alg: &LieAlgebra, k: usize, symmetry: Symmetry) -> Result<MultiLinearForm> {
    trace_form_with(alg, k, symmetry, &Limits::default())
}

/// [`trace_form`] with explicit size limits.
pub fn trace_form_with(alg: &LieAlgebra, k: usize, symmetry: Symmetry, limits: &Limits) -> Result<MultiLinearForm> {
    if k > limits.max_trace_arity {
        return Err(Error::BoundExceeded {
            what: "trace form arity".into(),
            required: k,
            limit: limits.max_trace_arity,
        });
    }
    if k < 2 {
        return Err(Error::ArityGradeMismatch(format!("trace forms need arity at least 2, got {k}")));
    }
    if symmetry == Symmetry::None {
        return Err(Error::ArityGradeMismatch("trace forms are symmetric or antisymmetric".into()));
    }
    let n = alg.dim();
    let entries = n.pow(k as u32);
    if entries > limits.max_form_entries {
        return Err(Error::BoundExceeded {
            what: "trace form entries".into(),
            required: entries,
            limit: limits.max_form_entries,
        });
    }
    let ads: Vec<Matrix> = (0..n).map(|i| alg.ad_basis(i)).collect();
    let mut raw = vec![zero(); entries];
    for (flat, slot) in raw.iter_mut().enumerate() {
        let idx = unflatten(flat, n, k);
        let mut p = ads[idx[0]].clone();
        for &i in &idx[1..] {
            p = p.mul(&ads[i]);
        }
        *slot = p.trace();
    }
    let perms = permutations(k);
    let mut data = vec![zero(); entries];
    for (flat, slot) in data.iter_mut().enumerate() {
        let idx = unflatten(flat, n, k);
        let mut acc = zero();
        for (p, odd) in &perms {
            let permuted: Vec<usize> = p.iter().map(|&s| idx[s]).collect();
            let v = &raw[flatten(&permuted, n)];
            if symmetry == Symmetry::Antisymmetric && *odd {
                acc -= v;
            } else {
                acc += v;
            }
        }
        *slot = acc;
    }
    MultiLinearForm::new(k, 1, n, data, symmetry)
}

pub(crate) fn unflatten(mut flat: usize, base: usize, k: usize) -> Vec<usize> {
    let mut idx = vec![0; k];
    for slot in idx.iter_mut().rev() {
        *slot = flat % base;
        flat /= base;
    }
    idx
}

pub(crate) fn flatten(idx: &[usize], base: usize) -> usize {
    idx.iter().fold(0, |acc, &i| acc * base + i)
}

/// Center, lower central series, derived series and related flags.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureReport {
    /// `z(g) = {v : [v, g] = 0}`.
    pub center: Subspace,
    /// `g_{0)} = g, g_{s)} = [g, g_{s-1)}]`, listed until the first repetition.
    pub lower_central: Vec<Subspace>,
    /// `g^{0)} = g, g^{s)} = [g^{s-1)}, g^{s-1)}]`, listed until the first repetition.
    pub derived: Vec<Subspace>,
    /// True when the lower central series reaches zero.
    pub nilpotent: bool,
    /// True when the derived series reaches zero.
    pub solvable: bool,
    /// True when every `ad_v` is traceless.
    pub unimodular: bool,
}

impl StructureReport {
    /// Smallest `p` with `g_{p)} = 0`, when the algebra is nilpotent.
    pub fn nilpotency_index(&self) -> Option<usize> {
        self.lower_central.iter().position(|s| s.dim() == 0)
    }
}

/// Computes the [`StructureReport`] of an algebra.
pub fn structure_report(alg: &LieAlgebra) -> StructureReport {
    let n = alg.dim();
    let full = Subspace::full(Ambient::Algebra, n);
    let lower_central = series(full.clone(), |s| bracket_span(alg, &Subspace::full(Ambient::Algebra, n), s));
    let derived = series(full, |s| bracket_span(alg, s, s));
    let nilpotent = lower_central.last().is_some_and(|s| s.dim() == 0);
    let solvable = derived.last().is_some_and(|s| s.dim() == 0);
    let unimodular = (0..n).all(|i| alg.ad_basis(i).trace().is_zero());
    StructureReport { center: center(alg), lower_central, derived, nilpotent, solvable, unimodular }
}

fn series(start: Subspace, step: impl Fn(&Subspace) -> Subspace) -> Vec<Subspace> {
    let mut out = vec![start];
    loop {
        let next = step(out.last().expect("nonempty"));
        if out.contains(&next) {
            return out;
        }
        out.push(next);
    }
}

/// Span of `[a, b]` for `a` in `left` and `b` in `right`.
pub fn bracket_span(alg: &LieAlgebra, left: &Subspace, right: &Subspace) -> Subspace {
    let mut r = RowReducer::new(alg.dim());
    for a in left.basis() {
        for b in right.basis() {
            r.push_dense(&alg.bracket(a, b));
        }
    }
    Subspace::from_reducer(Ambient::Algebra, &r)
}

/// Center `z(g)`.
pub fn center(alg: &LieAlgebra) -> Subspace {
    let n = alg.dim();
    let mut r = RowReducer::new(n);
    for i in 0..n {
        let ad = alg.ad_basis(i);
        for row in 0..n {
            r.push_dense(ad.row(row));
        }
    }
    Subspace::span(Ambient::Algebra, n, &r.kernel())
}

/// Predicates on a subspace `h` of `g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealReport {
    /// `[h, h] ⊆ h`.
    pub is_subalgebra: bool,
    /// `[g, h] ⊆ h`.
    pub is_ideal: bool,
    /// Ideal whose restricted adjoint actions are all traceless.
    pub is_traceless_ideal: bool,
    /// `Tr(ad_{e_i}|_h)` for each basis element, available when `h` is an ideal.
    pub restricted_traces: Option<Vec<Scalar>>,
}

/// Computes the [`IdealReport`] of `h`.
pub fn ideal_report(alg: &LieAlgebra, h: &Subspace) -> Result<IdealReport> {
    let n = alg.dim();
    if h.ambient() != Ambient::Algebra || h.ambient_dim() != n {
        return Err(Error::NotASubspaceOfG);
    }
    let is_subalgebra = bracket_span(alg, h, h).is_subspace_of(h);
    let is_ideal = bracket_span(alg, &Subspace::full(Ambient::Algebra, n), h).is_subspace_of(h);
    let restricted_traces = is_ideal.then(|| (0..n).map(|i| restricted_trace(alg, i, h)).collect::<Vec<_>>());
    let is_traceless_ideal = restricted_traces.as_ref().is_some_and(|t| t.iter().all(Zero::is_zero));
    Ok(IdealReport { is_subalgebra, is_ideal, is_traceless_ideal, restricted_traces })
}

/// `Tr(ad_{e_i}|_h)` for an `ad`-invariant subspace `h`, read off the echelon basis coordinates.
fn restricted_trace(alg: &LieAlgebra, i: usize, h: &Subspace) -> Scalar {
    let e = unit(alg.dim(), i);
    let mut acc = zero();
    for (r, b) in h.basis().iter().enumerate() {
        let image = alg.bracket(&e, b);
        let coords = h.coordinates(&image).expect("h is invariant");
        acc += &coords[r];
    }
    acc
}

/// Derivations of `g` together with the inner derivations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivationAlgebra {
    /// `der(g)` as flattened row-major `n x n` matrices.
    pub der: Subspace,
    /// `span{ad_{e_i}}` as flattened row-major `n x n` matrices.
    pub inner: Subspace,
}

/// Solves `D[e_i, e_j] = [D e_i, e_j] + [e_i, D e_j]` for all basis pairs.
pub fn derivation_algebra(alg: &LieAlgebra) -> DerivationAlgebra {
    let n = alg.dim();
    let var = |row: usize, col: usize| row * n + col;
    let mut r = RowReducer::new(n * n);
    for i in 0..n {
        for j in i + 1..n {
            for k in 0..n {
                let mut eq: BTreeMap<usize, Scalar> = BTreeMap::new();
                for (l, c) in alg.bracket_basis(i, j) {
                    *eq.entry(var(k, *l)).or_insert_with(zero) += c;
                }
                for a in 0..n {
                    let c = alg.structure_constant(a, j, k);
                    if !c.is_zero() {
                        *eq.entry(var(a, i)).or_insert_with(zero) -= &c;
                    }
                    let c = alg.structure_constant(i, a, k);
                    if !c.is_zero() {
                        *eq.entry(var(a, j)).or_insert_with(zero) -= &c;
                    }
                }
                eq.retain(|_, c| !c.is_zero());
                r.push(eq);
            }
        }
    }
    let der = Subspace::span(Ambient::Endomorphisms, n * n, &r.kernel());
    let inner_vectors: Vec<Vec<Scalar>> = (0..n).map(|i| alg.ad_basis(i).entries().to_vec()).collect();
    let inner = Subspace::span(Ambient::Endomorphisms, n * n, &inner_vectors);
    DerivationAlgebra { der, inner }
}

/// True when `d` satisfies the derivation identity on every basis pair.
pub fn is_derivation(alg: &LieAlgebra, d: &Matrix) -> bool {
    let n = alg.dim();
    for i in 0..n {
        for j in i + 1..n {
            let (ei, ej) = (unit(n, i), unit(n, j));
            let lhs = d.mul_vec(&alg.bracket(&ei, &ej));
            let a = alg.bracket(&d.column(i), &ej);
            let b = alg.bracket(&ei, &d.column(j));
            if lhs.iter().zip(a.iter().zip(&b)).any(|(l, (x, y))| *l != x + y) {
                return false;
            }
        }
    }
    true
}

/// True when `t` is invertible and preserves every bracket.
pub fn is_automorphism(alg: &LieAlgebra, t: &Matrix) -> bool {
    let n = alg.dim();
    if t.rows() != n || t.cols() != n || t.determinant().is_zero() {
        return false;
    }
    for i in 0..n {
        for j in i + 1..n {
            let lhs = t.mul_vec(&alg.bracket(&unit(n, i), &unit(n, j)));
            let rhs = alg.bracket(&t.column(i), &t.column(j));
            if lhs != rhs {
                return false;
            }
        }
    }
    true
}

/// Coefficient as written in a document: an integer or a text expression such as `"3/2"`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CoefDoc {
    /// Plain integer.
    Int(i64),
    /// Rational or parameter expression.
    Text(String),
}

impl CoefDoc {
    /// Evaluates the coefficient, resolving parameter symbols.
    pub fn eval(&self, symbols: &Symbols) -> Result<Scalar> {
        match self {
            CoefDoc::Int(k) => Ok(crate::scalar::int(*k)),
            CoefDoc::Text(t) => eval_scalar_expr(t, symbols),
        }
    }
}

/// One bracket of an algebra document, with 1-based indices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BracketDoc {
    /// Left basis index.
    pub i: usize,
    /// Right basis index.
    pub j: usize,
    /// Components keyed by 1-based basis index.
    pub result: BTreeMap<String, CoefDoc>,
}

/// JSON description of a Lie algebra.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraDoc {
    /// Display name.
    pub name: String,
    /// Dimension.
    pub dim: usize,
    /// Basis names; `e1, …, en` when omitted.
    #[serde(default)]
    pub basis: Vec<String>,
    /// Nonzero brackets.
    #[serde(default)]
    pub brackets: Vec<BracketDoc>,
}

/// Validates an algebra document.
pub fn load_algebra(doc: &AlgebraDoc) -> Result<LieAlgebra> {
    load_algebra_with(doc, &Symbols::new())
}

/// Validates an algebra document whose coefficients may mention parameter symbols.
pub fn load_algebra_with(doc: &AlgebraDoc, symbols: &Symbols) -> Result<LieAlgebra> {
    let names = if doc.basis.is_empty() { (1..=doc.dim).map(|i| format!("e{i}")).collect() } else { doc.basis.clone() };
    if names.len() != doc.dim {
        return Err(Error::DimensionMismatch(format!(
            "document declares dimension {} but lists {} basis names",
            doc.dim,
            names.len()
        )));
    }
    let index = |i: usize| -> Result<usize> {
        if i == 0 || i > doc.dim {
            Err(Error::DimensionMismatch(format!("basis index {i} out of range for dimension {}", doc.dim)))
        } else {
            Ok(i - 1)
        }
    };
    let mut entries = Vec::with_capacity(doc.brackets.len());
    for b in &doc.brackets {
        let mut result = Vec::new();
        for (k, c) in &b.result {
            let k: usize = k.trim().parse().map_err(|_| Error::Parse(format!("`{k}` is not a basis index")))?;
            result.push((index(k)?, c.eval(symbols)?));
        }
        entries.push(BracketEntry { i: index(b.i)?, j: index(b.j)?, result });
    }
    LieAlgebra::new(doc.name.clone(), names, entries)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    fn entry(i: usize, j: usize, result: &[(usize, i64)]) -> BracketEntry {
        BracketEntry { i, j, result: result.iter().map(|&(k, c)| (k, int(c))).collect() }
    }

    fn names(n: usize) -> Vec<String> {
        (1..=n).map(|i| format!("e{i}")).collect()
    }

    fn sl2() -> LieAlgebra {
        LieAlgebra::new("sl2", names(3), vec![entry(0, 1, &[(1, 1)]), entry(0, 2, &[(2, -1)]), entry(2, 1, &[(0, -1)])])
            .unwrap()
    }

    #[test]
    fn reversed_entries_are_negated() {
        let g = sl2();
        assert_eq!(g.structure_constant(1, 2, 0), int(1));
        assert_eq!(g.structure_constant(2, 1, 0), int(-1));
    }

    #[test]
    fn jacobi_violation_is_reported() {
        let err = LieAlgebra::new("bad", names(3), vec![entry(0, 1, &[(2, 1)]), entry(0, 2, &[(0, 1)])]).unwrap_err();
        assert!(matches!(err, Error::JacobiViolation { i: 1, j: 2, k: 3 }));
    }

    #[test]
    fn duplicate_and_range_errors() {
        let dup = LieAlgebra::new("d", names(3), vec![entry(0, 1, &[(2, 1)]), entry(1, 0, &[(2, -1)])]);
        assert!(matches!(dup, Err(Error::DuplicateBracketEntry { i: 1, j: 2 })));
        let range = LieAlgebra::new("r", names(3), vec![entry(0, 3, &[(2, 1)])]);
        assert!(matches!(range, Err(Error::DimensionMismatch(_))));
    }

    #[test]
    fn adjoint_of_e1_on_sl2_is_diagonal() {
        let g = sl2();
        let ad = g.ad_basis(0);
        let expected = Matrix::from_rows(vec![
            vec![int(0), int(0), int(0)],
            vec![int(0), int(1), int(0)],
            vec![int(0), int(0), int(-1)],
        ]);
        assert_eq!(ad, expected);
    }

    #[test]
    fn killing_of_sl2() {
        let k = killing_form(&sl2());
        let expected = Matrix::from_rows(vec![
            vec![int(2), int(0), int(0)],
            vec![int(0), int(0), int(2)],
            vec![int(0), int(2), int(0)],
        ]);
        assert_eq!(k.to_matrix().unwrap(), expected);
    }

    #[test]
    fn flatten_round_trip() {
        for flat in 0..27 {
            assert_eq!(flatten(&unflatten(flat, 3, 3), 3), flat);
        }
    }
}
