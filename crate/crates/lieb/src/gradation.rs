//! Gradations of a Lie algebra by a finitely generated commutative group.
//!
//! Degrees are attached to basis vectors. A gradation induces a
//! decomposition of every exterior power into homogeneous spaces, where the
//! degree of `e_{i1} ∧ … ∧ e_{im}` is the sum of the degrees of its factors.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::algebra::{CoefDoc, LieAlgebra};
use crate::combinatorics::ExteriorBasis;
use crate::error::{Error, Result};
use crate::exterior::{schouten, MultiVector};
use crate::io::Symbols;
use crate::linalg::{unit, Ambient, Matrix, RowReducer, Subspace};
use crate::scalar::{format_scalar, int, is_integer, is_negative, zero, Scalar};

/// Element of the grading group, one rational per coordinate.
pub type Degree = Vec<Scalar>;

/// Renders a degree as `2` for rank one and `(1,-1)` otherwise.
pub fn format_degree(d: &[Scalar]) -> String {
    if d.len() == 1 {
        return format_scalar(&d[0]);
    }
    let parts: Vec<String> = d.iter().map(format_scalar).collect();
    format!("({})", parts.join(","))
}

/// A group `ℚ^a × ℤ_{q1} × …`, described coordinate by coordinate.
///
/// A modulus of 0 marks a free coordinate holding any rational; a modulus
/// `q > 0` marks a cyclic coordinate holding an integer in `0..q`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GroupDescriptor {
    moduli: Vec<u64>,
}

impl GroupDescriptor {
    /// Group with the given per-coordinate moduli.
    pub fn new(moduli: Vec<u64>) -> Self {
        GroupDescriptor { moduli }
    }

    /// The free group of rank `k`.
    pub fn free(k: usize) -> Self {
        GroupDescriptor { moduli: vec![0; k] }
    }

    /// Number of coordinates.
    pub fn rank(&self) -> usize {
        self.moduli.len()
    }

    /// Per-coordinate moduli.
    pub fn moduli(&self) -> &[u64] {
        &self.moduli
    }

    /// Number of free coordinates.
    pub fn free_rank(&self) -> usize {
        self.moduli.iter().filter(|&&q| q == 0).count()
    }

    /// The neutral element.
    pub fn identity(&self) -> Degree {
        vec![zero(); self.rank()]
    }

    /// Checks that `d` is a canonical group element.
    pub fn validate(&self, d: &[Scalar]) -> std::result::Result<(), String> {
        if d.len() != self.rank() {
            return Err(format!("expected {} coordinates, got {}", self.rank(), d.len()));
        }
        for (c, &q) in d.iter().zip(&self.moduli) {
            if q > 0 && (!is_integer(c) || is_negative(c) || *c >= int(q as i64)) {
                return Err(format!("{} is not an integer in 0..{q}", format_scalar(c)));
            }
        }
        Ok(())
    }

    /// Group operation.
    pub fn add(&self, a: &[Scalar], b: &[Scalar]) -> Degree {
        a.iter().zip(b).zip(&self.moduli).map(|((x, y), &q)| reduce(x + y, q)).collect()
    }

    /// `k`-fold sum of `a`.
    pub fn multiple(&self, a: &[Scalar], k: i64) -> Degree {
        a.iter().zip(&self.moduli).map(|(x, &q)| reduce(x * int(k), q)).collect()
    }

    /// Inverse element.
    pub fn negate(&self, a: &[Scalar]) -> Degree {
        self.multiple(a, -1)
    }
}

fn reduce(x: Scalar, q: u64) -> Scalar {
    if q == 0 {
        return x;
    }
    let q = int(q as i64);

    x.clone() - (x / &q).floor() * &q
}

/// A gradation: one group element per basis vector, closed under the bracket.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gradation {
    name: String,
    group: GroupDescriptor,
    degrees: Vec<Degree>,
}

impl Gradation {
    /// Validates the degrees against the group and the bracket of `alg`.
    pub fn new(
        alg: &LieAlgebra,
        name: impl Into<String>,
        group: GroupDescriptor,
        degrees: Vec<Degree>,
    ) -> Result<Self> {
        if degrees.len() != alg.dim() {
            return Err(Error::DimensionMismatch(format!(
                "{} degrees given for an algebra of dimension {}",
                degrees.len(),
                alg.dim()
            )));
        }
        for (i, d) in degrees.iter().enumerate() {
            group.validate(d).map_err(|reason| Error::ModulusViolation { basis: i + 1, reason })?;
        }
        for (&(i, j), result) in alg.upper_brackets() {
            let expected = group.add(&degrees[i], &degrees[j]);
            for (k, _) in result {
                if degrees[*k] != expected {
                    return Err(Error::ClosureViolation { i: i + 1, j: j + 1, component: k + 1 });
                }
            }
        }
        Ok(Gradation { name: name.into(), group, degrees })
    }

    /// Label of the gradation.
    pub fn name(&self) -> &str {
        &self.name
    }

    /// Grading group.
    pub fn group(&self) -> &GroupDescriptor {
        &self.group
    }

    /// Degree of every basis vector.
    pub fn degrees(&self) -> &[Degree] {
        &self.degrees
    }

    /// Degree of the blade with the given indices.
    pub fn degree_of(&self, tuple: &[usize]) -> Degree {
        tuple.iter().fold(self.group.identity(), |acc, &i| self.group.add(&acc, &self.degrees[i]))
    }

    /// Degree of a nonzero multivector whose terms all share one degree.
    pub fn homogeneous_degree(&self, w: &MultiVector) -> Option<Degree> {
        let mut degrees = w.terms().keys().map(|t| self.degree_of(t));
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    /// Basis indices of degree zero.
    pub fn zero_part(&self) -> Vec<usize> {
        let id = self.group.identity();
        (0..self.degrees.len()).filter(|&i| self.degrees[i] == id).collect()
    }

    /// Document form of the gradation.
    pub fn to_doc(&self) -> GradationDoc {
        GradationDoc {
            name: Some(self.name.clone()),
            group: GroupDoc { rank: self.group.rank(), moduli: Some(self.group.moduli.clone()) },
            degrees: self.degrees.iter().map(|d| d.iter().map(|c| CoefDoc::Text(format_scalar(c))).collect()).collect(),
            note: None,
        }
    }
}

/// Group part of a gradation document.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupDoc {
    /// Number of coordinates.
    pub rank: usize,
    /// Per-coordinate moduli; all free when omitted.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub moduli: Option<Vec<u64>>,
}

/// JSON description of a gradation, with degrees aligned to the basis order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradationDoc {
    /// Optional label.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    /// Grading group.
    pub group: GroupDoc,
    /// One degree per basis vector.
    pub degrees: Vec<Vec<CoefDoc>>,
    /// Free-form remark kept with catalog data.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

/// Validates a gradation document.
pub fn load_gradation(alg: &LieAlgebra, doc: &GradationDoc) -> Result<Gradation> {
    load_gradation_with(alg, doc, &Symbols::new())
}

/// Validates a gradation document whose degrees may mention parameter symbols.
pub fn load_gradation_with(alg: &LieAlgebra, doc: &GradationDoc, symbols: &Symbols) -> Result<Gradation> {
    let moduli = doc.group.moduli.clone().unwrap_or_else(|| vec![0; doc.group.rank]);
    if moduli.len() != doc.group.rank {
        return Err(Error::DimensionMismatch(format!(
            "group of rank {} lists {} moduli",
            doc.group.rank,
            moduli.len()
        )));
    }
    let mut degrees = Vec::with_capacity(doc.degrees.len());
    for d in &doc.degrees {
        degrees.push(d.iter().map(|c| c.eval(symbols)).collect::<Result<Degree>>()?);
    }
    Gradation::new(alg, doc.name.clone().unwrap_or_default(), GroupDescriptor::new(moduli), degrees)
}

/// Homogeneous spaces of one exterior power.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    grade: usize,
    dim: usize,
    members: BTreeMap<Degree, Vec<usize>>,
}

impl Decomposition {
    /// Grade of the exterior power.
    pub fn grade(&self) -> usize {
        self.grade
    }

    /// Degrees with a nonempty fiber, in increasing order.
    pub fn degrees(&self) -> Vec<&Degree> {
        self.members.keys().collect()
    }

    /// Positions in the canonical basis of grade `m` belonging to each degree.
    pub fn members(&self) -> &BTreeMap<Degree, Vec<usize>> {
        &self.members
    }

    /// Homogeneous space of degree `d`, zero when the fiber is empty.
    pub fn fiber(&self, d: &[Scalar]) -> Subspace {
        let size = self.members.values().map(Vec::len).sum();
        let vectors: Vec<Vec<Scalar>> =
            self.members.get(d).map(|ix| ix.iter().map(|&i| unit(size, i)).collect()).unwrap_or_default();
        Subspace::span(Ambient::Exterior { grade: self.grade }, size, &vectors)
    }

    /// Dimension of the fiber of degree `d`.
    pub fn fiber_dim(&self, d: &[Scalar]) -> usize {
        self.members.get(d).map_or(0, Vec::len)
    }

    /// Degree to dimension table.
    pub fn dims(&self) -> BTreeMap<Degree, usize> {
        self.members.iter().map(|(d, v)| (d.clone(), v.len())).collect()
    }

    /// Sum of the fiber dimensions.
    pub fn total_dim(&self) -> usize {
        self.members.values().map(Vec::len).sum()
    }

    /// Basis blades of the fiber of degree `d`.
    pub fn fiber_blades(&self, d: &[Scalar]) -> Vec<MultiVector> {
        let basis = ExteriorBasis::new(self.dim, self.grade);
        self.members
            .get(d)
            .map(|ix| {
                ix.iter().map(|&i| MultiVector::blade(self.dim, basis.tuple(i)).expect("canonical tuple")).collect()
            })
            .unwrap_or_default()
    }
}

/// Decomposes `Λ^m g` into homogeneous spaces.
pub fn induced_decomposition(alg: &LieAlgebra, g: &Gradation, m: usize) -> Result<Decomposition> {
    if m > alg.dim() {
        return Err(Error::GradeOutOfRange { grade: m, dim: alg.dim() });
    }
    let basis = ExteriorBasis::new(alg.dim(), m);
    let mut members: BTreeMap<Degree, Vec<usize>> = BTreeMap::new();
    for (i, t) in basis.tuples().iter().enumerate() {
        members.entry(g.degree_of(t)).or_default().push(i);
    }
    Ok(Decomposition { grade: m, dim: alg.dim(), members })
}

/// Outcome of the root-gradation test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootAnalysis {
    /// True when all conditions hold.
    pub is_root: bool,
    /// First condition that failed.
    pub reason: Option<String>,
    /// For each occurring nonzero degree, the eigenvalues of `ad_z` for the degree-zero basis vectors `z`.
    pub functionals: BTreeMap<Degree, Vec<Scalar>>,
}

impl RootAnalysis {
    fn fail(reason: impl Into<String>) -> Self {
        RootAnalysis { is_root: false, reason: Some(reason.into()), functionals: BTreeMap::new() }
    }
}

/// Decides whether `g` is a root gradation.
///
/// The degree-zero part must be abelian of dimension equal to the free rank,
/// every basis vector of nonzero degree must be a common eigenvector of the
/// degree-zero part, and the eigenvalue functional must come from an
/// injective group morphism evaluated on the occurring degrees.
pub fn root_analysis(alg: &LieAlgebra, g: &Gradation) -> RootAnalysis {
    let n = alg.dim();
    let zero_part = g.zero_part();
    let free: Vec<usize> = (0..g.group.rank()).filter(|&c| g.group.moduli[c] == 0).collect();
    if zero_part.len() != free.len() {
        return RootAnalysis::fail(format!(
            "degree-zero part has dimension {} but the group has free rank {}",
            zero_part.len(),
            free.len()
        ));
    }
    for (a, &z1) in zero_part.iter().enumerate() {
        for &z2 in &zero_part[a + 1..] {
            if !alg.bracket_basis(z1, z2).is_empty() {
                return RootAnalysis::fail("degree-zero part is not abelian");
            }
        }
    }
    let mut functionals: BTreeMap<Degree, Vec<Scalar>> = BTreeMap::new();
    for i in 0..n {
        if zero_part.contains(&i) {
            continue;
        }
        let mut eigen = Vec::with_capacity(zero_part.len());
        for &z in &zero_part {
            let image = alg.bracket(&unit(n, z), &unit(n, i));
            let mu = image[i].clone();
            if image.iter().enumerate().any(|(k, c)| k != i && !c.is_zero()) {
                return RootAnalysis::fail(format!(
                    "basis vector {} is not an eigenvector of ad of basis vector {}",
                    i + 1,
                    z + 1
                ));
            }
            eigen.push(mu);
        }
        let d = g.degrees[i].clone();
        if let Some(prev) = functionals.get(&d) {
            if *prev != eigen {
                return RootAnalysis::fail(format!(
                    "degree {} carries two different eigenvalue functionals",
                    format_degree(&d)
                ));
            }
        }
        functionals.insert(d, eigen);
    }
    let k = zero_part.len();
    let unknowns = free.len() * k;
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for (d, eigen) in &functionals {
        for (zi, mu) in eigen.iter().enumerate() {
            let mut row = vec![zero(); unknowns];
            for (ci, &c) in free.iter().enumerate() {
                row[ci * k + zi] = d[c].clone();
            }
            rows.push(row);
            rhs.push(mu.clone());
        }
    }
    if !rows.is_empty() && Matrix::from_rows(rows).solve(&rhs).is_none() {
        return RootAnalysis::fail("no group morphism reproduces the eigenvalues");
    }
    let mut seen: Vec<&Vec<Scalar>> = vec![];
    let zero_functional = vec![zero(); k];
    if !zero_part.is_empty() || functionals.is_empty() {
        seen.push(&zero_functional);
    }
    for eigen in functionals.values() {
        if seen.contains(&eigen) {
            return RootAnalysis::fail("the eigenvalue morphism is not injective on the occurring degrees");
        }
        seen.push(eigen);
    }
    RootAnalysis { is_root: true, reason: None, functionals }
}

/// Degrees `α` of `Λ² g` whose double `2α` carries no trivectors.
pub fn limit_degrees(alg: &LieAlgebra, g: &Gradation) -> Result<Vec<Degree>> {
    let two = induced_decomposition(alg, g, 2)?;
    let three = induced_decomposition(alg, g, 3.min(alg.dim()))?;
    let three_present = alg.dim() >= 3;
    Ok(two
        .members()
        .keys()
        .filter(|a| !three_present || three.fiber_dim(&g.group.multiple(a, 2)) == 0)
        .cloned()
        .collect())
}

/// True when the Schouten bracket of basis blades of grades `p, q` with
/// `p + q ≤ 4` lands in the sum of their degrees.
pub fn schouten_compatible(alg: &LieAlgebra, g: &Gradation) -> bool {
    let n = alg.dim();
    let grades: Vec<usize> = (1..=3.min(n)).collect();
    let blades: Vec<Vec<MultiVector>> = grades
        .iter()
        .map(|&m| {
            ExteriorBasis::new(n, m).tuples().iter().map(|t| MultiVector::blade(n, t).expect("canonical")).collect()
        })
        .collect();
    for (pi, &p) in grades.iter().enumerate() {
        for (qi, &q) in grades.iter().enumerate() {
            if p + q > 4 {
                continue;
            }
            for a in &blades[pi] {
                let da = g.degree_of(a.terms().keys().next().expect("blade"));
                for b in &blades[qi] {
                    let db = g.degree_of(b.terms().keys().next().expect("blade"));
                    let target = g.group.add(&da, &db);
                    let s = schouten(alg, a, b).expect("same algebra");
                    if s.terms().keys().any(|t| g.degree_of(t) != target) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Root analysis, limit degrees and bracket compatibility of a gradation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradationReport {
    /// Root-gradation verdict.
    pub root: RootAnalysis,
    /// Degrees of `Λ² g` whose homogeneous spaces solve the classical Yang-Baxter equation.
    pub limit_degrees: Vec<Degree>,
    /// True when the Schouten bracket respects the induced degrees on low grades.
    pub schouten_compatible: bool,
}

/// Builds the [`GradationReport`].
pub fn gradation_report(alg: &LieAlgebra, g: &Gradation) -> Result<GradationReport> {
    Ok(GradationReport {
        root: root_analysis(alg, g),
        limit_degrees: limit_degrees(alg, g)?,
        schouten_compatible: schouten_compatible(alg, g),
    })
}

/// Projection of `w` onto the homogeneous space of degree `d`.
pub fn homogeneous_component(g: &Gradation, w: &MultiVector, d: &[Scalar]) -> MultiVector {
    let terms = w.terms().iter().filter(|(t, _)| g.degree_of(t) == d).map(|(t, c)| (t.clone(), c.clone()));
    MultiVector::from_terms(w.dim(), terms).expect("terms are canonical")
}

/// Splits a grade-`m` subspace into homogeneous pieces when it is spanned by them.
///
/// Returns `None` when some basis vector has a homogeneous component outside the subspace.
pub fn graded_split(g: &Gradation, space: &Subspace, m: usize) -> Option<BTreeMap<Degree, Subspace>> {
    let dim = g.degrees.len();
    let basis = ExteriorBasis::new(dim, m);
    let mut pieces: BTreeMap<Degree, RowReducer> = BTreeMap::new();
    for v in space.basis() {
        let mut by_degree: BTreeMap<Degree, Vec<Scalar>> = BTreeMap::new();
        for (i, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let d = g.degree_of(basis.tuple(i));
            by_degree.entry(d).or_insert_with(|| vec![zero(); basis.len()])[i] = c.clone();
        }
        for (d, part) in by_degree {
            if !space.contains(&part) {
                return None;
            }
            pieces.entry(d).or_insert_with(|| RowReducer::new(basis.len())).push_dense(&part);
        }
    }
    Some(pieces.into_iter().map(|(d, r)| (d, Subspace::from_reducer(space.ambient(), &r))).collect())
}

impl fmt::Display for Gradation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.degrees.iter().map(|d| format_degree(d)).collect();
        write!(f, "{} [{}]", self.name, parts.join(", "))
    }
}
