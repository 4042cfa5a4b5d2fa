//! Built-in Lie algebras, their gradations and expected-result fixtures.
//!
//! Every entry is a JSON document compiled into the crate. A document holds
//! the algebra, its gradations and a fixture set; [`regress`] evaluates each
//! fixture against the live computation. Parameterized families take their
//! rational parameters at instantiation time, and fixture expressions may
//! mention the parameter symbols.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::{
    derivation_algebra, is_automorphism, killing_form, load_algebra_with, unflatten, AlgebraDoc, CoefDoc, LieAlgebra,
};
use crate::combinatorics::binomial;
use crate::error::{Error, Result};
use crate::exterior::{ad_on_exterior, transform, MultiVector};
use crate::forms::{extend_form, forms_of, invariant_forms, Symmetry};
use crate::gradation::{
    format_degree, induced_decomposition, limit_degrees, load_gradation_with, root_analysis, schouten_compatible,
    Degree, Gradation, GradationDoc,
};
use crate::invariants::{invariant_subspace, reduced_invariant_forms, ReducedSpace};
use crate::io::{eval_scalar_expr, parse_multivector, Symbols};
use crate::linalg::{Ambient, Matrix, Subspace};
use crate::scalar::{format_scalar, Scalar};
use crate::ybe::{
    certify_r, integer_grid, orbit_dimension, quadratic_separator, reduced_orbit_dimension, residual_grid,
};

const SOURCES: [(&str, &str); 11] = [
    ("sl2", include_str!("../catalog/sl2.json")),
    ("su2", include_str!("../catalog/su2.json")),
    ("h", include_str!("../catalog/h.json")),
    ("r3_0p", include_str!("../catalog/r3_0p.json")),
    ("r3_m1", include_str!("../catalog/r3_m1.json")),
    ("r3_1", include_str!("../catalog/r3_1.json")),
    ("r3", include_str!("../catalog/r3.json")),
    ("r3_lambda", include_str!("../catalog/r3_lambda.json")),
    ("r3_lambda_p", include_str!("../catalog/r3_lambda_p.json")),
    ("so22", include_str!("../catalog/so22.json")),
    ("so32", include_str!("../catalog/so32.json")),
];

/// Names of all catalog entries, in catalog order.
pub fn names() -> Vec<&'static str> {
    SOURCES.iter().map(|(n, _)| *n).collect()
}

/// Allowed values of a catalog parameter.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Constraint {
    /// Any rational.
    Any,
    /// Rationals strictly between -1 and 1.
    OpenUnitInterval,
    /// Nonzero rationals.
    Nonzero,
}

impl Constraint {
    fn admits(self, x: &Scalar) -> bool {
        match self {
            Constraint::Any => true,
            Constraint::OpenUnitInterval => x.abs() < Scalar::one(),
            Constraint::Nonzero => !x.is_zero(),
        }
    }

    fn describe(self) -> &'static str {
        match self {
            Constraint::Any => "any rational",
            Constraint::OpenUnitInterval => "a rational in (-1, 1)",
            Constraint::Nonzero => "a nonzero rational",
        }
    }
}

/// A rational parameter of a catalog family.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ParameterDoc {
    /// Symbol used in the algebra, gradation and fixture expressions.
    pub symbol: String,
    /// Value used when none is supplied.
    pub default: String,
    /// Allowed range.
    pub constraint: Constraint,
}

/// Expected matrix of the Killing form or of its extension to one exterior power.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct KillingFixture {
    /// Exterior grade.
    pub grade: usize,
    /// Rows of the Gram matrix in the canonical basis.
    pub matrix: Vec<Vec<CoefDoc>>,
    /// Remark.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

/// Expected space of invariant multivectors of one grade.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InvariantFixture {
    /// Exterior grade.
    pub grade: usize,
    /// Spanning elements; empty for the zero space.
    pub basis: Vec<String>,
    /// Remark.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

/// Expected Yang-Baxter residual of `r = x e12 + y e13 + z e23` on an integer grid.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ResidualFixture {
    /// Residual as an expression in `x`, `y`, `z` and the parameters.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected: Option<String>,
    /// When true, every residual must be an invariant trivector.
    #[serde(default)]
    pub invariant_membership: bool,
    /// Inclusive coordinate range; `[-2, 2]` when omitted.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub grid: Option<[i64; 2]>,
    /// Remark.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

/// Expected verdict of the root-gradation test.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RootFixture {
    /// Gradation name.
    pub gradation: String,
    /// Expected verdict.
    pub root: bool,
    /// Expression; the fixture is skipped when it evaluates to zero.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unless_zero: Option<String>,
    /// Remark.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

/// Expected orbit dimension of one element.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OrbitFixture {
    /// Element as an expression.
    pub element: String,
    /// Expected dimension.
    pub dim: usize,
    /// Remark.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

/// Expected quadratic function `r ↦ b(r, r)` of an extended form on bivectors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SeparatorFixture {
    /// Base form on `g`; only `killing` is recognised.
    pub form: String,
    /// Polynomial in `x`, `y`, `z`.
    pub polynomial: String,
    /// Normalized polynomial used to label level sets.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub normalized: Option<String>,
    /// Ratio between `polynomial` and `normalized`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub factor: Option<String>,
    /// Remark.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

/// Expected image of one element.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MapFixture {
    /// Source element.
    pub from: String,
    /// Expected image.
    pub to: String,
}

/// A named automorphism together with its expected exterior actions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AutomorphismFixture {
    /// Name.
    pub name: String,
    /// Sample values for the free symbols of the family.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub symbols: BTreeMap<String, String>,
    /// Images of the basis vectors.
    pub images: Vec<String>,
    /// Expected images under the multiplicative extension.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub exterior: Vec<MapFixture>,
    /// Expected images of classes in the reduced space of bivectors.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub reduced: Vec<MapFixture>,
    /// Remark.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

/// Expected dimensions of the derivation algebra and of the inner derivations.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DerivationFixture {
    /// `dim der g`.
    pub der: usize,
    /// `dim ad g`.
    pub inner: usize,
}

/// Expected space of invariant forms on one exterior power.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FormFixture {
    /// Exterior grade.
    pub grade: usize,
    /// Number of arguments.
    pub arity: usize,
    /// Symmetry constraint imposed on the solver.
    pub symmetry: Symmetry,
    /// Expected dimension of the solution space.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dim: Option<usize>,
    /// 1-based multi-indices outside of which every solution vanishes.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub support: Option<Vec<Vec<usize>>>,
    /// Remark.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

/// Expected invariant bilinear forms on a reduced space.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReducedFormFixture {
    /// Exterior grade of the reduced space.
    pub grade: usize,
    /// Symmetry constraint imposed on the solver.
    pub symmetry: Symmetry,
    /// Gram matrices spanning the solution space.
    pub family: Vec<Vec<Vec<CoefDoc>>>,
}

/// Expected image and kernel of the action of one element on reduced bivectors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReducedActionFixture {
    /// Acting element of `g`.
    pub generator: String,
    /// Spanning classes of the image.
    pub image: Vec<String>,
    /// Spanning classes of the projected kernel of `[v, ·]_S` on bivectors.
    pub kernel: Vec<String>,
}

/// Expected dimension table of an induced decomposition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DecompositionFixture {
    /// Gradation name.
    pub gradation: String,
    /// Exterior grade.
    pub grade: usize,
    /// Sum of all fiber dimensions.
    pub total: usize,
    /// Nonzero fiber dimensions keyed by comma-separated degree.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dims: Option<BTreeMap<String, usize>>,
}

/// Expected spanning set of one homogeneous space.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FiberFixture {
    /// Gradation name.
    pub gradation: String,
    /// Exterior grade.
    pub grade: usize,
    /// Comma-separated degree.
    pub degree: String,
    /// Spanning elements.
    pub basis: Vec<String>,
}

/// Expected set of limit degrees of a gradation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LimitFixture {
    /// Gradation name.
    pub gradation: String,
    /// Comma-separated degrees.
    pub degrees: Vec<String>,
}

/// Expected results attached to a catalog entry.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Fixtures {
    /// Killing form and its extensions.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub killing: Vec<KillingFixture>,
    /// Invariant multivectors.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub invariants: Vec<InvariantFixture>,
    /// Yang-Baxter residual on a grid.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub residual: Option<ResidualFixture>,
    /// Root-gradation verdicts.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub roots: Vec<RootFixture>,
    /// Orbit dimensions of bivectors.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub orbit_dimensions: Vec<OrbitFixture>,
    /// Orbit dimensions of reduced classes, given by representatives.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub reduced_orbit_dimensions: Vec<OrbitFixture>,
    /// Quadratic functions of extended forms.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub separators: Vec<SeparatorFixture>,
    /// Named automorphisms.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub automorphisms: Vec<AutomorphismFixture>,
    /// Derivation algebra dimensions.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub derivations: Option<DerivationFixture>,
    /// Invariant forms.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub invariant_forms: Vec<FormFixture>,
    /// Invariant forms on reduced spaces.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub reduced_forms: Vec<ReducedFormFixture>,
    /// Images and kernels of reduced actions.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub reduced_actions: Vec<ReducedActionFixture>,
    /// Decomposition dimension tables.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub decompositions: Vec<DecompositionFixture>,
    /// Homogeneous spaces.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub fibers: Vec<FiberFixture>,
    /// Limit degrees.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub limit_degrees: Vec<LimitFixture>,
    /// Bivectors solving the classical Yang-Baxter equation.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub cybe: Vec<String>,
}

/// A catalog document as stored on disk.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CatalogDoc {
    /// Catalog key.
    pub name: String,
    /// Conventional notation.
    pub title: String,
    /// One-line description.
    pub description: String,
    /// Rational parameters of a family.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub parameters: Vec<ParameterDoc>,
    /// Conventions fixed by the entry.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub metadata: BTreeMap<String, String>,
    /// The algebra.
    pub algebra: AlgebraDoc,
    /// Its gradations.
    pub gradations: Vec<GradationDoc>,
    /// Expected results.
    pub fixtures: Fixtures,
}

/// Parses the stored document of an entry.
pub fn document(name: &str) -> Result<CatalogDoc> {
    let (_, text) = SOURCES.iter().find(|(n, _)| *n == name).ok_or_else(|| Error::UnknownName(name.to_string()))?;
    Ok(serde_json::from_str(text)?)
}

/// Expected results of an entry, with parameter expressions left symbolic.
pub fn expected_results(name: &str) -> Result<Fixtures> {
    Ok(document(name)?.fixtures)
}

/// A catalog entry instantiated at concrete parameter values.
#[derive(Clone, Debug)]
pub struct CatalogEntry {
    /// Stored document.
    pub doc: CatalogDoc,
    /// Parameter values by symbol.
    pub parameters: Symbols,
    /// Validated algebra.
    pub algebra: LieAlgebra,
    /// Validated gradations, in document order.
    pub gradations: Vec<Gradation>,
}

impl CatalogEntry {
    /// Looks up a gradation by name.
    pub fn gradation(&self, name: &str) -> Result<&Gradation> {
        self.gradations
            .iter()
            .find(|g| g.name() == name)
            .ok_or_else(|| Error::UnknownName(format!("{}: gradation {name}", self.doc.name)))
    }
}

/// Binds parameter values, falling back to the documented defaults.
pub fn bind_parameters(doc: &CatalogDoc, params: &[Scalar]) -> Result<Symbols> {
    if params.len() > doc.parameters.len() {
        return Err(Error::BadParameter(format!(
            "{} takes {} parameter(s), {} given",
            doc.name,
            doc.parameters.len(),
            params.len()
        )));
    }
    let mut symbols = Symbols::new();
    for (k, p) in doc.parameters.iter().enumerate() {
        let value = match params.get(k) {
            Some(v) => v.clone(),
            None => eval_scalar_expr(&p.default, &Symbols::new())?,
        };
        if !p.constraint.admits(&value) {
            return Err(Error::BadParameter(format!(
                "{} = {} but {} requires {}",
                p.symbol,
                format_scalar(&value),
                doc.name,
                p.constraint.describe()
            )));
        }
        symbols.insert(p.symbol.clone(), value);
    }
    Ok(symbols)
}

/// Instantiates an entry.
pub fn entry(name: &str, params: &[Scalar]) -> Result<CatalogEntry> {
    let doc = document(name)?;
    let parameters = bind_parameters(&doc, params)?;
    let algebra = load_algebra_with(&doc.algebra, &parameters)?;
    let gradations =
        doc.gradations.iter().map(|g| load_gradation_with(&algebra, g, &parameters)).collect::<Result<Vec<_>>>()?;
    Ok(CatalogEntry { doc, parameters, algebra, gradations })
}

/// The algebra of an entry together with its gradations.
pub fn get_algebra(name: &str, params: &[Scalar]) -> Result<(LieAlgebra, Vec<Gradation>)> {
    let e = entry(name, params)?;
    Ok((e.algebra, e.gradations))
}

/// Splits a reference `NAME[:p1[:p2…]]` into the entry name and its parameters.
pub fn parse_reference(reference: &str) -> Result<(String, Vec<Scalar>)> {
    let mut parts = reference.split(':');
    let name = parts.next().unwrap_or_default().to_string();
    let params = parts.map(|p| eval_scalar_expr(p, &Symbols::new())).collect::<Result<Vec<_>>>()?;
    Ok((name, params))
}

/// Short description of an entry for listings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Summary {
    /// Catalog key.
    pub name: String,
    /// Conventional notation.
    pub title: String,
    /// Dimension.
    pub dim: usize,
    /// Parameter symbols.
    pub parameters: Vec<String>,
    /// Gradation names.
    pub gradations: Vec<String>,
    /// One-line description.
    pub description: String,
}

/// Summaries of all entries.
pub fn list() -> Result<Vec<Summary>> {
    names()
        .into_iter()
        .map(|n| {
            let d = document(n)?;
            Ok(Summary {
                name: d.name.clone(),
                title: d.title.clone(),
                dim: d.algebra.dim,
                parameters: d.parameters.iter().map(|p| p.symbol.clone()).collect(),
                gradations: d.gradations.iter().map(|g| g.name.clone().unwrap_or_default()).collect(),
                description: d.description.clone(),
            })
        })
        .collect()
}

/// Outcome of one fixture check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    /// The live computation matches.
    Pass,
    /// The live computation differs or failed.
    Fail,
    /// The fixture does not apply at these parameter values.
    Skip,
}

/// One evaluated fixture.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckOutcome {
    /// Stable identifier such as `killing/grade-2`.
    pub id: String,
    /// Verdict.
    pub status: Status,
    /// What was compared.
    pub detail: String,
}

/// All fixture checks of one entry.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RegressionReport {
    /// Catalog key.
    pub entry: String,
    /// Parameter values as rational strings.
    pub parameters: BTreeMap<String, String>,
    /// Checks in fixture order.
    pub checks: Vec<CheckOutcome>,
}

impl RegressionReport {
    /// True when no check failed.
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    /// The failing checks.
    pub fn failures(&self) -> Vec<&CheckOutcome> {
        self.checks.iter().filter(|c| c.status == Status::Fail).collect()
    }

    /// Number of checks with the given status.
    pub fn count(&self, status: Status) -> usize {
        self.checks.iter().filter(|c| c.status == status).count()
    }
}

type Verdict = Result<(Status, String)>;
type Check<'a> = (String, Box<dyn Fn() -> Verdict + Send + Sync + 'a>);

fn verdict(ok: bool, detail: String) -> Verdict {
    Ok((if ok { Status::Pass } else { Status::Fail }, detail))
}

/// Evaluates every fixture of an entry against the live computation.
///
/// Checks run in parallel; the report lists them in fixture order.
pub fn regress(name: &str, params: &[Scalar]) -> Result<RegressionReport> {
    let e = entry(name, params)?;
    let checks = build_checks(&e);
    let outcomes: Vec<CheckOutcome> = checks
        .par_iter()
        .map(|(id, run)| {
            let (status, detail) = run().unwrap_or_else(|err| (Status::Fail, format!("error: {err}")));
            CheckOutcome { id: id.clone(), status, detail }
        })
        .collect();
    Ok(RegressionReport {
        entry: e.doc.name.clone(),
        parameters: e.parameters.iter().map(|(k, v)| (k.clone(), format_scalar(v))).collect(),
        checks: outcomes,
    })
}

fn element(e: &CatalogEntry, text: &str, symbols: &Symbols) -> Result<MultiVector> {
    parse_multivector(e.algebra.basis_names(), text, symbols)
}

fn span_of(e: &CatalogEntry, texts: &[String], grade: usize, symbols: &Symbols) -> Result<Subspace> {
    let vectors = texts.iter().map(|t| element(e, t, symbols)?.coords(grade)).collect::<Result<Vec<_>>>()?;
    Ok(Subspace::span(Ambient::Exterior { grade }, binomial(e.algebra.dim(), grade), &vectors))
}

fn parse_degree(text: &str) -> Result<Degree> {
    text.split(',').map(|c| eval_scalar_expr(c.trim(), &Symbols::new())).collect()
}

fn eval_matrix(rows: &[Vec<CoefDoc>], symbols: &Symbols) -> Result<Matrix> {
    let rows =
        rows.iter().map(|r| r.iter().map(|c| c.eval(symbols)).collect::<Result<Vec<_>>>()).collect::<Result<_>>()?;
    Ok(Matrix::from_rows(rows))
}

fn describe_space(s: &Subspace) -> String {
    format!("dim {} rows {:?}", s.dim(), s.to_strings())
}

fn grid_symbols(base: &Symbols, point: &[Scalar]) -> Symbols {
    let mut s = base.clone();
    for (name, v) in ["x", "y", "z"].iter().zip(point) {
        s.insert(name.to_string(), v.clone());
    }
    s
}

fn bivector_basis(e: &CatalogEntry) -> Result<Vec<MultiVector>> {
    if e.algebra.dim() != 3 {
        return Err(Error::DimensionMismatch("grid fixtures need a three-dimensional algebra".into()));
    }
    [[0, 1], [0, 2], [1, 2]].iter().map(|t| MultiVector::blade(3, t)).collect()
}

fn with_symbols(base: &Symbols, extra: &BTreeMap<String, String>) -> Result<Symbols> {
    let mut s = base.clone();
    for (k, v) in extra {
        let value = eval_scalar_expr(v, &s)?;
        s.insert(k.clone(), value);
    }
    Ok(s)
}

fn build_checks(e: &CatalogEntry) -> Vec<Check<'_>> {
    let f = &e.doc.fixtures;
    let p = &e.parameters;
    let mut checks: Vec<Check<'_>> = Vec::new();

    for g in &e.gradations {
        checks.push((
            format!("gradation/{}/schouten-compatible", g.name()),
            Box::new(move || {
                let ok = schouten_compatible(&e.algebra, g);
                verdict(ok, "degrees add under the Schouten bracket on low grades".into())
            }),
        ));
    }

    for k in &f.killing {
        checks.push((
            format!("killing/grade-{}", k.grade),
            Box::new(move || {
                let expected = eval_matrix(&k.matrix, p)?;
                let kappa = killing_form(&e.algebra);
                let got = if k.grade == 1 { kappa } else { extend_form(&kappa, k.grade)? };
                let got = got.to_matrix()?;
                verdict(got == expected, format!("computed {:?}", got.to_strings()))
            }),
        ));
    }

    for inv in &f.invariants {
        checks.push((
            format!("invariants/grade-{}", inv.grade),
            Box::new(move || {
                let expected = span_of(e, &inv.basis, inv.grade, p)?;
                let got = invariant_subspace(&e.algebra, inv.grade)?;
                verdict(
                    got == expected,
                    format!("expected {}, computed {}", describe_space(&expected), describe_space(&got)),
                )
            }),
        ));
    }

    if let Some(res) = &f.residual {
        let [lo, hi] = res.grid.unwrap_or([-2, 2]);
        if let Some(expected) = &res.expected {
            checks.push((
                "residual/polynomial".into(),
                Box::new(move || {
                    let basis = bivector_basis(e)?;
                    let points = integer_grid(3, lo, hi);
                    let grid = residual_grid(&e.algebra, &basis, &points)?;
                    for gp in &grid {
                        let want = element(e, expected, &grid_symbols(p, &gp.point))?;
                        if gp.residual != want {
                            return verdict(
                                false,
                                format!("mismatch at {:?}", gp.point.iter().map(format_scalar).collect::<Vec<_>>()),
                            );
                        }
                    }
                    verdict(true, format!("{} grid points agree with {expected}", grid.len()))
                }),
            ));
        }
        if res.invariant_membership {
            checks.push((
                "residual/invariant-membership".into(),
                Box::new(move || {
                    let basis = bivector_basis(e)?;
                    let grid = residual_grid(&e.algebra, &basis, &integer_grid(3, lo, hi))?;
                    let bad = grid.iter().filter(|g| !g.is_mcybe).count();
                    verdict(bad == 0, format!("{} of {} grid points leave the invariant trivectors", bad, grid.len()))
                }),
            ));
        }
    }

    for rf in &f.roots {
        checks.push((
            format!("root/{}", rf.gradation),
            Box::new(move || {
                if let Some(cond) = &rf.unless_zero {
                    if eval_scalar_expr(cond, p)?.is_zero() {
                        return Ok((Status::Skip, format!("{cond} = 0")));
                    }
                }
                let g = e.gradation(&rf.gradation)?;
                let a = root_analysis(&e.algebra, g);
                verdict(
                    a.is_root == rf.root,
                    format!("expected {}, computed {} ({})", rf.root, a.is_root, a.reason.unwrap_or_default()),
                )
            }),
        ));
    }

    for o in &f.orbit_dimensions {
        checks.push((
            format!("orbit-dim/{}", o.element),
            Box::new(move || {
                let got = orbit_dimension(&e.algebra, &element(e, &o.element, p)?)?;
                verdict(got == o.dim, format!("expected {}, computed {got}", o.dim))
            }),
        ));
    }

    for o in &f.reduced_orbit_dimensions {
        checks.push((
            format!("reduced-orbit-dim/{}", o.element),
            Box::new(move || {
                let r = ReducedSpace::new(&e.algebra, 2)?;
                let class = r.project_multivector(&element(e, &o.element, p)?)?;
                let got = reduced_orbit_dimension(&e.algebra, &r, &class)?;
                verdict(got == o.dim, format!("expected {}, computed {got}", o.dim))
            }),
        ));
    }

    for s in &f.separators {
        checks.push((
            format!("separator/{}", s.form),
            Box::new(move || {
                if s.form != "killing" {
                    return Err(Error::UnknownName(format!("form {}", s.form)));
                }
                let b = extend_form(&killing_form(&e.algebra), 2)?;
                let basis = bivector_basis(e)?;
                let points = integer_grid(3, -2, 2);
                for pt in &points {
                    let mut r = MultiVector::zero(3);
                    for (c, w) in pt.iter().zip(&basis) {
                        r = &r + &w.scaled(c);
                    }
                    let sym = grid_symbols(p, pt);
                    let want = eval_scalar_expr(&s.polynomial, &sym)?;
                    if quadratic_separator(&b, &r)? != want {
                        return verdict(
                            false,
                            format!("value differs at {:?}", pt.iter().map(format_scalar).collect::<Vec<_>>()),
                        );
                    }
                    if let (Some(norm), Some(factor)) = (&s.normalized, &s.factor) {
                        if eval_scalar_expr(factor, &sym)? * eval_scalar_expr(norm, &sym)? != want {
                            return verdict(false, "normalization factor does not relate the two polynomials".into());
                        }
                    }
                }
                verdict(true, format!("{} grid points agree with {}", points.len(), s.polynomial))
            }),
        ));
    }

    for a in &f.automorphisms {
        checks.push((
            format!("automorphism/{}", a.name),
            Box::new(move || {
                let sym = with_symbols(p, &a.symbols)?;
                let t = automorphism_matrix(e, a, &sym)?;
                if !is_automorphism(&e.algebra, &t) {
                    return verdict(false, "brackets are not preserved".into());
                }
                for m in &a.exterior {
                    let got = transform(&t, &element(e, &m.from, &sym)?)?;
                    if got != element(e, &m.to, &sym)? {
                        return verdict(
                            false,
                            format!(
                                "{} maps to {}",
                                m.from,
                                crate::io::format_multivector(&got, e.algebra.basis_names())
                            ),
                        );
                    }
                }
                if !a.reduced.is_empty() {
                    let r = ReducedSpace::new(&e.algebra, 2)?;
                    for m in &a.reduced {
                        let got = r.project_multivector(&transform(&t, &element(e, &m.from, &sym)?)?)?;
                        if got != r.project_multivector(&element(e, &m.to, &sym)?)? {
                            return verdict(false, format!("class of {} maps elsewhere", m.from));
                        }
                    }
                }
                verdict(
                    true,
                    format!(
                        "preserves brackets; {} exterior and {} reduced images agree",
                        a.exterior.len(),
                        a.reduced.len()
                    ),
                )
            }),
        ));
    }

    if let Some(d) = &f.derivations {
        checks.push((
            "derivations".into(),
            Box::new(move || {
                let der = derivation_algebra(&e.algebra);
                let ok = der.der.dim() == d.der && der.inner.dim() == d.inner && der.inner.is_subspace_of(&der.der);
                verdict(ok, format!("der {} inner {}", der.der.dim(), der.inner.dim()))
            }),
        ));
    }

    for ff in &f.invariant_forms {
        checks.push((
            format!("invariant-forms/grade-{}-arity-{}-{}", ff.grade, ff.arity, ff.symmetry),
            Box::new(move || {
                let space = invariant_forms(&e.algebra, ff.grade, ff.arity, ff.symmetry)?;
                if let Some(dim) = ff.dim {
                    if space.dim() != dim {
                        return verdict(false, format!("expected dim {dim}, computed {}", space.dim()));
                    }
                }
                if let Some(support) = &ff.support {
                    let allowed: BTreeSet<Vec<usize>> =
                        support.iter().map(|ix| ix.iter().map(|i| i - 1).collect()).collect();
                    let size = binomial(e.algebra.dim(), ff.grade);
                    for form in forms_of(&space, size, ff.grade, ff.arity)? {
                        for flat in 0..size.pow(ff.arity as u32) {
                            let idx = unflatten(flat, size, ff.arity);
                            if !form.entry(&idx).is_zero() && !allowed.contains(&idx) {
                                return verdict(
                                    false,
                                    format!(
                                        "a solution is nonzero at {:?}",
                                        idx.iter().map(|i| i + 1).collect::<Vec<_>>()
                                    ),
                                );
                            }
                        }
                    }
                }
                verdict(true, format!("dim {}", space.dim()))
            }),
        ));
    }

    for rf in &f.reduced_forms {
        checks.push((
            format!("reduced-forms/grade-{}-{}", rf.grade, rf.symmetry),
            Box::new(move || {
                let r = ReducedSpace::new(&e.algebra, rf.grade)?;
                let got = reduced_invariant_forms(&e.algebra, &r, 2, rf.symmetry)?;
                let vectors =
                    rf.family.iter().map(|m| Ok(eval_matrix(m, p)?.entries().to_vec())).collect::<Result<Vec<_>>>()?;
                let expected = Subspace::span(got.ambient(), got.ambient_dim(), &vectors);
                verdict(got == expected, format!("computed {}", describe_space(&got)))
            }),
        ));
    }

    for ra in &f.reduced_actions {
        checks.push((
            format!("reduced-action/{}", ra.generator),
            Box::new(move || {
                let r = ReducedSpace::new(&e.algebra, 2)?;
                let v = element(e, &ra.generator, p)?.coords(1)?;
                let n = e.algebra.dim();
                let actions = r.actions(&e.algebra)?;
                let mut reduced = Matrix::zeros(r.dim(), r.dim());
                let mut full = Matrix::zeros(binomial(n, 2), binomial(n, 2));
                for i in 0..n {
                    reduced = reduced.add(&actions[i].scale(&v[i]));
                    full = full.add(&ad_on_exterior(&e.algebra, i, 2)?.matrix().scale(&v[i]));
                }
                let classes = |texts: &[String]| -> Result<Subspace> {
                    let rows =
                        texts.iter().map(|t| r.project_multivector(&element(e, t, p)?)).collect::<Result<Vec<_>>>()?;
                    Ok(Subspace::span(Ambient::Coordinates, r.dim(), &rows))
                };
                let image = Subspace::image_of(Ambient::Coordinates, &reduced);
                let projected: Vec<Vec<Scalar>> = Subspace::kernel_of(Ambient::Exterior { grade: 2 }, &full)
                    .basis()
                    .iter()
                    .map(|k| r.project(k))
                    .collect();
                let kernel = Subspace::span(Ambient::Coordinates, r.dim(), &projected);
                let quotient_kernel = Subspace::kernel_of(Ambient::Coordinates, &reduced);
                let ok = image == classes(&ra.image)? && kernel == classes(&ra.kernel)?;
                verdict(
                    ok,
                    format!(
                        "image dim {}, projected kernel dim {}, kernel on the quotient dim {}",
                        image.dim(),
                        kernel.dim(),
                        quotient_kernel.dim()
                    ),
                )
            }),
        ));
    }

    for d in &f.decompositions {
        checks.push((
            format!("decomposition/{}/grade-{}", d.gradation, d.grade),
            Box::new(move || {
                let g = e.gradation(&d.gradation)?;
                let dec = induced_decomposition(&e.algebra, g, d.grade)?;
                if dec.total_dim() != d.total {
                    return verdict(false, format!("total {}", dec.total_dim()));
                }
                if let Some(dims) = &d.dims {
                    let expected = dims
                        .iter()
                        .map(|(k, v)| Ok((g.group().add(&parse_degree(k)?, &g.group().identity()), *v)))
                        .collect::<Result<BTreeMap<Degree, usize>>>()?;
                    let got = dec.dims();
                    if got != expected {
                        let table: Vec<String> = got.iter().map(|(k, v)| format!("{}:{v}", format_degree(k))).collect();
                        return verdict(false, format!("computed {}", table.join(" ")));
                    }
                }
                verdict(true, format!("total {} over {} degrees", dec.total_dim(), dec.dims().len()))
            }),
        ));
    }

    for fb in &f.fibers {
        checks.push((
            format!("fiber/{}/grade-{}/({})", fb.gradation, fb.grade, fb.degree),
            Box::new(move || {
                let g = e.gradation(&fb.gradation)?;
                let dec = induced_decomposition(&e.algebra, g, fb.grade)?;
                let got = dec.fiber(&parse_degree(&fb.degree)?);
                let expected = span_of(e, &fb.basis, fb.grade, p)?;
                verdict(got == expected, format!("computed {}", describe_space(&got)))
            }),
        ));
    }

    for l in &f.limit_degrees {
        checks.push((
            format!("limit-degrees/{}", l.gradation),
            Box::new(move || {
                let g = e.gradation(&l.gradation)?;
                let got: BTreeSet<Degree> = limit_degrees(&e.algebra, g)?.into_iter().collect();
                let expected = l.degrees.iter().map(|d| parse_degree(d)).collect::<Result<BTreeSet<_>>>()?;
                let shown: Vec<String> = got.iter().map(|d| format_degree(d)).collect();
                verdict(got == expected, format!("computed {}", shown.join(" ")))
            }),
        ));
    }

    for r in &f.cybe {
        checks.push((
            format!("cybe/{r}"),
            Box::new(move || {
                let v = certify_r(&e.algebra, &element(e, r, p)?)?;
                verdict(v.is_cybe, format!("is_cybe {}", v.is_cybe))
            }),
        ));
    }

    checks
}

fn automorphism_matrix(e: &CatalogEntry, a: &AutomorphismFixture, symbols: &Symbols) -> Result<Matrix> {
    let n = e.algebra.dim();
    if a.images.len() != n {
        return Err(Error::DimensionMismatch(format!("{} images for dimension {n}", a.images.len())));
    }
    let columns = a.images.iter().map(|t| element(e, t, symbols)?.coords(1)).collect::<Result<Vec<_>>>()?;
    Ok(Matrix::from_columns(n, &columns))
}

/// Matrix whose columns are the images of the basis vectors listed in an automorphism fixture.
pub fn fixture_automorphism(e: &CatalogEntry, name: &str) -> Result<Matrix> {
    let a = e
        .doc
        .fixtures
        .automorphisms
        .iter()
        .find(|a| a.name == name)
        .ok_or_else(|| Error::UnknownName(format!("{}: automorphism {name}", e.doc.name)))?;
    automorphism_matrix(e, a, &with_symbols(&e.parameters, &a.symbols)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{frac, int};

    #[test]
    fn every_document_parses() {
        for n in names() {
            let d = document(n).unwrap();
            assert_eq!(d.name, n);
        }
    }

    #[test]
    fn unknown_name_is_rejected() {
        assert!(matches!(get_algebra("g2", &[]), Err(Error::UnknownName(_))));
    }

    #[test]
    fn parameters_are_range_checked() {
        assert!(matches!(get_algebra("r3_lambda", &[int(1)]), Err(Error::BadParameter(_))));
        assert!(matches!(get_algebra("r3_lambda_p", &[int(0)]), Err(Error::BadParameter(_))));
        assert!(matches!(get_algebra("sl2", &[int(0)]), Err(Error::BadParameter(_))));
        assert!(get_algebra("r3_lambda", &[frac(-1, 2)]).is_ok());
    }

    #[test]
    fn reference_syntax() {
        let (n, p) = parse_reference("r3_lambda:-1/2").unwrap();
        assert_eq!(n, "r3_lambda");
        assert_eq!(p, vec![frac(-1, 2)]);
    }
}
