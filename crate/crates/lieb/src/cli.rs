//! Command-line interface over the library.
//!
//! Every subcommand prints one JSON document (or a plain-text rendering with
//! `--format text`) to standard output. Exit status is 0 on success, 1 when a
//! mathematical condition fails and 2 on malformed input. Algebras are given
//! either as a path to a JSON document or as `catalog:NAME[:PARAM…]`.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::{IsTerminal, Write};
use std::path::Path;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use crate::algebra::{
    derivation_algebra, ideal_report, killing_form, load_algebra_with, structure_report, AlgebraDoc, LieAlgebra,
};
use crate::catalog::{self, Status};
use crate::combinatorics::binomial;
use crate::error::{Error, Result};
use crate::exterior::MultiVector;
use crate::forms::{
    extend_form_determinant, extend_form_permutation_sum, extend_form_with, forms_of, invariant_forms, MultiLinearForm,
    Symmetry,
};
use crate::gradation::{
    format_degree, gradation_report, induced_decomposition, load_gradation_with, Gradation, GradationDoc,
};
use crate::invariants::{ideal_to_invariant, invariant_subspace, invariant_to_ideal, ReducedSpace};
use crate::io::{
    eval_scalar_expr, form_json, format_multivector, grade_labels, matrix_from_json, matrix_json, parse_multivector,
    rows_json, subspace_json, terms_json, to_pretty, Symbols,
};
use crate::linalg::{Ambient, Matrix, Subspace};
use crate::scalar::{format_scalar, int, Scalar};
use crate::ybe::{
    certify_r, cocommutator, integer_grid, is_cocycle, orbit_dimension, reduced_orbit_dimension, residual_grid,
    same_coproduct,
};
use crate::Limits;

/// Parsed command line.
#[derive(Debug, Parser)]
#[command(name = "lieb", version, about = "Exact computations in the Grassmann algebra of a Lie algebra")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,
    /// Subcommand.
    #[command(subcommand)]
    pub command: Command,
}

/// Output format.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// Canonical pretty-printed JSON.
    Json,
    /// Plain text.
    Text,
}

/// Algebra selection shared by most subcommands.
#[derive(Clone, Debug, Args)]
pub struct AlgebraArg {
    /// Path to an algebra document, or `catalog:NAME[:PARAM…]`.
    #[arg(long, short = 'a')]
    pub algebra: String,
    /// Parameter binding `SYMBOL=VALUE` for expressions in a document.
    #[arg(long = "set", value_name = "SYMBOL=VALUE")]
    pub set: Vec<String>,
}

/// Gradation selection.
#[derive(Clone, Debug, Args)]
pub struct GradationArg {
    /// Catalog gradation name or path to a gradation document; the first catalog gradation by default.
    #[arg(long, short = 'g')]
    pub gradation: Option<String>,
}

/// Verdict expected by the caller; a mismatch exits with status 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Expect {
    /// The property must hold.
    Pass,
    /// The property must fail.
    Fail,
}

/// Method used to extend a form to an exterior power.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    /// Determinant for bilinear forms, permutation sum otherwise.
    Auto,
    /// Gram determinant; bilinear forms only.
    Determinant,
    /// Explicit sum over permutations.
    PermutationSum,
}

/// Subcommands.
#[derive(Debug, Subcommand)]
pub enum Command {
    /// Load an algebra and verify the Jacobi identity.
    Check(AlgebraArg),
    /// Gram matrix of the Killing form or of its extension to `Λ^m g`.
    Killing {
        #[command(flatten)]
        alg: AlgebraArg,
        /// Exterior grade.
        #[arg(long, short = 'm', default_value_t = 1)]
        grade: usize,
    },
    /// Echelon basis of the invariant multivectors of one grade.
    Invariants {
        #[command(flatten)]
        alg: AlgebraArg,
        /// Exterior grade.
        #[arg(long, short = 'm')]
        grade: usize,
    },
    /// Basis of the invariant `k`-linear forms on `Λ^m g`.
    Forms {
        #[command(flatten)]
        alg: AlgebraArg,
        /// Exterior grade.
        #[arg(long, short = 'm')]
        grade: usize,
        /// Number of arguments.
        #[arg(long, short = 'k')]
        arity: usize,
        /// Restrict to symmetric forms.
        #[arg(long, conflicts_with = "antisym")]
        sym: bool,
        /// Restrict to antisymmetric forms.
        #[arg(long)]
        antisym: bool,
    },
    /// Extend a form on `g` to `Λ^m g`.
    ExtendForm {
        #[command(flatten)]
        alg: AlgebraArg,
        /// `killing`, or a path to a JSON document `{"matrix": [[…]]}` or `{"arity": k, "data": […]}`.
        #[arg(long, default_value = "killing")]
        form: String,
        /// Target grade.
        #[arg(long, short = 'm')]
        grade: usize,
        /// Extension method.
        #[arg(long, value_enum, default_value_t = Method::Auto)]
        method: Method,
    },
    /// Gradation tools.
    Gradation {
        #[command(subcommand)]
        action: GradationCommand,
    },
    /// Yang-Baxter tools.
    Ybe {
        #[command(subcommand)]
        action: YbeCommand,
    },
    /// Dimension of the inner orbit through a multivector.
    OrbitDim {
        #[command(flatten)]
        alg: AlgebraArg,
        /// Multivector expression.
        #[arg(long, short = 'w', allow_hyphen_values = true)]
        element: String,
        /// Work in the reduced space of the element's grade.
        #[arg(long)]
        reduced: bool,
    },
    /// Reduced space `Λ^m g / (Λ^m g)^g` with its induced action.
    Reduced {
        #[command(flatten)]
        alg: AlgebraArg,
        /// Exterior grade.
        #[arg(long, short = 'm')]
        grade: usize,
    },
    /// Derivation algebra and inner derivations.
    Derivations(AlgebraArg),
    /// Center, lower central and derived series.
    Series(AlgebraArg),
    /// Ideal/invariant correspondence.
    Bridge {
        #[command(flatten)]
        alg: AlgebraArg,
        /// Comma-separated spanning vectors of a traceless ideal.
        #[arg(long, conflicts_with = "invariant", allow_hyphen_values = true)]
        ideal: Option<String>,
        /// Decomposable invariant multivector.
        #[arg(long, allow_hyphen_values = true)]
        invariant: Option<String>,
    },
    /// Built-in catalog.
    Catalog {
        #[command(subcommand)]
        action: CatalogCommand,
    },
    /// Run every fixture of catalog entries.
    Regress {
        /// Entry as `NAME[:PARAM…]`; all entries with default parameters when omitted.
        name: Option<String>,
    },
}

/// `gradation` subcommands.
#[derive(Debug, Subcommand)]
pub enum GradationCommand {
    /// Validate a gradation.
    Verify {
        #[command(flatten)]
        alg: AlgebraArg,
        #[command(flatten)]
        grad: GradationArg,
    },
    /// Homogeneous spaces of `Λ^m g`.
    Decompose {
        #[command(flatten)]
        alg: AlgebraArg,
        #[command(flatten)]
        grad: GradationArg,
        /// Exterior grade.
        #[arg(long, short = 'm')]
        grade: usize,
    },
    /// Root test, limit degrees and bracket compatibility.
    Report {
        #[command(flatten)]
        alg: AlgebraArg,
        #[command(flatten)]
        grad: GradationArg,
    },
}

/// `ybe` subcommands.
#[derive(Debug, Subcommand)]
pub enum YbeCommand {
    /// `[r, r]_S`.
    Residual {
        #[command(flatten)]
        alg: AlgebraArg,
        /// Bivector expression.
        #[arg(short = 'r', long = "r", allow_hyphen_values = true)]
        r: String,
    },
    /// Decide the classical and modified Yang-Baxter equations.
    Certify {
        #[command(flatten)]
        alg: AlgebraArg,
        /// Bivector expression.
        #[arg(short = 'r', long = "r", allow_hyphen_values = true)]
        r: String,
        /// Expected verdict of the modified equation.
        #[arg(long, value_enum)]
        expect: Option<Expect>,
    },
    /// Matrix of `v ↦ [v, r]_S` and its cocycle check.
    Cocommutator {
        #[command(flatten)]
        alg: AlgebraArg,
        /// Bivector expression.
        #[arg(short = 'r', long = "r", allow_hyphen_values = true)]
        r: String,
    },
    /// Whether two bivectors define the same cocommutator.
    Same {
        #[command(flatten)]
        alg: AlgebraArg,
        /// First bivector.
        #[arg(long, allow_hyphen_values = true)]
        r1: String,
        /// Second bivector.
        #[arg(long, allow_hyphen_values = true)]
        r2: String,
    },
    /// Residuals of `Σ x_k b_k` over an integer grid.
    Grid {
        #[command(flatten)]
        alg: AlgebraArg,
        /// Comma-separated bivectors `b_k`; the canonical basis of `Λ² g` when omitted.
        #[arg(long, allow_hyphen_values = true)]
        basis: Option<String>,
        /// Smallest coordinate.
        #[arg(long, default_value_t = -2, allow_hyphen_values = true)]
        lo: i64,
        /// Largest coordinate.
        #[arg(long, default_value_t = 2, allow_hyphen_values = true)]
        hi: i64,
    },
}

/// `catalog` subcommands.
#[derive(Debug, Subcommand)]
pub enum CatalogCommand {
    /// Entries with dimensions, parameters and gradations.
    List,
    /// Algebra and gradation documents of an entry, instantiated at the given parameters.
    Get {
        /// Entry as `NAME[:PARAM…]`.
        name: String,
    },
    /// Stored fixtures of an entry.
    Fixtures {
        /// Entry name.
        name: String,
    },
}

/// Result of one subcommand before rendering.
struct Output {
    json: Value,
    text: String,
    status: i32,
}

impl Output {
    fn ok(json: Value, text: String) -> Self {
        Output { json, text, status: 0 }
    }

    fn with_status(mut self, failed: bool) -> Self {
        if failed {
            self.status = 1;
        }
        self
    }
}

/// Runs the tool on an argument list and returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    0
                }
                _ => {
                    let _ = write!(err, "{text}");
                    2
                }
            };
        }
    };
    let color = colored(out_is_terminal());
    match dispatch(&cli.command) {
        Ok(o) => {
            let rendered = match cli.format {
                Format::Json => to_pretty(&o.json),
                Format::Text => paint(&o.text, color),
            };
            let _ = writeln!(out, "{rendered}");
            o.status
        }
        Err(e) => {
            let code = if e.is_mathematical() { 1 } else { 2 };
            let _ = writeln!(err, "error: {e}");
            code
        }
    }
}

/// Entry point used by the binary.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(args, &mut stdout.lock(), &mut stderr.lock())
}

fn out_is_terminal() -> bool {
    std::io::stdout().is_terminal()
}

fn colored(terminal: bool) -> bool {
    match std::env::var("LIEB_COLOR").as_deref() {
        Ok("never") => false,
        _ => terminal,
    }
}

fn paint(text: &str, color: bool) -> String {
    if !color {
        return text.to_string();
    }
    text.replace("PASS", "\x1b[32mPASS\x1b[0m").replace("FAIL", "\x1b[31mFAIL\x1b[0m")
}

fn dispatch(cmd: &Command) -> Result<Output> {
    match cmd {
        Command::Check(a) => cmd_check(a),
        Command::Killing { alg, grade } => cmd_killing(alg, *grade),
        Command::Invariants { alg, grade } => cmd_invariants(alg, *grade),
        Command::Forms { alg, grade, arity, sym, antisym } => {
            let symmetry = match (sym, antisym) {
                (true, _) => Symmetry::Symmetric,
                (_, true) => Symmetry::Antisymmetric,
                _ => Symmetry::None,
            };
            cmd_forms(alg, *grade, *arity, symmetry)
        }
        Command::ExtendForm { alg, form, grade, method } => cmd_extend_form(alg, form, *grade, *method),
        Command::Gradation { action } => match action {
            GradationCommand::Verify { alg, grad } => cmd_gradation_verify(alg, grad),
            GradationCommand::Decompose { alg, grad, grade } => cmd_gradation_decompose(alg, grad, *grade),
            GradationCommand::Report { alg, grad } => cmd_gradation_report(alg, grad),
        },
        Command::Ybe { action } => match action {
            YbeCommand::Residual { alg, r } => cmd_residual(alg, r),
            YbeCommand::Certify { alg, r, expect } => cmd_certify(alg, r, *expect),
            YbeCommand::Cocommutator { alg, r } => cmd_cocommutator(alg, r),
            YbeCommand::Same { alg, r1, r2 } => cmd_same(alg, r1, r2),
            YbeCommand::Grid { alg, basis, lo, hi } => cmd_grid(alg, basis.as_deref(), *lo, *hi),
        },
        Command::OrbitDim { alg, element, reduced } => cmd_orbit_dim(alg, element, *reduced),
        Command::Reduced { alg, grade } => cmd_reduced(alg, *grade),
        Command::Derivations(a) => cmd_derivations(a),
        Command::Series(a) => cmd_series(a),
        Command::Bridge { alg, ideal, invariant } => cmd_bridge(alg, ideal.as_deref(), invariant.as_deref()),
        Command::Catalog { action } => match action {
            CatalogCommand::List => cmd_catalog_list(),
            CatalogCommand::Get { name } => cmd_catalog_get(name),
            CatalogCommand::Fixtures { name } => cmd_catalog_fixtures(name),
        },
        Command::Regress { name } => cmd_regress(name.as_deref()),
    }
}

/// A loaded algebra with the context needed to parse expressions.
struct Loaded {
    alg: LieAlgebra,
    symbols: Symbols,
    catalog: Option<catalog::CatalogEntry>,
}

impl Loaded {
    fn names(&self) -> &[String] {
        self.alg.basis_names()
    }

    fn parse(&self, text: &str) -> Result<MultiVector> {
        parse_multivector(self.names(), text, &self.symbols)
    }

    fn show(&self, w: &MultiVector) -> String {
        format_multivector(w, self.names())
    }

    fn gradation(&self, arg: &GradationArg) -> Result<Gradation> {
        match (&arg.gradation, &self.catalog) {
            (Some(g), Some(entry)) if !Path::new(g).exists() => entry.gradation(g).cloned(),
            (Some(path), _) => {
                let doc: GradationDoc = serde_json::from_str(&std::fs::read_to_string(path)?)?;
                load_gradation_with(&self.alg, &doc, &self.symbols)
            }
            (None, Some(entry)) => entry
                .gradations
                .first()
                .cloned()
                .ok_or_else(|| Error::UnknownName(format!("{} has no gradation", entry.doc.name))),
            (None, None) => Err(Error::Parse("--gradation is required for algebras loaded from files".into())),
        }
    }
}

fn parse_bindings(set: &[String]) -> Result<Symbols> {
    let mut symbols = Symbols::new();
    for s in set {
        let (k, v) = s.split_once('=').ok_or_else(|| Error::Parse(format!("`{s}` is not SYMBOL=VALUE")))?;
        let value = eval_scalar_expr(v, &symbols)?;
        symbols.insert(k.trim().to_string(), value);
    }
    Ok(symbols)
}

fn load(arg: &AlgebraArg) -> Result<Loaded> {
    let extra = parse_bindings(&arg.set)?;
    if let Some(reference) = arg.algebra.strip_prefix("catalog:") {
        let (name, params) = catalog::parse_reference(reference)?;
        let entry = catalog::entry(&name, &params)?;
        let mut symbols = entry.parameters.clone();
        symbols.extend(extra);
        return Ok(Loaded { alg: entry.algebra.clone(), symbols, catalog: Some(entry) });
    }
    let doc: AlgebraDoc = serde_json::from_str(&std::fs::read_to_string(&arg.algebra)?)?;
    let alg = load_algebra_with(&doc, &extra)?;
    Ok(Loaded { alg, symbols: extra, catalog: None })
}

fn check_grade(l: &Loaded, m: usize) -> Result<()> {
    if m > l.alg.dim() {
        return Err(Error::GradeOutOfRange { grade: m, dim: l.alg.dim() });
    }
    Ok(())
}

fn matrix_text(labels: &[String], m: &Matrix) -> String {
    let cells = m.to_strings();
    let width = cells.iter().flatten().map(String::len).chain(labels.iter().map(String::len)).max().unwrap_or(1);
    let mut s = format!("{:>w$} ", "", w = width);
    for l in labels.iter().take(m.cols()) {
        s.push_str(&format!(" {l:>width$}"));
    }
    s.push('\n');
    for (i, row) in cells.iter().enumerate() {
        let label = labels.get(i).map(String::as_str).unwrap_or("");
        s.push_str(&format!("{label:>width$} "));
        for c in row {
            s.push_str(&format!(" {c:>width$}"));
        }
        s.push('\n');
    }
    s.trim_end().to_string()
}

fn space_text(l: &Loaded, space: &Subspace, grade: usize) -> String {
    if space.dim() == 0 {
        return "{0}".into();
    }
    let elems: Vec<String> = space
        .basis()
        .iter()
        .map(|v| MultiVector::from_coords(l.alg.dim(), grade, v).map(|w| l.show(&w)).unwrap_or_default())
        .collect();
    format!("<{}>", elems.join(", "))
}

fn cmd_check(a: &AlgebraArg) -> Result<Output> {
    let l = load(a)?;
    let json = json!({
        "algebra": l.alg.name(),
        "dim": l.alg.dim(),
        "basis": l.names(),
        "brackets": l.alg.upper_brackets().len(),
        "jacobi": true,
    });
    let text = format!(
        "{}: dimension {}, {} brackets, Jacobi identity holds",
        l.alg.name(),
        l.alg.dim(),
        l.alg.upper_brackets().len()
    );
    Ok(Output::ok(json, text))
}

fn cmd_killing(a: &AlgebraArg, m: usize) -> Result<Output> {
    let l = load(a)?;
    check_grade(&l, m)?;
    let kappa = killing_form(&l.alg);
    let form = if m == 1 { kappa } else { extend_form_with(&kappa, m, &Limits::default())? };
    let matrix = form.to_matrix()?;
    let labels = grade_labels(l.names(), m);
    let json = json!({ "grade": m, "labels": labels, "matrix": matrix_json(&matrix) });
    Ok(Output::ok(json, matrix_text(&labels, &matrix)))
}

fn cmd_invariants(a: &AlgebraArg, m: usize) -> Result<Output> {
    let l = load(a)?;
    check_grade(&l, m)?;
    let space = invariant_subspace(&l.alg, m)?;
    let mut json = subspace_json(&space, l.names());
    json["grade"] = json!(m);
    let text = format!("invariants of grade {m}: dimension {} {}", space.dim(), space_text(&l, &space, m));
    Ok(Output::ok(json, text))
}

fn cmd_forms(a: &AlgebraArg, m: usize, k: usize, symmetry: Symmetry) -> Result<Output> {
    let l = load(a)?;
    check_grade(&l, m)?;
    let space = invariant_forms(&l.alg, m, k, symmetry)?;
    let size = binomial(l.alg.dim(), m);
    let labels = grade_labels(l.names(), m);
    let forms = forms_of(&space, size, m, k)?;
    let json = json!({
        "grade": m,
        "arity": k,
        "symmetry": symmetry.to_string(),
        "dim": space.dim(),
        "forms": forms.iter().map(|f| form_json(f, &labels)).collect::<Vec<_>>(),
    });
    let mut text = format!("invariant {symmetry} {k}-linear forms on grade {m}: dimension {}", space.dim());
    if k == 2 {
        for (i, f) in forms.iter().enumerate() {
            text.push_str(&format!("\nform {}:\n{}", i + 1, matrix_text(&labels, &f.to_matrix()?)));
        }
    }
    Ok(Output::ok(json, text))
}

fn read_form(l: &Loaded, source: &str) -> Result<MultiLinearForm> {
    if source == "killing" {
        return Ok(killing_form(&l.alg));
    }
    let value: Value = serde_json::from_str(&std::fs::read_to_string(source)?)?;
    let n = l.alg.dim();
    if let Some(m) = value.get("matrix") {
        let matrix = matrix_from_json(m)?;
        return MultiLinearForm::detect(2, 1, n, matrix.entries().to_vec());
    }
    let arity = value
        .get("arity")
        .and_then(Value::as_u64)
        .ok_or_else(|| Error::Parse("form needs `matrix` or `arity`".into()))?;
    let data = value
        .get("data")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Parse("form needs a flat `data` array".into()))?
        .iter()
        .map(|v| match v {
            Value::String(s) => eval_scalar_expr(s, &l.symbols),
            Value::Number(x) => {
                x.as_i64().map(int).ok_or_else(|| Error::Parse("entries must be integers or rational strings".into()))
            }
            _ => Err(Error::Parse("entries must be integers or rational strings".into())),
        })
        .collect::<Result<Vec<_>>>()?;
    MultiLinearForm::detect(arity as usize, 1, n, data)
}

fn cmd_extend_form(a: &AlgebraArg, source: &str, m: usize, method: Method) -> Result<Output> {
    let l = load(a)?;
    check_grade(&l, m)?;
    let b = read_form(&l, source)?;
    let limits = Limits::default();
    let ext = match method {
        Method::Auto => extend_form_with(&b, m, &limits)?,
        Method::Determinant => extend_form_determinant(&b, m)?,
        Method::PermutationSum => extend_form_permutation_sum(&b, m, &limits)?,
    };
    let labels = grade_labels(l.names(), m);
    let json = form_json(&ext, &labels);
    let text = if ext.arity() == 2 { matrix_text(&labels, &ext.to_matrix()?) } else { to_pretty(&json) };
    Ok(Output::ok(json, text))
}

fn cmd_gradation_verify(a: &AlgebraArg, g: &GradationArg) -> Result<Output> {
    let l = load(a)?;
    match l.gradation(g) {
        Ok(grad) => {
            let json = json!({ "valid": true, "gradation": serde_json::to_value(grad.to_doc())? });
            Ok(Output::ok(json, format!("PASS {grad}")))
        }
        Err(e) if e.is_mathematical() => {
            let json = json!({ "valid": false, "error": e.to_string() });
            Ok(Output::ok(json, format!("FAIL {e}")).with_status(true))
        }
        Err(e) => Err(e),
    }
}

fn cmd_gradation_decompose(a: &AlgebraArg, g: &GradationArg, m: usize) -> Result<Output> {
    let l = load(a)?;
    check_grade(&l, m)?;
    let grad = l.gradation(g)?;
    let dec = induced_decomposition(&l.alg, &grad, m)?;
    let mut fibers = Vec::new();
    let mut text = format!("grade {m} under {}: total dimension {}", grad.name(), dec.total_dim());
    for d in dec.degrees() {
        let blades: Vec<String> = dec.fiber_blades(d).iter().map(|w| l.show(w)).collect();
        text.push_str(&format!("\n{:>10}  {}  {}", format_degree(d), blades.len(), blades.join(", ")));
        fibers.push(json!({
            "degree": d.iter().map(format_scalar).collect::<Vec<_>>(),
            "dim": blades.len(),
            "elements": blades,
        }));
    }
    let json = json!({ "gradation": grad.name(), "grade": m, "total": dec.total_dim(), "fibers": fibers });
    Ok(Output::ok(json, text))
}

fn cmd_gradation_report(a: &AlgebraArg, g: &GradationArg) -> Result<Output> {
    let l = load(a)?;
    let grad = l.gradation(g)?;
    let report = gradation_report(&l.alg, &grad)?;
    let functionals: Map<String, Value> = report
        .root
        .functionals
        .iter()
        .map(|(d, f)| (format_degree(d), json!(f.iter().map(format_scalar).collect::<Vec<_>>())))
        .collect();
    let limits: Vec<String> = report.limit_degrees.iter().map(|d| format_degree(d)).collect();
    let json = json!({
        "gradation": grad.name(),
        "root": report.root.is_root,
        "reason": report.root.reason,
        "functionals": functionals,
        "limit_degrees": limits,
        "schouten_compatible": report.schouten_compatible,
    });
    let text = format!(
        "{}\nroot gradation: {}{}\nlimit degrees: {}\nSchouten compatible: {}",
        grad,
        report.root.is_root,
        report.root.reason.as_ref().map(|r| format!(" ({r})")).unwrap_or_default(),
        if limits.is_empty() { "none".to_string() } else { limits.join(" ") },
        report.schouten_compatible
    );
    Ok(Output::ok(json, text))
}

fn bivector(l: &Loaded, text: &str) -> Result<MultiVector> {
    let r = l.parse(text)?;
    if !r.is_zero() && !r.is_homogeneous_of(2) {
        return Err(Error::GradeMismatch { expected: 2, found: format!("{:?}", r.grades()) });
    }
    Ok(r)
}

fn cmd_residual(a: &AlgebraArg, r: &str) -> Result<Output> {
    let l = load(a)?;
    let r = bivector(&l, r)?;
    let res = crate::ybe::mcybe_residual(&l.alg, &r)?;
    Ok(Output::ok(json!({ "residual": terms_json(&res) }), format!("[r, r] = {}", l.show(&res))))
}

fn cmd_certify(a: &AlgebraArg, r: &str, expect: Option<Expect>) -> Result<Output> {
    let l = load(a)?;
    let r = bivector(&l, r)?;
    let v = certify_r(&l.alg, &r)?;
    let json = json!({
        "residual": terms_json(&v.residual),
        "is_cybe": v.is_cybe,
        "is_mcybe": v.is_mcybe,
        "witness": v.witness.as_ref().map(|w| w.iter().map(format_scalar).collect::<Vec<_>>()),
    });
    let verdict = if v.is_cybe {
        "solves the classical Yang-Baxter equation"
    } else if v.is_mcybe {
        "solves the modified Yang-Baxter equation"
    } else {
        "is not an r-matrix"
    };
    let failed = match expect {
        Some(Expect::Pass) => !v.is_mcybe,
        Some(Expect::Fail) => v.is_mcybe,
        None => false,
    };
    let mark = if expect.is_some() {
        if failed {
            "FAIL "
        } else {
            "PASS "
        }
    } else {
        ""
    };
    let text = format!("{mark}r {verdict}; [r, r] = {}", l.show(&v.residual));
    Ok(Output::ok(json, text).with_status(failed))
}

fn cmd_cocommutator(a: &AlgebraArg, r: &str) -> Result<Output> {
    let l = load(a)?;
    let r = bivector(&l, r)?;
    let delta = cocommutator(&l.alg, &r)?;
    let n = l.alg.dim();
    let mut images = Map::new();
    let mut text = String::new();
    for i in 0..n {
        let w = MultiVector::from_coords(n, 2, &delta.column(i))?;
        images.insert(l.names()[i].clone(), Value::String(l.show(&w)));
        text.push_str(&format!("delta({}) = {}\n", l.names()[i], l.show(&w)));
    }
    let cocycle = is_cocycle(&l.alg, &delta)?;
    text.push_str(&format!("cocycle: {cocycle}"));
    let json = json!({
        "rows": grade_labels(l.names(), 2),
        "columns": l.names(),
        "matrix": matrix_json(&delta),
        "images": images,
        "is_cocycle": cocycle,
    });
    Ok(Output::ok(json, text))
}

fn cmd_same(a: &AlgebraArg, r1: &str, r2: &str) -> Result<Output> {
    let l = load(a)?;
    let c = same_coproduct(&l.alg, &bivector(&l, r1)?, &bivector(&l, r2)?)?;
    let json = json!({
        "same": c.same(),
        "difference_invariant": c.difference_invariant,
        "matrices_equal": c.matrices_equal,
    });
    Ok(Output::ok(json, format!("same cocommutator: {}", c.same())))
}

fn split_list(l: &Loaded, text: &str) -> Result<Vec<MultiVector>> {
    text.split(',').filter(|s| !s.trim().is_empty()).map(|s| l.parse(s.trim())).collect()
}

fn cmd_grid(a: &AlgebraArg, basis: Option<&str>, lo: i64, hi: i64) -> Result<Output> {
    let l = load(a)?;
    if lo > hi {
        return Err(Error::Parse(format!("empty range {lo}..{hi}")));
    }
    let n = l.alg.dim();
    let basis = match basis {
        Some(b) => split_list(&l, b)?,
        None => crate::combinatorics::ExteriorBasis::new(n, 2)
            .tuples()
            .iter()
            .map(|t| MultiVector::blade(n, t))
            .collect::<Result<Vec<_>>>()?,
    };
    let points = integer_grid(basis.len(), lo, hi);
    let grid = residual_grid(&l.alg, &basis, &points)?;
    let mut rows = Vec::new();
    let mut text = String::new();
    let mut solutions = 0;
    for g in &grid {
        let coords: Vec<String> = g.point.iter().map(format_scalar).collect();
        solutions += usize::from(g.is_mcybe);
        text.push_str(&format!(
            "({})  {}  {}\n",
            coords.join(","),
            if g.is_mcybe { "r-matrix" } else { "-" },
            l.show(&g.residual)
        ));
        rows.push(json!({ "point": coords, "residual": terms_json(&g.residual), "is_mcybe": g.is_mcybe }));
    }
    text.push_str(&format!("{solutions} of {} points are r-matrices", grid.len()));
    let json = json!({
        "basis": basis.iter().map(|b| l.show(b)).collect::<Vec<_>>(),
        "points": rows,
        "solutions": solutions,
    });
    Ok(Output::ok(json, text))
}

fn cmd_orbit_dim(a: &AlgebraArg, element: &str, reduced: bool) -> Result<Output> {
    let l = load(a)?;
    let w = l.parse(element)?;
    let dim = if reduced {
        let m = w.grade().unwrap_or(2);
        let r = ReducedSpace::new(&l.alg, m)?;
        let class = r.project_multivector(&w)?;
        reduced_orbit_dimension(&l.alg, &r, &class)?
    } else {
        orbit_dimension(&l.alg, &w)?
    };
    let json = json!({ "element": l.show(&w), "reduced": reduced, "dim": dim });
    Ok(Output::ok(json, format!("orbit dimension of {}: {dim}", l.show(&w))))
}

fn cmd_reduced(a: &AlgebraArg, m: usize) -> Result<Output> {
    let l = load(a)?;
    check_grade(&l, m)?;
    let r = ReducedSpace::new(&l.alg, m)?;
    let labels = grade_labels(l.names(), m);
    let complement: Vec<String> = r.complement().iter().map(|&i| labels[i].clone()).collect();
    let actions = r.actions(&l.alg)?;
    let mut action_map = Map::new();
    let mut text = format!(
        "reduced space of grade {m}: dimension {}, classes of {}\ninvariants: {}",
        r.dim(),
        complement.join(", "),
        space_text(&l, r.invariant(), m)
    );
    for (i, act) in actions.iter().enumerate() {
        action_map.insert(l.names()[i].clone(), matrix_json(act));
        text.push_str(&format!("\naction of {}:\n{}", l.names()[i], matrix_text(&complement, act)));
    }
    let json = json!({
        "grade": m,
        "dim": r.dim(),
        "invariant": subspace_json(r.invariant(), l.names()),
        "classes": complement,
        "actions": action_map,
    });
    Ok(Output::ok(json, text))
}

fn cmd_derivations(a: &AlgebraArg) -> Result<Output> {
    let l = load(a)?;
    let d = derivation_algebra(&l.alg);
    let json = json!({
        "der": d.der.dim(),
        "inner": d.inner.dim(),
        "outer": d.der.dim() - d.inner.dim(),
        "inner_contained": d.inner.is_subspace_of(&d.der),
        "basis": rows_json(d.der.basis()),
    });
    let text = format!(
        "dim der = {}, dim inner = {}, quotient dimension {}",
        d.der.dim(),
        d.inner.dim(),
        d.der.dim() - d.inner.dim()
    );
    Ok(Output::ok(json, text))
}

fn cmd_series(a: &AlgebraArg) -> Result<Output> {
    let l = load(a)?;
    let s = structure_report(&l.alg);
    let dims = |v: &[Subspace]| v.iter().map(Subspace::dim).collect::<Vec<_>>();
    let json = json!({
        "center": subspace_json(&s.center, l.names()),
        "lower_central": dims(&s.lower_central),
        "derived": dims(&s.derived),
        "nilpotent": s.nilpotent,
        "solvable": s.solvable,
        "unimodular": s.unimodular,
        "nilpotency_index": s.nilpotency_index(),
    });
    let text = format!(
        "center: {}\nlower central dimensions: {:?}\nderived dimensions: {:?}\nnilpotent: {}, solvable: {}, unimodular: {}",
        space_text(&l, &s.center, 1),
        dims(&s.lower_central),
        dims(&s.derived),
        s.nilpotent,
        s.solvable,
        s.unimodular
    );
    Ok(Output::ok(json, text))
}

fn cmd_bridge(a: &AlgebraArg, ideal: Option<&str>, invariant: Option<&str>) -> Result<Output> {
    let l = load(a)?;
    let b = match (ideal, invariant) {
        (Some(text), None) => {
            let vectors = split_list(&l, text)?.iter().map(|v| v.coords(1)).collect::<Result<Vec<_>>>()?;
            let h = Subspace::span(Ambient::Algebra, l.alg.dim(), &vectors);
            let report = ideal_report(&l.alg, &h)?;
            if !report.is_ideal {
                return Err(Error::NotTracelessIdeal);
            }
            ideal_to_invariant(&l.alg, &h)?
        }
        (None, Some(text)) => invariant_to_ideal(&l.alg, &l.parse(text)?)?,
        _ => return Err(Error::Parse("give exactly one of --ideal and --invariant".into())),
    };
    let traces: Vec<String> = b.restricted_traces.iter().map(format_scalar).collect();
    let json = json!({
        "ideal": subspace_json(&b.ideal, l.names()),
        "omega": l.show(&b.omega),
        "restricted_traces": traces,
        "omega_invariant": b.omega_invariant,
    });
    let text = format!("ideal {} <-> invariant {}", space_text(&l, &b.ideal, 1), l.show(&b.omega));
    Ok(Output::ok(json, text))
}

fn cmd_catalog_list() -> Result<Output> {
    let list = catalog::list()?;
    let mut text = String::new();
    for s in &list {
        let params = if s.parameters.is_empty() { String::new() } else { format!(" ({})", s.parameters.join(", ")) };
        text.push_str(&format!("{:<12} dim {:>2}{}  {}\n", s.name, s.dim, params, s.description));
    }
    Ok(Output::ok(serde_json::to_value(&list)?, text.trim_end().to_string()))
}

fn cmd_catalog_get(reference: &str) -> Result<Output> {
    let (name, params) = catalog::parse_reference(reference)?;
    let e = catalog::entry(&name, &params)?;
    let params: BTreeMap<String, String> = e.parameters.iter().map(|(k, v)| (k.clone(), format_scalar(v))).collect();
    let json = json!({
        "name": e.doc.name,
        "title": e.doc.title,
        "description": e.doc.description,
        "parameters": params,
        "metadata": e.doc.metadata,
        "algebra": serde_json::to_value(e.algebra.to_doc())?,
        "gradations": e.gradations.iter().map(|g| serde_json::to_value(g.to_doc())).collect::<std::result::Result<Vec<_>, _>>()?,
    });
    let mut text = format!("{} ({}), dimension {}\n", e.doc.title, e.doc.name, e.algebra.dim());
    for (&(i, j), res) in e.algebra.upper_brackets() {
        let w = MultiVector::from_terms(e.algebra.dim(), res.iter().map(|(k, c)| (vec![*k], c.clone())))?;
        text.push_str(&format!(
            "[{}, {}] = {}\n",
            e.algebra.basis_names()[i],
            e.algebra.basis_names()[j],
            format_multivector(&w, e.algebra.basis_names())
        ));
    }
    for g in &e.gradations {
        text.push_str(&format!("gradation {g}\n"));
    }
    Ok(Output::ok(json, text.trim_end().to_string()))
}

fn cmd_catalog_fixtures(name: &str) -> Result<Output> {
    let f = catalog::expected_results(name)?;
    let json = serde_json::to_value(&f)?;
    let text = to_pretty(&json);
    Ok(Output::ok(json, text))
}

fn cmd_regress(name: Option<&str>) -> Result<Output> {
    let targets: Vec<(String, Vec<Scalar>)> = match name {
        Some(reference) => vec![catalog::parse_reference(reference)?],
        None => catalog::names().into_iter().map(|n| (n.to_string(), Vec::new())).collect(),
    };
    let mut reports = Vec::new();
    let mut text = String::new();
    let mut failed = false;
    for (n, p) in &targets {
        let report = catalog::regress(n, p)?;
        failed |= !report.passed();
        for c in &report.checks {
            let mark = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Skip => "SKIP",
            };
            text.push_str(&format!("{mark} {}/{}  {}\n", report.entry, c.id, c.detail));
        }
        reports.push(report);
    }
    let total: usize = reports.iter().map(|r| r.checks.len()).sum();
    let failures: usize = reports.iter().map(|r| r.count(Status::Fail)).sum();
    text.push_str(&format!("{} checks, {failures} failed", total));
    let json = json!({
        "passed": !failed,
        "checks": total,
        "failures": failures,
        "reports": serde_json::to_value(&reports)?,
    });
    Ok(Output::ok(json, text).with_status(failed))
}
