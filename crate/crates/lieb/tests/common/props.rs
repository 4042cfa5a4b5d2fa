//! Property suites shared by the `properties` and `acceptance` targets.
//!
//! Each suite runs a proptest runner for the requested number of cases and
//! reports the first counterexample as a string.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use lieb::combinatorics::combinations;
use lieb::exterior::{schouten, wedge};
use lieb::forms::{
    extend_form, extend_form_determinant, extend_form_permutation_sum, extended_pairing, forms_of, invariant_forms,
    MultiLinearForm,
};
use lieb::gradation::{induced_decomposition, Degree};
use lieb::invariants::{invariant_subspace, ReducedSpace};
use lieb::linalg::Subspace;
use lieb::scalar::{one, Scalar};
use lieb::ybe::{ce_differential, cocommutator, same_coproduct, Cochain, CoefficientModule};
use lieb::{killing_form, LieAlgebra, Limits, MultiVector, Symmetry};
use num_traits::Zero;
use proptest::prelude::*;
use proptest::test_runner::{Config, TestCaseError, TestRunner};

use super::{catalog_entries, schouten_oracle, small_rational, terms};

fn runner(cases: u32) -> TestRunner {
    TestRunner::new(Config { cases, failure_persistence: None, ..Config::default() })
}

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), TestCaseError> {
    if cond {
        Ok(())
    } else {
        Err(TestCaseError::fail(msg()))
    }
}

fn report(result: Result<(), proptest::test_runner::TestError<impl std::fmt::Debug>>) -> Result<(), String> {
    result.map_err(|e| e.to_string())
}

/// Sparse random multivector of grade `m` in dimension `n` with one to three terms.
pub fn sparse_mv(n: usize, m: usize) -> BoxedStrategy<MultiVector> {
    let tuples = combinations(n, m);
    let len = tuples.len();
    proptest::collection::vec((0..len, small_rational()), 1..=3)
        .prop_map(move |t| MultiVector::from_terms(n, t.into_iter().map(|(i, c)| (tuples[i].clone(), c))).unwrap())
        .boxed()
}

fn entry_index() -> impl Strategy<Value = usize> {
    0..catalog_entries().len()
}

fn alg(i: usize) -> &'static LieAlgebra {
    &catalog_entries()[i].1
}

fn sign(k: usize) -> Scalar {
    if k.is_multiple_of(2) {
        one()
    } else {
        -one()
    }
}

fn add(a: &MultiVector, b: &MultiVector) -> MultiVector {
    a.checked_add(b).unwrap()
}

/// Pairs `(algebra, a, b)` with grades between 1 and 3.
fn pair() -> impl Strategy<Value = (usize, [usize; 2], MultiVector, MultiVector)> {
    (entry_index(), 1usize..=3, 1usize..=3).prop_flat_map(|(i, p, q)| {
        let n = alg(i).dim();
        let (p, q) = (p.min(n), q.min(n));
        (Just(i), Just([p, q]), sparse_mv(n, p), sparse_mv(n, q))
    })
}

fn triple() -> impl Strategy<Value = (usize, [usize; 3], MultiVector, MultiVector, MultiVector)> {
    (entry_index(), 1usize..=2, 1usize..=2, 1usize..=2).prop_flat_map(|(i, p, q, s)| {
        let n = alg(i).dim();
        (Just(i), Just([p, q, s]), sparse_mv(n, p), sparse_mv(n, q), sparse_mv(n, s))
    })
}

/// The Schouten bracket agrees with the blade-expansion oracle and is graded antisymmetric.
pub fn schouten_antisymmetry(cases: u32) -> Result<(), String> {
    report(runner(cases).run(&pair(), |(i, [p, q], a, b)| {
        let g = alg(i);
        let ab = schouten(g, &a, &b).unwrap();
        let ba = schouten(g, &b, &a).unwrap();
        check(terms(&ab) == schouten_oracle(g, &a, &b), || format!("oracle mismatch on {}", g.name()))?;
        let s = -sign((p - 1) * (q - 1));
        check(ab == ba.scaled(&s), || format!("antisymmetry fails on {}", g.name()))
    }))
}

/// `[a, b ∧ c] = [a, b] ∧ c + (-1)^{(p-1)q} b ∧ [a, c]`.
pub fn schouten_leibniz(cases: u32) -> Result<(), String> {
    report(runner(cases).run(&triple(), |(i, [p, q, _], a, b, c)| {
        let g = alg(i);
        let lhs = schouten(g, &a, &wedge(&b, &c).unwrap()).unwrap();
        let first = wedge(&schouten(g, &a, &b).unwrap(), &c).unwrap();
        let second = wedge(&b, &schouten(g, &a, &c).unwrap()).unwrap().scaled(&sign((p - 1) * q));
        check(lhs == add(&first, &second), || format!("Leibniz rule fails on {}", g.name()))
    }))
}

/// Graded Jacobi identity.
pub fn schouten_jacobi(cases: u32) -> Result<(), String> {
    report(runner(cases).run(&triple(), |(i, [p, q, s], a, b, c)| {
        let g = alg(i);
        let br = |x: &MultiVector, y: &MultiVector| schouten(g, x, y).unwrap();
        let t1 = br(&a, &br(&b, &c)).scaled(&sign((p - 1) * (s - 1)));
        let t2 = br(&b, &br(&c, &a)).scaled(&sign((q - 1) * (p - 1)));
        let t3 = br(&c, &br(&a, &b)).scaled(&sign((s - 1) * (q - 1)));
        check(add(&add(&t1, &t2), &t3).is_zero(), || format!("Jacobi identity fails on {}", g.name()))
    }))
}

/// Homogeneous elements of degrees `α`, `β` bracket into degree `α ⋆ β`.
pub fn degree_compatibility(cases: u32) -> Result<(), String> {
    let graded: Vec<(usize, usize)> =
        catalog_entries().iter().enumerate().flat_map(|(i, e)| (0..e.2.len()).map(move |k| (i, k))).collect();
    let strategy = (0..graded.len(), 1usize..=3, 1usize..=3).prop_flat_map(move |(c, p, q)| {
        let (i, k) = graded[c];
        let n = alg(i).dim();
        let tp = combinations(n, p.min(n));
        let tq = combinations(n, q.min(n));
        (Just((i, k)), proptest::sample::select(tp), proptest::sample::select(tq), small_rational(), small_rational())
    });
    report(runner(cases).run(&strategy, |((i, k), x, y, cx, cy)| {
        let (g, grad) = (alg(i), &catalog_entries()[i].2[k]);
        let n = g.dim();
        let a = MultiVector::from_terms(n, [(x.clone(), cx)]).unwrap();
        let b = MultiVector::from_terms(n, [(y.clone(), cy)]).unwrap();
        let ab = schouten(g, &a, &b).unwrap();
        if ab.is_zero() {
            return Ok(());
        }
        let expected = grad.group().add(&grad.degree_of(&x), &grad.degree_of(&y));
        check(grad.homogeneous_degree(&ab) == Some(expected), || {
            format!("degree of [{x:?}, {y:?}] on {} under {}", g.name(), grad.name())
        })
    }))
}

/// Coordinates of a multivector of grade `m`, with zero for the zero element.
fn coords_of(w: &MultiVector, n: usize, m: usize) -> Vec<Scalar> {
    let tuples = combinations(n, m);
    tuples.iter().map(|t| w.coefficient(t)).collect()
}

/// `ρ_v` applied to a grade-`m` coordinate vector, from the Schouten oracle.
fn act(g: &LieAlgebra, v: &[Scalar], m: usize, x: &[Scalar]) -> Vec<Scalar> {
    let n = g.dim();
    let vm = MultiVector::from_coords(n, 1, v).unwrap();
    let xm = MultiVector::from_coords(n, m, x).unwrap();
    let image = MultiVector::from_terms(n, schouten_oracle(g, &vm, &xm)).unwrap();
    coords_of(&image, n, m)
}

type FormCase = (usize, usize, usize, Symmetry, Vec<MultiLinearForm>);

fn form_cases() -> &'static [FormCase] {
    static CELL: OnceLock<Vec<FormCase>> = OnceLock::new();
    CELL.get_or_init(|| {
        let mut cases = Vec::new();
        for (i, (_, g, _)) in catalog_entries().iter().enumerate() {
            let n = g.dim();
            let mut shapes = vec![(1, 2)];
            if n <= 6 {
                shapes.push((2, 2));
            }
            if n <= 3 {
                shapes.push((1, 3));
                shapes.push((3, 2));
            }
            for (m, k) in shapes {
                for sym in [Symmetry::None, Symmetry::Symmetric, Symmetry::Antisymmetric] {
                    let space = invariant_forms(g, m, k, sym).unwrap();
                    let size = lieb::combinatorics::binomial(n, m);
                    let forms = forms_of(&space, size, m, k).unwrap();
                    cases.push((i, m, k, sym, forms));
                }
            }
        }
        cases
    })
}

/// Every form produced by the solver satisfies `Σ_i b(x_1, …, ρ_v x_i, …, x_k) = 0`
/// and has the requested symmetry.
pub fn form_invariance(cases: u32) -> Result<(), String> {
    let strategy = (0..form_cases().len()).prop_flat_map(|c| {
        let (i, m, k, _, ref forms) = form_cases()[c];
        let n = alg(i).dim();
        let size = lieb::combinatorics::binomial(n, m);
        (
            Just(c),
            proptest::collection::vec(small_rational(), forms.len()),
            super::coords(n),
            proptest::collection::vec(super::coords(size), k),
        )
    });
    report(runner(cases).run(&strategy, |(c, weights, v, xs)| {
        let (i, m, k, sym, ref forms) = form_cases()[c];
        let g = alg(i);
        let mut combo = vec![Scalar::zero(); forms.first().map_or(0, |f| f.data().len())];
        for (f, w) in forms.iter().zip(&weights) {
            check(f.has_symmetry(sym), || format!("{} form lacks {sym} symmetry", g.name()))?;
            for (acc, x) in combo.iter_mut().zip(f.data()) {
                *acc += w * x;
            }
        }
        if forms.is_empty() {
            return Ok(());
        }
        let size = xs[0].len();
        let b = MultiLinearForm::new(k, m, size, combo, Symmetry::None).unwrap();
        let mut total = Scalar::zero();
        for slot in 0..k {
            let moved = act(g, &v, m, &xs[slot]);
            let args: Vec<&[Scalar]> =
                (0..k).map(|s| if s == slot { moved.as_slice() } else { xs[s].as_slice() }).collect();
            total += b.evaluate(&args).unwrap();
        }
        check(total.is_zero(), || format!("form on {} (m={m}, k={k}) is not invariant", g.name()))
    }))
}

fn random_bilinear() -> impl Strategy<Value = (usize, Vec<Scalar>, usize)> {
    (2usize..=4).prop_flat_map(|n| (Just(n), super::coords(n * n), 1..=n.min(3)))
}

/// The determinant path, the permutation sum and a Leibniz-formula Gram oracle agree.
pub fn extension_paths_agree(cases: u32) -> Result<(), String> {
    report(runner(cases).run(&random_bilinear(), |(n, data, m)| {
        let b = MultiLinearForm::new(2, 1, n, data.clone(), Symmetry::None).unwrap();
        let det = extend_form_determinant(&b, m).unwrap();
        let perm = extend_form_permutation_sum(&b, m, &Limits::default()).unwrap();
        check(det == perm, || format!("paths differ for n={n}, m={m}"))?;
        let rows: Vec<Vec<Scalar>> = data.chunks(n).map(|r| r.to_vec()).collect();
        let tuples = combinations(n, m);
        for (r, x) in tuples.iter().enumerate() {
            for (c, y) in tuples.iter().enumerate() {
                check(det.entry(&[r, c]) == &super::gram_oracle(&rows, x, y), || format!("Gram entry ({r},{c})"))?;
            }
        }
        Ok(())
    }))
}

fn trace_cases() -> &'static [(usize, Symmetry, MultiLinearForm)] {
    static CELL: OnceLock<Vec<(usize, Symmetry, MultiLinearForm)>> = OnceLock::new();
    CELL.get_or_init(|| {
        let mut out = Vec::new();
        for (i, (_, g, _)) in catalog_entries().iter().enumerate() {
            if g.dim() > 6 {
                continue;
            }
            for sym in [Symmetry::Symmetric, Symmetry::Antisymmetric] {
                out.push((i, sym, lieb::algebra::trace_form(g, 3, sym).unwrap()));
            }
        }
        out
    })
}

/// Extensions of trilinear forms to `Λ^m` with `m > 1` vanish.
pub fn odd_arity_vanishing(cases: u32) -> Result<(), String> {
    let random_form = (super::coords(27), 2usize..=3).prop_map(|(d, m)| (None, d, m));
    let trace = (0..trace_cases().len(), 2usize..=3).prop_map(|(c, m)| (Some(c), Vec::new(), m));
    let strategy = prop_oneof![random_form, trace];
    report(runner(cases).run(&strategy, |(case, data, m)| {
        let b = match case {
            Some(c) => trace_cases()[c].2.clone(),
            None => MultiLinearForm::new(3, 1, 3, data, Symmetry::None).unwrap(),
        };
        if m > b.size() {
            return Ok(());
        }
        let ext = extend_form(&b, m).unwrap();
        check(ext.is_zero(), || format!("extension to grade {m} does not vanish"))
    }))
}

type Fibers = Vec<BTreeMap<Degree, Vec<MultiVector>>>;

fn so22_fibers() -> &'static (LieAlgebra, MultiLinearForm, Fibers) {
    static CELL: OnceLock<(LieAlgebra, MultiLinearForm, Fibers)> = OnceLock::new();
    CELL.get_or_init(|| {
        let (g, grads) = lieb::catalog::get_algebra("so22", &[]).unwrap();
        let fibers = (1..=3)
            .map(|m| {
                let dec = induced_decomposition(&g, &grads[0], m).unwrap();
                dec.degrees().into_iter().map(|d| (d.clone(), dec.fiber_blades(d))).collect()
            })
            .collect();
        let kappa = killing_form(&g);
        (g, kappa, fibers)
    })
}

fn combine(blades: &[MultiVector], weights: &[Scalar]) -> MultiVector {
    blades.iter().zip(weights).fold(MultiVector::zero(blades[0].dim()), |acc, (b, w)| add(&acc, &b.scaled(w)))
}

/// On `so(2,2)` the extended Killing form pairs homogeneous elements to zero unless their degrees cancel.
pub fn cross_degree_orthogonality(cases: u32) -> Result<(), String> {
    let strategy = (1usize..=3).prop_flat_map(|m| {
        let fibers = &so22_fibers().2[m - 1];
        let degrees: Vec<Degree> = fibers.keys().cloned().collect();
        (
            Just(m),
            proptest::sample::select(degrees.clone()),
            proptest::sample::select(degrees),
            super::coords(6),
            super::coords(6),
        )
    });
    report(runner(cases).run(&strategy, |(m, a, b, wa, wb)| {
        let (_, kappa, fibers) = so22_fibers();
        let fa = &fibers[m - 1][&a];
        let fb = &fibers[m - 1][&b];
        let x = combine(fa, &wa[..fa.len().min(6)]);
        let y = combine(fb, &wb[..fb.len().min(6)]);
        let sum: Vec<Scalar> = a.iter().zip(&b).map(|(p, q)| p + q).collect();
        let value = extended_pairing(kappa, &x, &y).unwrap();
        if sum.iter().all(Zero::is_zero) {
            return Ok(());
        }
        check(value.is_zero(), || format!("degrees {a:?} and {b:?} pair nontrivially"))
    }))
}

type ModuleCase = (usize, CoefficientModule, CoefficientModule, lieb::Matrix);

fn module_cases() -> &'static [ModuleCase] {
    static CELL: OnceLock<Vec<ModuleCase>> = OnceLock::new();
    CELL.get_or_init(|| {
        catalog_entries()
            .iter()
            .enumerate()
            .map(|(i, (_, g, _))| {
                let full = CoefficientModule::exterior(g, 2).unwrap();
                let r = ReducedSpace::new(g, 2).unwrap();
                let reduced = CoefficientModule::reduced(g, &r).unwrap();
                (i, full, reduced, r.projection_matrix())
            })
            .collect()
    })
}

fn cochain_strategy() -> impl Strategy<Value = (usize, usize, Vec<(usize, Vec<Scalar>)>)> {
    (0..module_cases().len(), 0usize..=2).prop_flat_map(|(c, q)| {
        let g = alg(module_cases()[c].0);
        let keys = combinations(g.dim(), q).len();
        let mdim = module_cases()[c].1.dim();
        (Just(c), Just(q), proptest::collection::vec((0..keys, super::coords(mdim)), 1..=2))
    })
}

fn build_cochain(n: usize, q: usize, mdim: usize, values: &[(usize, Vec<Scalar>)]) -> Cochain {
    let keys = combinations(n, q);
    let mut map = BTreeMap::new();
    for (k, v) in values {
        map.insert(keys[*k].clone(), v.clone());
    }
    Cochain::from_values(q, mdim, map).unwrap()
}

/// `d ∘ d = 0` on cochains with values in `Λ²g` and in the reduced space.
pub fn differential_squares_to_zero(cases: u32) -> Result<(), String> {
    report(runner(cases).run(&cochain_strategy(), |(c, q, values)| {
        let (i, ref full, ref reduced, ref p) = module_cases()[c];
        let g = alg(i);
        let cf = build_cochain(g.dim(), q, full.dim(), &values);
        let dd = ce_differential(g, full, &ce_differential(g, full, &cf).unwrap()).unwrap();
        check(dd.is_zero(), || format!("d² ≠ 0 on {} in degree {q}", g.name()))?;
        let cr = cf.map_values(p);
        let dd = ce_differential(g, reduced, &ce_differential(g, reduced, &cr).unwrap()).unwrap();
        check(dd.is_zero(), || format!("reduced d² ≠ 0 on {} in degree {q}", g.name()))
    }))
}

/// The projection onto the reduced space commutes with the differentials.
pub fn naturality_square(cases: u32) -> Result<(), String> {
    report(runner(cases).run(&cochain_strategy(), |(c, q, values)| {
        let (i, ref full, ref reduced, ref p) = module_cases()[c];
        let g = alg(i);
        let cf = build_cochain(g.dim(), q, full.dim(), &values);
        let down_then_d = ce_differential(g, reduced, &cf.map_values(p)).unwrap();
        let d_then_down = ce_differential(g, full, &cf).unwrap().map_values(p);
        check(down_then_d == d_then_down, || format!("square fails on {} in degree {q}", g.name()))
    }))
}

fn invariant_bivectors() -> &'static [Subspace] {
    static CELL: OnceLock<Vec<Subspace>> = OnceLock::new();
    CELL.get_or_init(|| catalog_entries().iter().map(|(_, g, _)| invariant_subspace(g, 2).unwrap()).collect())
}

/// `same_coproduct` holds exactly when the cocommutator matrices coincide.
pub fn coproduct_equivalence(cases: u32) -> Result<(), String> {
    let strategy = entry_index().prop_flat_map(|i| {
        let n = alg(i).dim();
        (Just(i), sparse_mv(n, 2), sparse_mv(n, 2), super::coords(3), any::<bool>())
    });
    report(runner(cases).run(&strategy, |(i, r1, noise, weights, perturb)| {
        let g = alg(i);
        let inv = &invariant_bivectors()[i];
        let mut r2 = r1.clone();
        for (v, w) in inv.basis().iter().zip(&weights) {
            r2 = add(&r2, &MultiVector::from_coords(g.dim(), 2, v).unwrap().scaled(w));
        }
        if perturb {
            r2 = add(&r2, &noise);
        }
        let cmp = same_coproduct(g, &r1, &r2).unwrap();
        let equal = cocommutator(g, &r1).unwrap() == cocommutator(g, &r2).unwrap();
        check(cmp.same() == equal && cmp.difference_invariant == cmp.matrices_equal, || {
            format!("coproduct comparison disagrees on {}", g.name())
        })?;
        check(perturb || equal, || format!("invariant shift changed the cocommutator on {}", g.name()))
    }))
}

/// A property suite run with the given number of cases.
pub type Suite = fn(u32) -> Result<(), String>;

/// Every suite with a display name.
pub fn all() -> Vec<(&'static str, Suite)> {
    vec![
        ("schouten graded antisymmetry", schouten_antisymmetry),
        ("schouten Leibniz rule", schouten_leibniz),
        ("schouten graded Jacobi identity", schouten_jacobi),
        ("gradation degree compatibility", degree_compatibility),
        ("invariance of solved forms", form_invariance),
        ("determinant and permutation-sum extensions", extension_paths_agree),
        ("odd-arity extensions vanish", odd_arity_vanishing),
        ("cross-degree orthogonality on so(2,2)", cross_degree_orthogonality),
        ("d squared is zero", differential_squares_to_zero),
        ("reduction commutes with d", naturality_square),
        ("same coproduct iff equal cocommutators", coproduct_equivalence),
    ]
}
