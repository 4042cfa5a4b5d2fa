//! Shared helpers for the integration tests: catalog access, random
//! generators and small independent oracles written directly from the
//! definitions.

#![allow(dead_code)]

use std::collections::BTreeMap;
use std::sync::OnceLock;

use lieb::catalog;
use lieb::gradation::Gradation;
use lieb::io::{parse_multivector, Symbols};
use lieb::scalar::{frac, int, Scalar};
use lieb::{LieAlgebra, Matrix, MultiVector};
use num_traits::{One, Zero};
use proptest::prelude::*;

pub mod props;

/// Every catalog entry at its default parameters.
pub fn catalog_entries() -> &'static [(String, LieAlgebra, Vec<Gradation>)] {
    static CELL: OnceLock<Vec<(String, LieAlgebra, Vec<Gradation>)>> = OnceLock::new();
    CELL.get_or_init(|| {
        catalog::names()
            .into_iter()
            .map(|n| {
                let (alg, grads) = catalog::get_algebra(n, &[]).unwrap();
                (n.to_string(), alg, grads)
            })
            .collect()
    })
}

/// Catalog algebra by name at default parameters.
pub fn algebra(name: &str) -> LieAlgebra {
    catalog::get_algebra(name, &[]).unwrap().0
}

/// Parses a multivector expression in the basis of `alg`.
pub fn mv(alg: &LieAlgebra, text: &str) -> MultiVector {
    parse_multivector(alg.basis_names(), text, &Symbols::new()).unwrap()
}

/// Parses a multivector expression with symbol bindings.
pub fn mv_with(alg: &LieAlgebra, text: &str, symbols: &[(&str, Scalar)]) -> MultiVector {
    let symbols: Symbols = symbols.iter().map(|(k, v)| (k.to_string(), v.clone())).collect();
    parse_multivector(alg.basis_names(), text, &symbols).unwrap()
}

/// Integer matrix from rows.
pub fn imat(rows: &[&[i64]]) -> Matrix {
    Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect())
}

/// Small rationals with numerators in `-4..=4` and denominators in `1..=3`.
pub fn small_rational() -> impl Strategy<Value = Scalar> {
    (-4i64..=4, 1i64..=3).prop_map(|(n, d)| frac(n, d))
}

/// Coordinate vectors of the given length.
pub fn coords(len: usize) -> impl Strategy<Value = Vec<Scalar>> {
    proptest::collection::vec(small_rational(), len)
}

/// Deterministic seeded RNG for tests that sample outside proptest.
pub fn rng(seed: u64) -> rand_chacha::ChaCha8Rng {
    use rand::SeedableRng;
    rand_chacha::ChaCha8Rng::seed_from_u64(seed)
}

/// A random small rational drawn from `rng`.
pub fn random_rational<R: rand::Rng>(rng: &mut R) -> Scalar {
    frac(rng.gen_range(-5..=5), rng.gen_range(1..=4))
}

/// Number of inversions of a list of distinct indices.
fn inversions(list: &[usize]) -> usize {
    let mut count = 0;
    for i in 0..list.len() {
        for j in i + 1..list.len() {
            if list[i] > list[j] {
                count += 1;
            }
        }
    }
    count
}

/// Wedge product of vectors, expanded multilinearly over the standard basis.
pub fn wedge_vectors(n: usize, vectors: &[Vec<Scalar>]) -> BTreeMap<Vec<usize>, Scalar> {
    let mut out: BTreeMap<Vec<usize>, Scalar> = BTreeMap::new();
    let mut stack: Vec<(Vec<usize>, Scalar)> = vec![(Vec::new(), Scalar::one())];
    for v in vectors {
        let mut next = Vec::new();
        for (idx, c) in &stack {
            for (k, x) in v.iter().enumerate().take(n) {
                if x.is_zero() || idx.contains(&k) {
                    continue;
                }
                let mut idx2 = idx.clone();
                idx2.push(k);
                next.push((idx2, c * x));
            }
        }
        stack = next;
    }
    for (idx, c) in stack {
        let mut sorted = idx.clone();
        sorted.sort();
        let signed = if inversions(&idx).is_multiple_of(2) { c } else { -c };
        *out.entry(sorted).or_insert_with(Scalar::zero) += signed;
    }
    out.retain(|_, c| !c.is_zero());
    out
}

fn unit(n: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(); n];
    v[i] = Scalar::one();
    v
}

/// Structure constants read through `bracket` on basis vectors.
fn basis_bracket(alg: &LieAlgebra, i: usize, j: usize) -> Vec<Scalar> {
    let n = alg.dim();
    alg.bracket(&unit(n, i), &unit(n, j))
}

/// Schouten bracket of two multivectors from the blade expansion
/// `[x_1…x_p, y_1…y_q] = Σ (-1)^{i+j} [x_i, y_j] ∧ x_1…x̂_i…x_p ∧ y_1…ŷ_j…y_q`.
pub fn schouten_oracle(alg: &LieAlgebra, a: &MultiVector, b: &MultiVector) -> BTreeMap<Vec<usize>, Scalar> {
    let n = alg.dim();
    let mut out: BTreeMap<Vec<usize>, Scalar> = BTreeMap::new();
    for (x, cx) in a.terms() {
        for (y, cy) in b.terms() {
            for (i, &xi) in x.iter().enumerate() {
                for (j, &yj) in y.iter().enumerate() {
                    let mut vectors = vec![basis_bracket(alg, xi, yj)];
                    vectors.extend(x.iter().enumerate().filter(|&(k, _)| k != i).map(|(_, &k)| unit(n, k)));
                    vectors.extend(y.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, &k)| unit(n, k)));
                    let sign = if (i + j) % 2 == 0 { Scalar::one() } else { -Scalar::one() };
                    for (t, c) in wedge_vectors(n, &vectors) {
                        *out.entry(t).or_insert_with(Scalar::zero) += &sign * cx * cy * c;
                    }
                }
            }
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// Terms of a multivector as an owned map.
pub fn terms(w: &MultiVector) -> BTreeMap<Vec<usize>, Scalar> {
    w.terms().clone()
}

/// Killing form from its definition `κ(x, y) = Tr(ad_x ad_y)`, with `ad` built from `bracket`.
pub fn killing_oracle(alg: &LieAlgebra) -> Vec<Vec<Scalar>> {
    let n = alg.dim();
    let ad = |i: usize| -> Vec<Vec<Scalar>> {
        // column j is [e_i, e_j]
        let cols: Vec<Vec<Scalar>> = (0..n).map(|j| basis_bracket(alg, i, j)).collect();
        (0..n).map(|r| (0..n).map(|c| cols[c][r].clone()).collect()).collect()
    };
    let ads: Vec<_> = (0..n).map(ad).collect();
    let trace = |a: &Vec<Vec<Scalar>>, b: &Vec<Vec<Scalar>>| {
        let mut t = Scalar::zero();
        for r in 0..n {
            for s in 0..n {
                t += &a[r][s] * &b[s][r];
            }
        }
        t
    };
    ads.iter().map(|a| ads.iter().map(|b| trace(a, b)).collect()).collect()
}

/// Gram determinant oracle for the extension of a bilinear form to blades,
/// expanded by the Leibniz formula.
pub fn gram_oracle(b: &[Vec<Scalar>], x: &[usize], y: &[usize]) -> Scalar {
    fn perms(k: usize) -> Vec<Vec<usize>> {
        if k == 0 {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        for p in perms(k - 1) {
            for pos in 0..=p.len() {
                let mut q = p.clone();
                q.insert(pos, k - 1);
                out.push(q);
            }
        }
        out
    }
    let mut total = Scalar::zero();
    for p in perms(x.len()) {
        let mut term = Scalar::one();
        for (r, &c) in p.iter().enumerate() {
            term *= &b[x[r]][y[c]];
        }
        total += if inversions(&p).is_multiple_of(2) { term } else { -term };
    }
    total
}
