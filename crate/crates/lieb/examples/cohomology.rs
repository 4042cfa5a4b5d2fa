//! The Chevalley-Eilenberg differential with coefficients in exterior powers
//! and in reduced spaces.
//!
//! Run with `cargo run --example cohomology`.

use lieb::catalog;
use lieb::combinatorics::binomial;
use lieb::linalg::{Ambient, Matrix, Subspace};
use lieb::ybe::{ce_differential, Cochain, CoefficientModule};
use lieb::LieAlgebra;

/// Matrix of `d: C^q → C^{q+1}` on the basis of cochains supported on one index set.
fn differential_matrix(alg: &LieAlgebra, module: &CoefficientModule, q: usize) -> lieb::Result<Matrix> {
    let n = alg.dim();
    let d = module.dim();
    let keys = lieb::combinatorics::combinations(n, q);
    let targets = lieb::combinatorics::combinations(n, q + 1);
    let mut columns = Vec::new();
    for key in &keys {
        for k in 0..d {
            let mut c = Cochain::zero(q, d);
            c.set(key.clone(), lieb::linalg::unit(d, k));
            let dc = ce_differential(alg, module, &c)?;
            columns.push(targets.iter().flat_map(|t| dc.get(t)).collect::<Vec<_>>());
        }
    }
    Ok(Matrix::from_columns(binomial(n, q + 1) * d, &columns))
}

fn main() -> lieb::Result<()> {
    for name in ["sl2", "h", "r3_0p"] {
        let (g, _) = catalog::get_algebra(name, &[])?;
        let n = g.dim();
        for m in 1..=2 {
            let module = CoefficientModule::exterior(&g, m)?;
            let mut dims = Vec::new();
            for q in 0..n {
                let d_in = if q == 0 { None } else { Some(differential_matrix(&g, &module, q - 1)?) };
                let d_out = differential_matrix(&g, &module, q)?;
                let cocycles = Subspace::kernel_of(Ambient::Algebra, &d_out).dim();
                let coboundaries = d_in.map_or(0, |m| m.rank());
                dims.push(cocycles - coboundaries);
            }
            println!("{name}: H^q(g, Λ^{m} g) for q = 0..{}: {dims:?}", n - 1);
        }
    }
    Ok(())
}
