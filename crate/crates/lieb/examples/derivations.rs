//! Derivation algebras, inner derivations and structural invariants.
//!
//! Run with `cargo run --example derivations`.

use lieb::algebra::{derivation_algebra, structure_report};
use lieb::catalog;

fn main() -> lieb::Result<()> {
    for name in catalog::names() {
        let (g, _) = catalog::get_algebra(name, &[])?;
        let der = derivation_algebra(&g);
        let s = structure_report(&g);
        let lcs: Vec<usize> = s.lower_central.iter().map(|x| x.dim()).collect();
        let derived: Vec<usize> = s.derived.iter().map(|x| x.dim()).collect();
        println!(
            "{name:>12}: der {:>2}, inner {:>2}, center {}, lower central {lcs:?}, derived {derived:?}, unimodular {}",
            der.der.dim(),
            der.inner.dim(),
            s.center.dim(),
            s.unimodular
        );
    }
    Ok(())
}
