//! Solving for invariant multilinear forms on exterior powers.
//!
//! Run with `cargo run --example invariant_forms`.

use lieb::catalog;
use lieb::forms::{forms_of, invariant_forms};
use lieb::Symmetry;

fn main() -> lieb::Result<()> {
    for name in ["sl2", "su2", "h", "r3_0p"] {
        let (alg, _) = catalog::get_algebra(name, &[])?;
        let n = alg.dim();
        for m in 1..=2 {
            for symmetry in [Symmetry::Symmetric, Symmetry::Antisymmetric] {
                let space = invariant_forms(&alg, m, 2, symmetry)?;
                println!("{name}: invariant {symmetry} bilinear forms on grade {m}: dimension {}", space.dim());
                let size = lieb::combinatorics::binomial(n, m);
                for form in forms_of(&space, size, m, 2)? {
                    println!("{}", form.to_matrix()?);
                }
            }
        }
    }
    Ok(())
}
