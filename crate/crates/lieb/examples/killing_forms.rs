//! Killing forms of catalog algebras and their extensions to exterior powers.
//!
//! Run with `cargo run --example killing_forms`.

use lieb::algebra::trace_form;
use lieb::catalog;
use lieb::forms::{casimir_induced_form, extend_form, inverse_killing};
use lieb::{killing_form, Symmetry};

fn main() -> lieb::Result<()> {
    for name in ["sl2", "su2", "h"] {
        let (alg, _) = catalog::get_algebra(name, &[])?;
        let k = killing_form(&alg);
        println!("{name}: Killing form\n{}", k.to_matrix()?);
        for m in 2..=alg.dim() {
            println!("  extension to grade {m}\n{}", extend_form(&k, m)?.to_matrix()?);
        }
    }

    // the cubic antisymmetric trace form of sl2 is a multiple of the determinant
    let (sl2, _) = catalog::get_algebra("sl2", &[])?;
    let t3 = trace_form(&sl2, 3, Symmetry::Antisymmetric)?;
    println!("sl2: Tr(ad_x ad_y ad_z) antisymmetrised, value on (e1, e2, e3) = {}", t3.entry(&[0, 1, 2]));

    // a form built from the inverse Killing form through the Casimir construction
    if let Some(c) = inverse_killing(&sl2) {
        let induced = casimir_induced_form(&sl2, &c)?;
        println!("sl2: Casimir-induced form (invariant: {})\n{}", induced.invariant, induced.form.to_matrix()?);
    }
    Ok(())
}
