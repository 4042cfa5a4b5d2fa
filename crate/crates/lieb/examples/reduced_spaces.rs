//! Quotients of exterior powers by their invariants, the induced bracket and
//! invariant forms on the quotient.
//!
//! Run with `cargo run --example reduced_spaces`.

use lieb::catalog;
use lieb::invariants::{reduced_invariant_forms, reduced_schouten};
use lieb::io::{parse_multivector, Symbols};
use lieb::scalar::format_scalar;
use lieb::{ReducedSpace, Symmetry};

fn main() -> lieb::Result<()> {
    for name in ["r3_m1", "r3_0p", "sl2"] {
        let (g, _) = catalog::get_algebra(name, &[])?;
        let r1 = ReducedSpace::new(&g, 1)?;
        let r2 = ReducedSpace::new(&g, 2)?;
        println!("{name}: reduced grade 2 has dimension {} (invariants {})", r2.dim(), r2.invariant().dim());

        let parse = |t: &str| parse_multivector(g.basis_names(), t, &Symbols::new());
        let a = r1.project_multivector(&parse("e1")?)?;
        let b = r2.project_multivector(&parse("e12")?)?;
        let ab = reduced_schouten(&g, &r1, &r2, &a, &b)?;
        let ab: Vec<String> = ab.iter().map(format_scalar).collect();
        println!("  [[e1], [e12]] in reduced coordinates: ({})", ab.join(", "));

        for symmetry in [Symmetry::Symmetric, Symmetry::Antisymmetric] {
            let forms = reduced_invariant_forms(&g, &r2, 2, symmetry)?;
            println!("  invariant {symmetry} forms on the quotient: dimension {}", forms.dim());
        }
    }
    Ok(())
}
