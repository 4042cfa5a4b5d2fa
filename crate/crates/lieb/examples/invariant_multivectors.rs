//! Invariant multivectors across the catalog and the correspondence between
//! traceless ideals and decomposable invariants.
//!
//! Run with `cargo run --example invariant_multivectors`.

use lieb::catalog;
use lieb::invariants::{invariant_to_ideal, nilpotent_invariant_generators};
use lieb::io::{format_multivector, parse_multivector, Symbols};
use lieb::{invariant_subspace, MultiVector};

fn main() -> lieb::Result<()> {
    for name in catalog::names() {
        let (alg, _) = catalog::get_algebra(name, &[])?;
        let n = alg.dim();
        let mut line = format!("{name:>12}:");
        for m in 1..=n {
            let inv = invariant_subspace(&alg, m)?;
            line.push_str(&format!(" {}", inv.dim()));
        }
        println!("{line}   (dimensions of the invariants by grade)");
    }

    let (h, _) = catalog::get_algebra("h", &[])?;
    let names = h.basis_names();
    let inv = invariant_subspace(&h, 2)?;
    for v in inv.basis() {
        println!("h: invariant bivector {}", format_multivector(&MultiVector::from_coords(3, 2, v)?, names));
    }
    let w = parse_multivector(names, "e13", &Symbols::new())?;
    let bridge = invariant_to_ideal(&h, &w)?;
    println!("h: e13 is decomposable and spans an ideal of dimension {}", bridge.ideal.dim());

    let report = nilpotent_invariant_generators(&h)?;
    println!("h: nilpotency index {}, {} generator families", report.nilpotency_index, report.generators.len());
    Ok(())
}
