//! Classical and modified Yang-Baxter equations, coboundary cocommutators
//! and orbit dimensions.
//!
//! Run with `cargo run --example yang_baxter`.

use lieb::catalog;
use lieb::io::{format_multivector, parse_multivector, Symbols};
use lieb::scalar::frac;
use lieb::ybe::{certify_r, cocommutator, integer_grid, is_cocycle, orbit_dimension, residual_grid, same_coproduct};

fn main() -> lieb::Result<()> {
    let (g, _) = catalog::get_algebra("r3_lambda", &[frac(1, 3)])?;
    let names = g.basis_names();
    let parse = |t: &str| parse_multivector(names, t, &Symbols::new());

    for text in ["e12", "e13 + e23", "e12 + e13"] {
        let r = parse(text)?;
        let v = certify_r(&g, &r)?;
        println!(
            "r = {text}: [r, r] = {}, classical: {}, modified: {}",
            format_multivector(&v.residual, names),
            v.is_cybe,
            v.is_mcybe
        );
        let delta = cocommutator(&g, &r)?;
        println!(
            "  cocommutator is a cocycle: {}, orbit dimension {}",
            is_cocycle(&g, &delta)?,
            orbit_dimension(&g, &r)?
        );
    }

    let basis = [parse("e12")?, parse("e13")?, parse("e23")?];
    let grid = residual_grid(&g, &basis, &integer_grid(3, -1, 1))?;
    let solutions = grid.iter().filter(|p| p.residual.is_zero()).count();
    println!("{solutions} of {} integer points in [-1, 1]^3 solve the classical equation", grid.len());

    let (h, _) = catalog::get_algebra("h", &[])?;
    let hp = |t: &str| parse_multivector(h.basis_names(), t, &Symbols::new());
    let c = same_coproduct(&h, &hp("e23 + e13")?, &hp("e23")?)?;
    println!("h: e23 + e13 and e23 define the same cocommutator: {}", c.same());
    Ok(())
}
