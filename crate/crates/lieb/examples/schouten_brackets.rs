//! Wedge products and Schouten brackets of multivectors.
//!
//! Run with `cargo run --example schouten_brackets`.

use lieb::catalog;
use lieb::io::{format_multivector, parse_multivector, Symbols};
use lieb::{schouten, wedge};

fn main() -> lieb::Result<()> {
    let (alg, _) = catalog::get_algebra("sl2", &[])?;
    let names = alg.basis_names();
    let parse = |text: &str| parse_multivector(names, text, &Symbols::new());
    let show = |w: &lieb::MultiVector| format_multivector(w, names);

    let x = parse("e1")?;
    let y = parse("e2 + 2*e3")?;
    let xy = wedge(&x, &y)?;
    println!("{} ^ {} = {}", show(&x), show(&y), show(&xy));

    for (a, b) in [("e1", "e2"), ("e1", "e23"), ("e12", "e13"), ("e12 + e3", "e12 - e13")] {
        let (a, b) = (parse(a)?, parse(b)?);
        println!("[{}, {}] = {}", show(&a), show(&b), show(&schouten(&alg, &a, &b)?));
    }

    // graded Jacobi identity on three bivectors
    let (p, q, r) = (parse("e12")?, parse("e13")?, parse("e23 + e12")?);
    let lhs = schouten(&alg, &p, &schouten(&alg, &q, &r)?)?;
    let rhs = &schouten(&alg, &schouten(&alg, &p, &q)?, &r)? + &schouten(&alg, &q, &schouten(&alg, &p, &r)?)?;
    println!("[p, [q, r]] = {}, [[p, q], r] + [q, [p, r]] = {}", show(&lhs), show(&rhs));
    Ok(())
}
