//! Group gradations: induced decompositions of exterior powers, root
//! analysis and limit degrees.
//!
//! Run with `cargo run --example gradations`.

use lieb::catalog;
use lieb::gradation::{format_degree, gradation_report, induced_decomposition};

fn main() -> lieb::Result<()> {
    for name in ["sl2", "su2", "so22", "so32"] {
        let (alg, grads) = catalog::get_algebra(name, &[])?;
        for g in &grads {
            println!("{name} graded by {g}");
            for m in 1..=2 {
                let d = induced_decomposition(&alg, g, m)?;
                let dims: Vec<String> = d
                    .members()
                    .iter()
                    .map(|(deg, members)| format!("{}:{}", format_degree(deg), members.len()))
                    .collect();
                println!("  grade {m}: {}", dims.join(" "));
            }
            let report = gradation_report(&alg, g)?;
            println!("  root gradation: {}", report.root.is_root);
            if let Some(reason) = &report.root.reason {
                println!("  ({reason})");
            }
            let limits: Vec<String> = report.limit_degrees.iter().map(|d| format_degree(d)).collect();
            println!("  limit degrees: {}", limits.join(" "));
        }
    }
    Ok(())
}
