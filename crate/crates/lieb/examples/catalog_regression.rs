//! Runs every catalog entry against its stored expected results.
//!
//! Run with `cargo run --example catalog_regression`.

use lieb::catalog::{self, Status};

fn main() -> lieb::Result<()> {
    for summary in catalog::list()? {
        let report = catalog::regress(&summary.name, &[])?;
        println!(
            "{:>12} {:<28} {} passed, {} skipped, {} failed",
            summary.name,
            summary.title,
            report.count(Status::Pass),
            report.count(Status::Skip),
            report.count(Status::Fail)
        );
        for failure in report.failures() {
            println!("{:>14} {}: {}", "", failure.id, failure.detail);
        }
    }
    Ok(())
}
