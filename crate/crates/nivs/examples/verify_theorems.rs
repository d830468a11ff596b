//! Run the built-in verifiers over small orders and print their reports.
//!
//! Run with: cargo run --release --example verify_theorems

use nivs::{verify_theorem, TheoremId};

fn main() -> nivs::Result<()> {
    let jobs = [
        (TheoremId::NgLower, 1..=7),
        (TheoremId::NgLowerTree, 2..=10),
        (TheoremId::NgMax, 6..=8),
        (TheoremId::Sigma1Max, 6..=8),
    ];
    for (theorem, orders) in jobs {
        let report = verify_theorem(theorem, orders)?;
        for check in &report.orders {
            println!(
                "{} n={}: {} (extremal value {}, attainers {:?})",
                theorem.name(),
                check.order,
                if check.pass { "pass" } else { "FAIL" },
                check.observed_extremal_value,
                check.observed_attainers,
            );
        }
    }
    Ok(())
}
