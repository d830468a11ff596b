//! Exhaustive extremal scans over all isomorphism classes of small orders.
//!
//! Run with: cargo run --release --example extremal_search

use nivs::{extremal_scan, GraphClass, Objective, ScanSource};

fn main() -> nivs::Result<()> {
    for order in 4..=8 {
        let max = extremal_scan(order, Objective::NgMax, GraphClass::All, ScanSource::Builtin)?;
        let min = extremal_scan(order, Objective::NgMin, GraphClass::All, ScanSource::Builtin)?;
        println!(
            "order {order} ({} classes): NG sum ranges from {} to {}, max attained by {:?}",
            max.classes_scanned,
            min.value,
            max.value,
            max.attainers.iter().map(|a| a.as_str()).collect::<Vec<_>>(),
        );
    }

    for order in 4..=10 {
        let r = extremal_scan(
            order,
            Objective::NgMinTree,
            GraphClass::Trees,
            ScanSource::Builtin,
        )?;
        println!(
            "trees of order {order} ({} classes): min NG sum = {} at {:?}",
            r.classes_scanned,
            r.value,
            r.attainers.iter().map(|a| a.as_str()).collect::<Vec<_>>(),
        );
    }
    Ok(())
}
