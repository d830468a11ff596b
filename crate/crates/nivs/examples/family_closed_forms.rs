//! Build the extremal families and check their closed-form NG values
//! against direct computation.
//!
//! Run with: cargo run --example family_closed_forms

use nivs::{build, closed_form_ng, ng_sum, to_graph6, Family, FamilySpec};

fn main() -> nivs::Result<()> {
    for order in 6..=10 {
        println!("order {order}:");
        for family in [
            Family::Complete,
            Family::Edgeless,
            Family::Star,
            Family::MK2PlusIsolated { m: 3 },
        ] {
            let spec = FamilySpec::new(family, order);
            let g = build(&spec)?;
            let closed = closed_form_ng(&spec)?;
            let computed = ng_sum(&g);
            assert_eq!(closed, computed);
            println!(
                "  {:<10} {}  NG sum = {closed}",
                family.name(),
                to_graph6(&g)?
            );
        }
    }
    Ok(())
}
