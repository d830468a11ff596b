//! Compute sigma invariants for a few hand-built graphs.
//!
//! Run with: cargo run --example compute_invariants

use nivs::invariants::{is_good, ng_sum, sigma0, sigma1, sigma_profile};
use nivs::{to_graph6, Graph};

fn main() -> nivs::Result<()> {
    let c5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])?;
    let star = Graph::from_edges(6, &[(0, 1), (0, 2), (0, 3), (0, 4), (0, 5)])?;
    let three_k2 = Graph::from_edges(6, &[(0, 1), (2, 3), (4, 5)])?;

    for (name, g) in [("C5", &c5), ("K(1,5)", &star), ("3K2", &three_k2)] {
        println!(
            "{name} ({}): sigma0 = {}, sigma1 = {}, NG sum = {}, good = {}",
            to_graph6(g)?,
            sigma0(g),
            sigma1(g),
            ng_sum(g),
            is_good(g),
        );
        let profile = sigma_profile(g)?;
        let summary: Vec<String> = profile
            .iter()
            .enumerate()
            .filter(|(_, c)| **c > 0)
            .map(|(k, c)| format!("sigma{k}={c}"))
            .collect();
        println!("  full profile: {}", summary.join(" "));
    }
    Ok(())
}
