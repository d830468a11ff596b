//! Generate all isomorphism classes of a small order, print a census by
//! edge count, and round-trip every class through graph6.
//!
//! Run with: cargo run --release --example graph6_census

use nivs::{from_graph6, gen_graphs, gen_trees, to_graph6};

fn main() -> nivs::Result<()> {
    let order = 6;
    let graphs = gen_graphs(order)?;
    println!("{} isomorphism classes of order {order}", graphs.len());

    let max_size = order * (order - 1) / 2;
    let mut by_size = vec![0usize; max_size + 1];
    for g in &graphs {
        by_size[g.size()] += 1;
        let enc = to_graph6(g)?;
        assert_eq!(&from_graph6(&enc)?, g);
    }
    for (size, count) in by_size.iter().enumerate() {
        println!("  {size:>2} edges: {count} classes");
    }

    for n in 1..=12 {
        println!("free trees of order {n:>2}: {}", gen_trees(n)?.len());
    }
    Ok(())
}
