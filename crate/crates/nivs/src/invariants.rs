//! Counting k-nearly independent vertex subsets.
//!
//! A vertex subset is k-nearly independent when the subgraph it induces has
//! exactly k edges; `sigma_k` counts such subsets. `sigma0` is the
//! Merrifield-Simmons index. `sigma1` uses the deletion recursion
//!
//! ```text
//! sigma1(G) = sigma1(G - v) + sigma1(G - N[v])
//!           + sum over u in N(v) of sigma0(G - (N[u] ∪ N[v]))
//! ```
//!
//! with both recursions memoized on the surviving-vertex mask of the root
//! graph. An independent oracle enumerates all 2^n subsets for verification.

use crate::error::{Error, Result};
use crate::graph::{bit, Graph};
use serde::Serialize;
use std::collections::HashMap;

/// Counts are exact. With the 64-vertex capacity every sigma_k is at most
/// 2^64 and every sum of interest at most 2^66, far inside u128 range, so
/// arithmetic on counts cannot wrap.
pub type Count = u128;

/// Largest order accepted by the 2^n subset-enumeration oracle.
pub const ORACLE_MAX_ORDER: usize = 28;

/// Pivot rule for the deletion recursions: maximum degree within the
/// surviving subgraph, ties broken by smallest vertex index.
fn max_degree_pivot(rows: &[u64], mask: u64) -> usize {
    let mut best_v = mask.trailing_zeros() as usize;
    let mut best_deg = (rows[best_v] & mask).count_ones();
    let mut rest = mask & (mask - 1);
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let deg = (rows[v] & mask).count_ones();
        if deg > best_deg {
            best_deg = deg;
            best_v = v;
        }
    }
    best_v
}

pub(crate) fn sigma0_masked(
    rows: &[u64],
    mask: u64,
    pivot: &impl Fn(&[u64], u64) -> usize,
    memo: &mut HashMap<u64, Count>,
) -> Count {
    if mask == 0 {
        return 1;
    }
    if let Some(&cached) = memo.get(&mask) {
        return cached;
    }
    let v = pivot(rows, mask);
    let without_v = mask & !bit(v);
    let without_nv = mask & !(rows[v] | bit(v));
    let result =
        sigma0_masked(rows, without_v, pivot, memo) + sigma0_masked(rows, without_nv, pivot, memo);
    memo.insert(mask, result);
    result
}

pub(crate) fn sigma1_masked(
    rows: &[u64],
    mask: u64,
    pivot: &impl Fn(&[u64], u64) -> usize,
    memo0: &mut HashMap<u64, Count>,
    memo1: &mut HashMap<u64, Count>,
) -> Count {
    if mask.count_ones() <= 1 {
        return 0;
    }
    if let Some(&cached) = memo1.get(&mask) {
        return cached;
    }
    let v = pivot(rows, mask);
    let without_v = mask & !bit(v);
    let closed_v = (rows[v] & mask) | bit(v);
    let mut result = sigma1_masked(rows, without_v, pivot, memo0, memo1)
        + sigma1_masked(rows, mask & !closed_v, pivot, memo0, memo1);
    let mut neighbors = rows[v] & mask;
    while neighbors != 0 {
        let u = neighbors.trailing_zeros() as usize;
        neighbors &= neighbors - 1;
        let closed_u = (rows[u] & mask) | bit(u);
        result += sigma0_masked(rows, mask & !(closed_u | closed_v), pivot, memo0);
    }
    memo1.insert(mask, result);
    result
}

/// Number of independent vertex subsets, the empty set included.
pub fn sigma0(g: &Graph) -> Count {
    let mut memo = HashMap::new();
    sigma0_masked(g.rows(), g.full_mask(), &max_degree_pivot, &mut memo)
}

/// Number of vertex subsets inducing exactly one edge, by the deletion
/// recursion.
pub fn sigma1(g: &Graph) -> Count {
    let mut memo0 = HashMap::new();
    let mut memo1 = HashMap::new();
    sigma1_masked(
        g.rows(),
        g.full_mask(),
        &max_degree_pivot,
        &mut memo0,
        &mut memo1,
    )
}

#[cfg(test)]
pub(crate) fn sigma1_with_pivot(g: &Graph, pivot: impl Fn(&[u64], u64) -> usize) -> Count {
    let mut memo0 = HashMap::new();
    let mut memo1 = HashMap::new();
    sigma1_masked(g.rows(), g.full_mask(), &pivot, &mut memo0, &mut memo1)
}

/// Full distribution of subset counts by induced edge count: entry m is the
/// number of vertex subsets inducing exactly m edges. Visits all 2^n subsets
/// in Gray-code order, so each step updates the edge count in O(1).
pub fn sigma_profile(g: &Graph) -> Result<Vec<Count>> {
    let n = g.order();
    if n > ORACLE_MAX_ORDER {
        return Err(Error::OracleBudget {
            order: n,
            max: ORACLE_MAX_ORDER,
        });
    }
    let max_edges = n * n.saturating_sub(1) / 2;
    let mut counts = vec![0 as Count; max_edges + 1];
    let mut subset = 0u64;
    let mut edges = 0usize;
    counts[0] = 1; // the empty set
    for i in 1u64..1u64 << n {
        let v = i.trailing_zeros() as usize;
        if subset & bit(v) == 0 {
            edges += (g.row(v) & subset).count_ones() as usize;
            subset |= bit(v);
        } else {
            subset &= !bit(v);
            edges -= (g.row(v) & subset).count_ones() as usize;
        }
        counts[edges] += 1;
    }
    Ok(counts)
}

/// Exact sigma_k by exhaustive subset enumeration; independent of the
/// deletion recursion and intended for verification scale.
pub fn sigma_k_oracle(g: &Graph, k: usize) -> Result<Count> {
    let profile = sigma_profile(g)?;
    Ok(profile.get(k).copied().unwrap_or(0))
}

/// True iff every edge's closed-neighborhood union covers the vertex set;
/// vacuously true for edgeless graphs. Good graphs satisfy
/// `sigma1(G) = |E(G)|`.
pub fn is_good(g: &Graph) -> bool {
    let full = g.full_mask();
    for (u, v) in g.edges() {
        if g.row(u) | g.row(v) | bit(u) | bit(v) != full {
            return false;
        }
    }
    true
}

/// The Nordhaus-Gaddum sum `sigma1(G) + sigma1(complement(G))`.
pub fn ng_sum(g: &Graph) -> Count {
    sigma1(g) + sigma1(&g.complement())
}

/// Per-graph summary of the sigma invariants.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvariantReport {
    pub order: usize,
    pub size: usize,
    pub sigma0: Count,
    pub sigma1: Count,
    /// Extra sigma_k values from the enumeration oracle, keyed by k.
    #[serde(skip_serializing_if = "std::collections::BTreeMap::is_empty")]
    pub sigma_k_extra: std::collections::BTreeMap<usize, Count>,
    pub ng_sum: Count,
    pub is_good: bool,
}

pub fn report(g: &Graph, extra_k: &[usize]) -> Result<InvariantReport> {
    let mut sigma_k_extra = std::collections::BTreeMap::new();
    if !extra_k.is_empty() {
        let profile = sigma_profile(g)?;
        for &k in extra_k {
            sigma_k_extra.insert(k, profile.get(k).copied().unwrap_or(0));
        }
    }
    Ok(InvariantReport {
        order: g.order(),
        size: g.size(),
        sigma0: sigma0(g),
        sigma1: sigma1(g),
        sigma_k_extra,
        ng_sum: ng_sum(g),
        is_good: is_good(g),
    })
}
