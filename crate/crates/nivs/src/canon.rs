//! Canonical labeling by exhaustive relabeling search.
//!
//! The canonical form of a graph is the graph6 string of the
//! lexicographically minimal relabeling: among all vertex orderings, the one
//! whose upper-triangle bit sequence x(0,1), x(0,2), x(1,2), ... is smallest.
//! Two graphs have equal canonical forms iff they are isomorphic.
//!
//! The search places vertices position by position and prunes any branch
//! whose bit-column prefix already exceeds the best found. Interchangeable
//! twin vertices (swapping them is an automorphism) are explored only once
//! per node. Practical up to [`MAX_CANON_ORDER`]; the orders needed by the
//! extremal scans are at most 12.

use crate::error::{Error, Result};
use crate::graph::{bit, Graph};
use crate::graph6::to_graph6;
use serde::Serialize;

pub const MAX_CANON_ORDER: usize = 12;

/// graph6 string of the minimal relabeling; equal iff isomorphic.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize)]
#[serde(transparent)]
pub struct CanonicalForm(String);

impl CanonicalForm {
    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn into_string(self) -> String {
        self.0
    }

    /// Decodes the canonical representative back into a labeled graph.
    pub fn to_graph(&self) -> Graph {
        crate::graph6::from_graph6(&self.0).expect("canonical form is always valid graph6")
    }
}

impl std::fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    Ok(CanonicalForm(to_graph6(&canonical_graph(g)?)?))
}

/// The lexicographically minimal relabeling of `g` as a labeled graph.
pub fn canonical_graph(g: &Graph) -> Result<Graph> {
    let n = g.order();
    if n > MAX_CANON_ORDER {
        return Err(Error::CanonOrder {
            order: n,
            max: MAX_CANON_ORDER,
        });
    }
    if n <= 1 {
        return Ok(g.clone());
    }
    let mut search = Search {
        n,
        adj: [0; MAX_CANON_ORDER],
        placed: [0; MAX_CANON_ORDER],
        best: [u16::MAX; MAX_CANON_ORDER],
    };
    search.adj[..n].copy_from_slice(g.rows());
    search.descend(0, 0);

    // Rebuild adjacency rows from the winning bit columns: bit i of column p
    // (with bit 0 as the adjacency to position p-1) records edge {i, p}.
    let mut adj = vec![0u64; n];
    for p in 1..n {
        let col = search.best[p];
        for i in 0..p {
            if col >> (p - 1 - i) & 1 == 1 {
                adj[i] |= bit(p);
                adj[p] |= bit(i);
            }
        }
    }
    Ok(Graph::from_rows(n, adj))
}

struct Search {
    n: usize,
    adj: [u64; MAX_CANON_ORDER],
    /// Vertices assigned to positions 0..depth.
    placed: [usize; MAX_CANON_ORDER],
    /// Best column sequence found so far; column p holds the adjacency bits
    /// of position p towards positions 0..p, bit for position 0 most
    /// significant. Entries past an improved prefix are reset to MAX.
    best: [u16; MAX_CANON_ORDER],
}

impl Search {
    fn descend(&mut self, depth: usize, used: u64) {
        if depth == self.n {
            return;
        }
        // Candidate vertices with their would-be columns, cheapest first.
        let mut cands: [(u16, usize); MAX_CANON_ORDER] = [(0, 0); MAX_CANON_ORDER];
        let mut len = 0;
        for v in 0..self.n {
            if used & bit(v) != 0 {
                continue;
            }
            let mut col = 0u16;
            for i in 0..depth {
                col = col << 1 | (self.adj[v] >> self.placed[i] & 1) as u16;
            }
            cands[len] = (col, v);
            len += 1;
        }
        cands[..len].sort_unstable();

        for c in 0..len {
            let (col, v) = cands[c];
            if col > self.best[depth] {
                break; // sorted: everything after is worse
            }
            // Skip v if an earlier equal-column candidate is its twin:
            // the transposition is a graph automorphism, the subtrees match.
            let mut dup = false;
            for &(pcol, u) in &cands[..c] {
                if pcol == col
                    && (self.adj[u] ^ self.adj[v]) & !(bit(u) | bit(v)) == 0
                {
                    dup = true;
                    break;
                }
            }
            if dup {
                continue;
            }
            if col < self.best[depth] {
                // This prefix beats every completion of the old best.
                self.best[depth] = col;
                for q in depth + 1..self.n {
                    self.best[q] = u16::MAX;
                }
            }
            self.placed[depth] = v;
            self.descend(depth + 1, used | bit(v));
        }
    }
}
